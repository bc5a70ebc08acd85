#pragma once

// Motivic generating series over the Laurent ring Z[L^{1/2}, L^{-1/2}] and its
// specializations to Hodge-Deligne polynomials, chi_{-y}-genera and Euler
// characteristics.

#include <cstddef>

#include "mcc/lambda.hpp"
#include "mcc/lpoly.hpp"
#include "mcc/series.hpp"

namespace mcc {

/// L^{power}, power a half-integer.
LPoly motive_L(const Rational& power = Rational(1));
/// y^{power} in the genus ring.
LPoly genus_y(const Rational& power = Rational(1));

/// [n]_L! = (L^n - 1)(L^{n-1} - 1)...(L - 1).
LPoly l_factorial(long n);
/// [n]_L! / ([k]_L! [n-k]_L!), computed by exact division.
LPoly l_binomial(long n, long k);

/// 1 + t + [d choose 1]_L t^2 + [d+1 choose 2]_L t^3, truncated at order <= 3.
PSeries punctual_hilb_small(int d, std::size_t order);
/// alpha_1..alpha_3 in closed form: 1, [d]_L - 1, [d+1 choose 2]_L - [d]_L.
EulerExponents<LPoly> punctual_exponents_closed_form(int d);
/// euler_log of punctual_hilb_small(d, 3), cross-checked against the closed form.
EulerExponents<LPoly> punctual_exponents_small(int d);
/// prod_k (1 - t^k)^{-L^{k-1}}.
PSeries surface_punctual_series(std::size_t order);
/// Euler exponents alpha_1..alpha_N of the punctual series: any order for d <= 2,
/// order <= 3 otherwise.
EulerExponents<LPoly> punctual_exponents(int d, std::size_t order);
/// Punctual Hilbert series of C^d at 0: any order for d <= 2, order <= 3 otherwise.
PSeries punctual_series(int d, std::size_t order);

/// Ring maps out of the motive ring.
LPoly spec_e(const LPoly& m);
LPoly spec_chi_minus_y(const LPoly& m);
Rational spec_chi(const LPoly& m);
/// e(X; u, v) -> chi_{-y}(X) = e(X; y, 1).
LPoly hodge_to_chi_minus_y(const LPoly& e);
/// e(X; u, v) -> chi(X) = e(X; 1, 1).
Rational hodge_to_chi(const LPoly& e);

/// Maps a motive-ring series coefficientwise into the motive, hodge, genus or scalar ring.
PSeries specialize_series(const PSeries& s, const VarSet& target);
PSeries chi_minus_y_series(const PSeries& s);
RSeries chi_series(const PSeries& s);

/// (punctual)^{[X]} for a class X living in the motive, hodge or genus ring.
PSeries hilb_motive_series(const LPoly& x, const PSeries& punctual);
PSeries hilb_motive_series(const LPoly& x, int d, std::size_t order);

/// lambda_t(e(X)) = sum e(X^{(n)}) t^n.
PSeries kapranov_zeta(const LPoly& e, std::size_t order);
/// (1 + t)^{[X]}.
PSeries config_space_series(const LPoly& x, std::size_t order);

/// ((-L^{1/2})^{-k} - (-L^{1/2})^k) / (L (1 - L)).
LPoly virtual_alpha(long k);
/// Euler product of the virtual exponents read with t -> -t.
PSeries virtual_punctual_series(std::size_t order);
PSeries virtual_hilb_series(const LPoly& x, std::size_t order);

/// prod_k (1 - t^k)^{-k}.
RSeries macmahon_series(std::size_t order);

}  // namespace mcc
