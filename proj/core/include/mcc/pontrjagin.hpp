#pragma once

// Free symbolic Pontrjagin ring over a homology model.
//
// A monomial is a multiset of atoms d^k_*(e_b); its t-degree is the sum of the k.
// Relations that hold in the true homology of symmetric products are not imposed.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mcc/homology.hpp"
#include "mcc/lambda.hpp"
#include "mcc/series.hpp"

namespace mcc {

/// d^k_*(e_basis).
struct Atom {
  int k = 1;
  int basis = 0;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Sorted multiset of atoms.
using AtomMultiset = std::vector<Atom>;

/// Homogeneous element of the free Pontrjagin ring in a fixed t-degree.
class PontElement {
 public:
  using TermMap = std::map<AtomMultiset, LPoly>;

  explicit PontElement(std::size_t grading = 0) : n_(grading) {}
  /// The unit 1 in degree 0.
  static PontElement unit();

  [[nodiscard]] std::size_t grading() const { return n_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Adds c times the monomial; the multiset is sorted on insertion.
  void add(AtomMultiset m, const LPoly& c);

  PontElement& operator+=(const PontElement& o);
  PontElement& operator-=(const PontElement& o);
  PontElement& operator*=(const LPoly& c);
  PontElement& operator*=(const Rational& c);
  friend PontElement operator+(PontElement a, const PontElement& b) { return a += b; }
  friend PontElement operator-(PontElement a, const PontElement& b) { return a -= b; }
  friend bool operator==(const PontElement&, const PontElement&) = default;

 private:
  std::size_t n_;
  TermMap terms_;
};

/// Product of homogeneous elements: multiset union, gradings add.
PontElement pont_mul(const PontElement& a, const PontElement& b);

/// d^k_*(gamma) as a linear combination of atoms in degree k.
PontElement d_push(std::size_t k, const HClass& gamma);

/// Truncated series sum_n s_n t^n with s_n in degree n.
class PontSeries {
 public:
  PontSeries(std::shared_ptr<const HomologyModel> model, std::size_t order);
  static PontSeries unit(std::shared_ptr<const HomologyModel> model, std::size_t order);

  [[nodiscard]] const HomologyModel& model() const { return *model_; }
  [[nodiscard]] const std::shared_ptr<const HomologyModel>& model_ptr() const { return model_; }
  [[nodiscard]] std::size_t order() const { return c_.size() - 1; }
  [[nodiscard]] const PontElement& operator[](std::size_t n) const { return c_.at(n); }
  [[nodiscard]] const std::vector<PontElement>& components() const { return c_; }
  /// Replaces component n; its grading must be n.
  void set(std::size_t n, PontElement e);
  /// Adds to component n.
  void add(std::size_t n, const PontElement& e);

  PontSeries& operator+=(const PontSeries& o);
  PontSeries& operator-=(const PontSeries& o);
  PontSeries& operator*=(const LPoly& c);
  friend PontSeries operator+(PontSeries a, const PontSeries& b) { return a += b; }
  friend PontSeries operator-(PontSeries a, const PontSeries& b) { return a -= b; }
  friend bool operator==(const PontSeries& a, const PontSeries& b);

  void require_compatible(const PontSeries& o) const;

 private:
  std::shared_ptr<const HomologyModel> model_;
  std::vector<PontElement> c_;
};

using ModelPtr = std::shared_ptr<const HomologyModel>;

ModelPtr share(HomologyModel model);

/// Graded product, truncated at the common order.
PontSeries pont_mul(const PontSeries& a, const PontSeries& b);

/// Power operation P_k: atoms (j, b) -> (kj, b), t^n -> t^{kn}.
PontSeries power_op(std::size_t k, const PontSeries& s);

/// Exponential of a series without constant term.
PontSeries pont_exp(const PontSeries& s);

/// Sum_r d^{rk}_*(Psi_r(gamma)) t^{rk} / r.
PontSeries hom_log_inv(const ModelPtr& model, const HClass& gamma, std::size_t k, std::size_t order);
/// (1 - t^k d^k_*)^{-gamma} = exp(sum_r d^{rk}_*(Psi_r(gamma)) t^{rk} / r).
PontSeries hom_exp_inv(const ModelPtr& model, const HClass& gamma, std::size_t k, std::size_t order);

/// prod_k (1 - t^k d^k_*)^{-b_k gamma}, b = euler_log(A), A over the genus ring.
/// Evaluated as the exponential of the summed logarithms.
PontSeries hom_exponentiation(const ModelPtr& model, const PSeries& a, const HClass& gamma);
/// The same product formed factor by factor with pont_mul.
PontSeries hom_exponentiation_product(const ModelPtr& model, const PSeries& a, const HClass& gamma);

/// exp(sum_r d^{rk}_*(gamma) t^{rk} / r): no Adams operation inside.
PontSeries plain_exp_inv(const ModelPtr& model, const HClass& gamma, std::size_t k, std::size_t order);
/// prod_k plain_exp_inv(b_k gamma, k) with b = euler_log(A) over Q.
PontSeries plain_exponentiation(const ModelPtr& model, const RSeries& a, const HClass& gamma);

/// sum T_{(-y)*}(X^{(n)}) t^n = (1 - t d_*)^{-T}.
PontSeries sym_prod_class_series(const ModelPtr& model, std::size_t order);
/// prod_k (1 - t^k d^k_*)^{-chi_{-y}(alpha_k) T} for the punctual exponents of C^d.
PontSeries hilb_class_series(const ModelPtr& model, int d, std::size_t order);
/// T_{(-y)*}(A^X) = hom_exponentiation(chi_{-y}(A), T); A over the motive ring.
PontSeries mt2_series(const ModelPtr& model, const PSeries& a);
/// (1 - t^2 d^2_*)^{T} (.) (1 - t d_*)^{-T}, the first factor formed as P_2 of (1 - t d_*)^{T}.
PontSeries config_class_series(const ModelPtr& model, std::size_t order);

/// chi(alpha_k) for the punctual exponents of C^d: 1 for d = 2, k for d = 3 (all k).
Rational chi_punctual_exponent(int d, std::size_t k);
/// prod_k (1 - t^k d^k_*)^{-chi(alpha_k) c_*(X)} without Adams operations.
PontSeries chern_class_series(const ModelPtr& model, int d, std::size_t order);

struct VirtualClassSeries {
  /// hom_exponentiation of chi_{-y} of the virtual punctual series.
  PontSeries t_form;
  /// prod_k (1 - t^k d^k_*)^{-chi_{-y}(alpha_k) T} with the virtual alpha_k.
  PontSeries neg_t_form;
};
VirtualClassSeries virtual_class_series(const ModelPtr& model, std::size_t order);

/// pi_* c^A(X^{[n]}) as the coefficient of t^n: the plain exponentiation of the
/// Euler-characteristic virtual punctual series with c_*(X). Read against (-t)^n
/// it is prod_k (1 - t^k d^k_*)^{-k c_*(X)}.
PontSeries aluffi_series(const ModelPtr& model, std::size_t order);

/// Pushforward to a point, a ring homomorphism to t-series over the genus ring.
PSeries pont_degree(const PontSeries& s);

/// Each monomial of homological degree k multiplied by (1 - y)^{-k}, then y = 1.
PontSeries normalized_y_to_1(const PontSeries& s);

/// Sign flip t -> -t.
PontSeries pont_neg_t(const PontSeries& s);

/// "d2*[P1]" style rendering of a multiset.
std::string atom_text(const HomologyModel& model, const AtomMultiset& m);

}  // namespace mcc
