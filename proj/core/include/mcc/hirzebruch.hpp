#pragma once

// Hirzebruch power series and built-in homology models.

#include <cstddef>
#include <string>
#include <vector>

#include "mcc/homology.hpp"
#include "mcc/series.hpp"

namespace mcc {

/// alpha / (1 - e^{-alpha}) through alpha^order.
RSeries todd_series(std::size_t order);

/// Q_y(alpha) = alpha (1 + y e^{-alpha}) / (1 - e^{-alpha}), coefficients in y.
PSeries qy_series(std::size_t order);

/// Qhat_y(alpha) = Q_y(alpha (1 + y)) / (1 + y).
PSeries qyhat_series(std::size_t order);

/// Substitutes a rational value for y in every coefficient.
RSeries eval_y(const PSeries& s, const Rational& y);

HomologyModel point_model();
/// P^d with basis P0..Pd; T class from Q_y(h)^{d+1} / (1 + y) via the Euler sequence.
HomologyModel proj_space_model(int d);
/// Exterior product of two proper models; basis ids "a x b" joined without spaces.
HomologyModel product_model(const HomologyModel& a, const HomologyModel& b);

/// Names accepted by builtin_model: point, P1..P4 and products "PaxPb".
std::vector<std::string> builtin_names();
/// Throws DomainError for unknown names.
HomologyModel builtin_model(const std::string& name);

/// c_*(P^d) = (1 + h)^{d+1} capped with [P^d].
HClass proj_space_chern_class(int d);

/// Psi_{(1-y)} Psi_r T_{(-y)*}(X) at y = 1.
HClass chern_limit(const HomologyModel& model, long r);

/// chern_limit compared against the stored Chern class for every r <= max_r.
/// Returns the common value; throws InternalCheckError on disagreement.
HClass chern_limit_check(const HomologyModel& model, long max_r = 4);

/// The model's Chern class: the stored one, or chern_limit(model, 1).
HClass chern_class_of(const HomologyModel& model);

}  // namespace mcc
