#pragma once

// Finite graded models of even Borel-Moore homology with stored characteristic classes.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcc/lpoly.hpp"

namespace mcc {

struct BasisElement {
  std::string id;
  /// Homological degree k, the element lives in H_{2k}.
  int deg = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Element of H_even(X) (x) Q[y^{1/2}, y^{-1/2}]: one genus-ring coefficient per basis element.
class HClass {
 public:
  HClass() = default;
  explicit HClass(std::size_t basis_size) : c_(basis_size, LPoly(vars::genus())) {}
  explicit HClass(std::vector<LPoly> coeffs);

  [[nodiscard]] std::size_t size() const { return c_.size(); }
  [[nodiscard]] const LPoly& operator[](std::size_t i) const { return c_.at(i); }
  void set(std::size_t i, LPoly value);
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] const std::vector<LPoly>& coeffs() const { return c_; }

  HClass& operator+=(const HClass& o);
  HClass& operator-=(const HClass& o);
  friend HClass operator+(HClass a, const HClass& b) { return a += b; }
  friend HClass operator-(HClass a, const HClass& b) { return a -= b; }
  /// Multiplication by a genus-ring scalar.
  friend HClass operator*(const LPoly& s, const HClass& a);
  friend HClass operator*(const Rational& s, const HClass& a);
  friend bool operator==(const HClass&, const HClass&) = default;

 private:
  std::vector<LPoly> c_;
};

struct HomologyModel {
  std::string name;
  int dim = 0;
  bool proper = true;
  std::vector<BasisElement> basis;
  /// Index of the class of a point, for proper connected models.
  std::optional<std::size_t> zero_degree_index;
  /// T_{(-y)*}(X).
  HClass ty_class;
  /// Hodge-Deligne polynomial e(X; u, v).
  LPoly e_poly{vars::hodge()};
  /// c_*(X) (x) Q when known independently of ty_class.
  std::optional<HClass> chern_class;

  [[nodiscard]] std::size_t size() const { return basis.size(); }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view id) const;
  /// Throws DomainError on an inconsistent model.
  void validate() const;

  friend bool operator==(const HomologyModel&, const HomologyModel&) = default;
};

/// Pushforward to a point: the sum of the coefficients of degree-0 basis elements
/// (the coefficient of the point class for connected models).
LPoly degree(const HomologyModel& model, const HClass& c);

/// Psi_r: H_{2k} scaled by r^{-k}, y -> y^r.
HClass adams_h(const HomologyModel& model, long r, const HClass& c);

/// Multiplies the H_{2k} part by (1 - y)^{-k} and evaluates at y = 1, cancelling
/// (1 - y) exactly. Throws DomainError on a pole at y = 1.
HClass normalized_y_to_1(const HomologyModel& model, const HClass& c);

}  // namespace mcc
