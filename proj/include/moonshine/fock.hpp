#pragma once

// The free-field vertex superalgebra S(h^_-) over a formed superspace, with the
// central element K acting as 1.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moonshine/superlinear.hpp"

namespace moonshine {

/// Creation operator e_index(mode) with mode <= -1.
struct ModeFactor {
  int mode = -1;
  std::size_t index = 0;
  auto operator<=>(const ModeFactor&) const = default;
};

/// Product of creation operators applied to the vacuum, in canonical order
/// (mode ascending, then basis index ascending).
class FockMonomial {
 public:
  FockMonomial() = default;

  /// Sorts the factors into canonical order. Returns the Koszul sign of the
  /// reordering, or nullopt when an odd factor repeats (the state vanishes).
  static std::optional<std::pair<FockMonomial, int>> normalize(const FormedSpace& space,
                                                               std::vector<ModeFactor> factors);

  const std::vector<ModeFactor>& factors() const { return factors_; }
  bool is_vacuum() const { return factors_.empty(); }
  int weight() const;
  Parity parity(const FormedSpace& space) const;

  auto operator<=>(const FockMonomial&) const = default;

 private:
  std::vector<ModeFactor> factors_;
};

class FockState {
 public:
  FockState() = default;
  explicit FockState(SpacePtr ambient) : ambient_(std::move(ambient)) {}
  static FockState vacuum(SpacePtr ambient);
  /// Product of the given creation factors (any order) on the vacuum.
  static FockState monomial(SpacePtr ambient, std::vector<ModeFactor> factors, const Rational& coef = 1);

  const SpacePtr& ambient() const { return ambient_; }
  const FormedSpace& space() const { return *ambient_; }
  const std::map<FockMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const FockMonomial& m, const Rational& c);
  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  FockState& operator*=(const Rational& c);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(FockState a, const Rational& c) { return a *= c; }

  /// Largest monomial weight; 0 for the zero state.
  int max_weight() const;
  /// Weight of a weight-homogeneous state, nullopt otherwise.
  std::optional<int> homogeneous_weight() const;
  /// Parity of a parity-homogeneous nonzero state.
  Parity parity() const;
  /// The state with its vacuum component removed.
  FockState without_vacuum() const;

  /// Debug rendering, e.g. "2*e1(-2)e1(-1)|0>".
  std::string to_text() const;

  friend bool operator==(const FockState& a, const FockState& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const FockState& a, const FockState& b) { return a.terms_ < b.terms_; }

 private:
  SpacePtr ambient_;
  std::map<FockMonomial, Rational> terms_;
};

/// a(m) acting on s. m <= -1 creates, m >= 1 contracts, m = 0 annihilates.
FockState apply_mode(const Vector& a, int m, const FockState& s);
FockState apply_basis_mode(std::size_t index, int m, const FockState& s);

/// u(k)v for any integer k, via the normal-ordered mode expansion of Y(u, z).
FockState nth_product(const FockState& u, int k, const FockState& v);

FockState translation(const FockState& s);
Rational vacuum_coeff(const FockState& s);

}  // namespace moonshine
