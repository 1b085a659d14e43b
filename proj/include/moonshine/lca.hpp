#pragma once

// Quadratic Lie conformal algebras C_X with their central extension. Elements
// live in the span of L_{a,b}(-m,-n)1 = (1/2) a(-m) b(-n) 1 plus a multiple of
// the central element, which acts as the level r.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "moonshine/fock.hpp"

namespace moonshine {

/// L_{e_a, e_b}(-m, -n)1 on basis vectors. Canonical form: (-m, a) <= (-n, b) as
/// Fock factors, except in type A where a is always the h-half vector.
struct Quadratic {
  std::size_t a = 0;
  int m = 1;
  std::size_t b = 0;
  int n = 1;
  auto operator<=>(const Quadratic&) const = default;
};

/// |x| = m + n.
inline int degree(const Quadratic& x) { return x.m + x.n; }

class LcaElement {
 public:
  LcaElement() = default;
  LcaElement(SpacePtr ambient, JordanType jtype) : ambient_(std::move(ambient)), jtype_(jtype) {}

  const SpacePtr& ambient() const { return ambient_; }
  JordanType jtype() const { return jtype_; }
  const std::map<Quadratic, Rational>& quads() const { return quads_; }
  const Rational& central_r() const { return central_r_; }
  const Rational& const_1() const { return const_1_; }

  void add_quad(const Quadratic& q, const Rational& c);
  void set_central_r(Rational c) { central_r_ = std::move(c); }
  void set_const_1(Rational c) { const_1_ = std::move(c); }

  bool is_zero() const { return quads_.empty() && central_r_ == 0 && const_1_ == 0; }
  bool quads_zero() const { return quads_.empty(); }
  /// Common degree of the quadratic part, nullopt when empty or mixed.
  std::optional<int> homogeneous_degree() const;
  /// The element without its central and constant parts.
  LcaElement quadratic_part() const;

  LcaElement& operator+=(const LcaElement& o);
  LcaElement& operator*=(const Rational& c);
  friend LcaElement operator+(LcaElement a, const LcaElement& b) { return a += b; }
  friend LcaElement operator*(LcaElement a, const Rational& c) { return a *= c; }

  /// "1/2*L(e1,e1;1,1) + 1/2*r"; "0" when zero.
  std::string to_text() const;

  friend bool operator==(const LcaElement& x, const LcaElement& y) {
    return x.quads_ == y.quads_ && x.central_r_ == y.central_r_ && x.const_1_ == y.const_1_;
  }
  friend bool operator<(const LcaElement& x, const LcaElement& y) {
    return std::tie(x.quads_, x.central_r_, x.const_1_) < std::tie(y.quads_, y.central_r_, y.const_1_);
  }

 private:
  SpacePtr ambient_;
  JordanType jtype_ = JordanType::B;
  std::map<Quadratic, Rational> quads_;
  Rational central_r_ = 0;
  Rational const_1_ = 0;
};

/// L_{a,b}(-m,-n)1 expanded bilinearly over basis quadratics. In type A, a must
/// lie in h and b in h*. Throws std::invalid_argument otherwise, or for an odd
/// a = b with m = n (the zero state).
LcaElement make_generator(const SpacePtr& ambient, JordanType jtype, const Vector& a, const Vector& b, int m = 1,
                          int n = 1);
LcaElement make_quadratic(const SpacePtr& ambient, JordanType jtype, const Quadratic& q);

/// Quadratic part as a Fock state (K = 1); central and constant parts dropped.
FockState to_fock(const LcaElement& x);
/// Splits a Fock state into quadratics plus a vacuum multiple, which becomes the
/// coefficient of r. Throws std::logic_error if any other monomial appears.
LcaElement from_fock(const FockState& s, JordanType jtype);

/// x(k)y for k >= 0: structure constants computed in the Fock space, the vacuum
/// coefficient reinterpreted as a multiple of r.
LcaElement kth_product(const LcaElement& x, int k, const LcaElement& y);
LcaElement translation(const LcaElement& x);

/// c(x, y) = x(|x|+|y|-1)y vacuum coefficient / (|x|+|y|-1)!.
Rational cocycle(const SpacePtr& ambient, JordanType jtype, const Quadratic& x, const Quadratic& y);

/// [x t^p, y t^q] = sum_k binom(p,k) (x(k)y) t^{p+q-k}, plus c K t^{-1} with K -> level.
struct ModeBracket {
  std::map<std::pair<Quadratic, int>, PolyR> terms;
  PolyR central;  // coefficient of K t^{-1} after substituting the level
};
/// level = nullopt keeps r symbolic.
ModeBracket lie_bracket_modes(const SpacePtr& ambient, JordanType jtype, const Quadratic& x, int p,
                              const Quadratic& y, int q, const std::optional<Rational>& level);

std::string render_quadratic(const FormedSpace& space, const Quadratic& q);

}  // namespace moonshine
