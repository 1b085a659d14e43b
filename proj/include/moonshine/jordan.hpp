#pragma once

// Hermitian Jordan algebras realized by endomorphism matrices of h.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "moonshine/permutation.hpp"
#include "moonshine/superlinear.hpp"

namespace moonshine {

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}
  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  Rational trace() const;
  std::string to_text() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

struct JordanElement {
  JordanType type = JordanType::B;
  Matrix matrix;
  friend bool operator==(const JordanElement&, const JordanElement&) = default;
};

/// Matrix of the rank-one combination determined by (a, b): u -> <b*,u> a in
/// type A, a(x)b + b(x)a in type B, a(x)b - b(x)a in type C, where
/// (x (x) y)(u) = (y, u) x. `h` is the type space of make_type_space.
JordanElement endo_from_pair(const FormedSpace& h, const Vector& a, const Vector& b);

/// (AB + BA) / 2.
JordanElement jordan_product(const JordanElement& x, const JordanElement& y);

/// Supertrace of the ordered product of the pair endomorphisms. For the purely
/// odd type C space the supertrace is minus the ordinary trace; for A and B the
/// two agree.
Rational trace_cycle(const FormedSpace& h, std::span<const VectorPair> pairs);
/// Ordinary matrix trace of the same product.
Rational plain_trace_cycle(const FormedSpace& h, std::span<const VectorPair> pairs);

/// Types B, C: 2^{-s-n} prod over cycles of trace_cycle; type A: 2^{-n} prod.
/// `entries` holds the insertion pairs indexed by permutation element.
Rational gamma_factor(const FormedSpace& h, const CyclePermutation& sigma, std::span<const VectorPair> entries);

}  // namespace moonshine
