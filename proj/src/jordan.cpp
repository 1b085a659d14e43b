#include "moonshine/jordan.hpp"

#include <stdexcept>

namespace moonshine {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.n_;
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
    }
  return out;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::string Matrix::to_text() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ", ";
      out += to_string((*this)(i, j));
    }
    out += "]";
  }
  return out + "]";
}

namespace {

// Matrix of u -> (y, u) x on the basis of h.
Matrix rank_one(const FormedSpace& h, const Vector& x, const Vector& y) {
  Matrix m(h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j) {
    const Rational pairing = form_eval(h, y, Vector::basis(h, j));
    if (pairing == 0) continue;
    for (const auto& [i, c] : x.components()) m(i, j) += c * pairing;
  }
  return m;
}

}  // namespace

JordanElement endo_from_pair(const FormedSpace& h, const Vector& a, const Vector& b) {
  switch (h.jtype) {
    case JordanType::A: {
      if (h.kind != SpaceKind::doubled) throw std::invalid_argument("endo_from_pair: type A needs the doubled space");
      if (!in_primal_half(h, a) || !in_dual_half(h, b))
        throw std::invalid_argument("endo_from_pair: type A needs a in h and b in h*");
      const auto d = static_cast<std::size_t>(h.param);
      Matrix m(d);
      for (const auto& [i, ai] : a.components())
        for (const auto& [j, bj] : b.components()) m(i, j - d) += ai * bj;
      return {JordanType::A, m};
    }
    case JordanType::B:
      return {JordanType::B, rank_one(h, a, b) + rank_one(h, b, a)};
    case JordanType::C:
      return {JordanType::C, rank_one(h, a, b) - rank_one(h, b, a)};
  }
  throw std::logic_error("endo_from_pair: unknown type");
}

JordanElement jordan_product(const JordanElement& x, const JordanElement& y) {
  if (x.type != y.type || x.matrix.size() != y.matrix.size())
    throw std::invalid_argument("jordan_product: size mismatch");
  Matrix m = x.matrix * y.matrix + y.matrix * x.matrix;
  m *= Rational(1, 2);
  return {x.type, m};
}

Rational plain_trace_cycle(const FormedSpace& h, std::span<const VectorPair> pairs) {
  if (pairs.empty()) throw std::invalid_argument("trace_cycle: empty cycle");
  Matrix prod = endo_from_pair(h, pairs[0].a, pairs[0].b).matrix;
  for (std::size_t i = 1; i < pairs.size(); ++i) prod = prod * endo_from_pair(h, pairs[i].a, pairs[i].b).matrix;
  return prod.trace();
}

Rational trace_cycle(const FormedSpace& h, std::span<const VectorPair> pairs) {
  Rational t = plain_trace_cycle(h, pairs);
  return h.jtype == JordanType::C ? Rational(-t) : t;
}

Rational gamma_factor(const FormedSpace& h, const CyclePermutation& sigma, std::span<const VectorPair> entries) {
  if (static_cast<std::size_t>(sigma.size()) != entries.size())
    throw std::invalid_argument("gamma_factor: permutation size mismatch");
  const int n = sigma.size();
  const int s = sigma.cycle_count();
  Rational g = 1;
  for (const auto& cycle : sigma.cycles()) {
    std::vector<VectorPair> pairs;
    for (int k : cycle) pairs.push_back(entries[static_cast<std::size_t>(k)]);
    g *= trace_cycle(h, pairs);
    if (g == 0) return 0;
  }
  const int power = h.jtype == JordanType::A ? n : s + n;
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(power);
  return g / Rational(den);
}

}  // namespace moonshine
