#include <memory>
#include <random>

#include "doctest.h"
#include "moonshine/fock.hpp"
#include "oracles.hpp"

using namespace moonshine;

namespace {

SpacePtr space(JordanType x, int d) { return std::make_shared<const FormedSpace>(make_type_space(x, d)); }

FockState mono(const SpacePtr& h, std::vector<ModeFactor> f, const Rational& c = 1) {
  return FockState::monomial(h, std::move(f), c);
}

FockState random_state(const SpacePtr& h, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nf(0, 3), mode(1, 3), coef(-3, 3);
  std::uniform_int_distribution<std::size_t> idx(0, h->dim() - 1);
  FockState s(h);
  for (int t = 0; t < 3; ++t) {
    std::vector<ModeFactor> f;
    const int count = nf(rng);
    for (int i = 0; i < count; ++i) f.push_back({-mode(rng), idx(rng)});
    s += mono(h, f, coef(rng));
  }
  return s;
}

FockState random_quadratic(const SpacePtr& h, JordanType x, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mode(1, 2);
  const std::size_t d = x == JordanType::A ? h->dim() / 2 : h->dim();
  const Vector a = oracle::random_vector(*h, 0, d, rng);
  const Vector b = x == JordanType::A ? oracle::random_vector(*h, d, 2 * d, rng) : oracle::random_vector(*h, 0, d, rng);
  return apply_mode(a, -mode(rng), apply_mode(b, -mode(rng), FockState::vacuum(h)));
}

FockState power_of_T(FockState s, int j) {
  for (int i = 0; i < j; ++i) s = translation(s);
  return s;
}

int sign(const FockState& x, const FockState& y) {
  return x.parity() == Parity::odd && y.parity() == Parity::odd ? -1 : 1;
}

}  // namespace

TEST_SUITE("fock") {
  TEST_CASE("apply_mode") {
    const SpacePtr b1 = space(JordanType::B, 1);
    const Vector e1 = Vector::basis(*b1, 0);
    const FockState one = mono(b1, {{-1, 0}});
    CHECK(apply_mode(e1, 1, one) == FockState::vacuum(b1));
    CHECK(apply_mode(e1, 0, one).is_zero());
    CHECK(apply_mode(e1, 0, FockState::vacuum(b1)).is_zero());

    const SpacePtr c1 = space(JordanType::C, 1);
    const Vector f1 = Vector::basis(*c1, 0), f2 = Vector::basis(*c1, 1);
    const FockState f1s = mono(c1, {{-1, 0}});
    CHECK(apply_mode(f1, 1, f1s).is_zero());
    CHECK(apply_mode(f2, 1, f1s) == FockState::vacuum(c1) * Rational(-1));
    CHECK(apply_mode(f1, -1, f1s).is_zero());
  }

  TEST_CASE("canonical order and Koszul signs") {
    const SpacePtr c1 = space(JordanType::C, 1);
    CHECK(mono(c1, {{-1, 1}, {-1, 0}}) == mono(c1, {{-1, 0}, {-1, 1}}, -1));
    CHECK(mono(c1, {{-2, 0}, {-1, 0}}) == mono(c1, {{-1, 0}, {-2, 0}}, -1));
    CHECK(mono(c1, {{-1, 0}, {-1, 0}}).is_zero());
    const SpacePtr b1 = space(JordanType::B, 1);
    CHECK(mono(b1, {{-2, 0}, {-1, 0}}) == mono(b1, {{-1, 0}, {-2, 0}}));
    CHECK(mono(b1, {{-2, 0}, {-1, 0}}).to_text() == "e1(-2)e1(-1)|0>");
    CHECK(mono(b1, {{-1, 0}, {-1, 0}}, 2).max_weight() == 2);
  }

  TEST_CASE("nth_product") {
    const SpacePtr b1 = space(JordanType::B, 1);
    const FockState a = mono(b1, {{-1, 0}});
    CHECK(nth_product(a, -1, FockState::vacuum(b1)) == a);
    const FockState w = mono(b1, {{-1, 0}, {-1, 0}});
    CHECK(nth_product(w, 3, w) == FockState::vacuum(b1) * Rational(2));

    const SpacePtr b2 = space(JordanType::B, 2);
    const FockState x = mono(b2, {{-1, 0}, {-1, 1}});
    CHECK(nth_product(x, 1, x) == mono(b2, {{-1, 0}, {-1, 0}}) + mono(b2, {{-1, 1}, {-1, 1}}));
  }

  TEST_CASE("translation and vacuum coefficient") {
    const SpacePtr b1 = space(JordanType::B, 1);
    CHECK(translation(FockState::vacuum(b1)).is_zero());
    CHECK(translation(mono(b1, {{-1, 0}})) == mono(b1, {{-2, 0}}));
    CHECK(translation(mono(b1, {{-1, 0}, {-1, 0}})) == mono(b1, {{-2, 0}, {-1, 0}}, 2));
    CHECK(vacuum_coeff(FockState::vacuum(b1)) == 1);
    CHECK(vacuum_coeff(mono(b1, {{-1, 0}})) == 0);
    CHECK(vacuum_coeff(FockState::vacuum(b1) * Rational(3) + mono(b1, {{-2, 0}})) == 3);
  }

  TEST_CASE("supercommutation of modes") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> m(-3, 3);
    for (JordanType x : {JordanType::B, JordanType::C, JordanType::A}) {
      const SpacePtr h = space(x, 2);
      std::uniform_int_distribution<std::size_t> idx(0, h->dim() - 1);
      for (int trial = 0; trial < 100; ++trial) {
        const FockState s = random_state(h, rng);
        const std::size_t a = idx(rng), b = idx(rng);
        const int p = m(rng), q = m(rng);
        const FockState ab = apply_basis_mode(a, p, apply_basis_mode(b, q, s));
        const FockState ba = apply_basis_mode(b, q, apply_basis_mode(a, p, s));
        const int eps = both_odd(h->parity(a), h->parity(b)) ? -1 : 1;
        FockState expected(h);
        if (p + q == 0) expected = s * (Rational(p) * h->gram(a, b));
        CHECK(ab - ba * Rational(eps) == expected);
      }
    }
  }

  TEST_CASE("state-field correspondence and weights") {
    std::mt19937_64 rng(22);
    for (JordanType x : {JordanType::B, JordanType::C, JordanType::A}) {
      const SpacePtr h = space(x, 2);
      for (int trial = 0; trial < 20; ++trial) {
        const FockState s = random_state(h, rng);
        CHECK(nth_product(s, -1, FockState::vacuum(h)) == s);
        const FockState q = random_quadratic(h, x, rng);
        const Vector a = Vector::basis(*h, 0);
        if (auto w = q.homogeneous_weight()) {
          for (int m = -2; m <= 2; ++m) {
            const FockState t = apply_mode(a, m, q);
            if (!t.is_zero()) CHECK(t.homogeneous_weight() == *w - m);
          }
        }
      }
    }
  }

  TEST_CASE("skew-symmetry") {
    std::mt19937_64 rng(23);
    for (JordanType x : {JordanType::B, JordanType::C, JordanType::A}) {
      const SpacePtr h = space(x, 2);
      for (int trial = 0; trial < 15; ++trial) {
        const FockState u = random_quadratic(h, x, rng);
        const FockState v = random_quadratic(h, x, rng);
        if (u.is_zero() || v.is_zero()) continue;
        const int top = *u.homogeneous_weight() + *v.homogeneous_weight();
        for (int k = 0; k <= top; ++k) {
          FockState rhs(h);
          Rational jf = 1;
          for (int j = 0; k + j <= top; ++j) {
            if (j > 0) jf *= j;
            const Rational c = Rational((k + j) % 2 ? 1 : -1) * sign(u, v) / jf;
            rhs += power_of_T(nth_product(v, k + j, u), j) * c;
          }
          CHECK(nth_product(u, k, v) == rhs);
        }
      }
    }
  }

  TEST_CASE("Borcherds commutator formula") {
    std::mt19937_64 rng(24);
    for (JordanType x : {JordanType::B, JordanType::C, JordanType::A}) {
      const SpacePtr h = space(x, 1);
      for (int trial = 0; trial < 6; ++trial) {
        FockState u = random_quadratic(h, x, rng);
        FockState v = random_quadratic(h, x, rng);
        if (x == JordanType::C && trial % 2) {
          // odd fields: f(-1)1
          u = apply_mode(oracle::random_vector(*h, 0, 2, rng), -1, FockState::vacuum(h));
          v = apply_mode(oracle::random_vector(*h, 0, 2, rng), -1, FockState::vacuum(h));
        }
        if (u.is_zero() || v.is_zero()) continue;
        const int eps = sign(u, v);
        const int top = *u.homogeneous_weight() + *v.homogeneous_weight();
        for (int s_i = 0; s_i < 2; ++s_i) {
          const FockState s = random_state(h, rng);
          for (int p = -2; p <= 2; ++p)
            for (int q = -2; q <= 2; ++q) {
              const FockState lhs = nth_product(u, p, nth_product(v, q, s)) -
                                    nth_product(v, q, nth_product(u, p, s)) * Rational(eps);
              FockState rhs(h);
              for (int k = 0; k < top; ++k) {
                const Rational b = binomial(p, k);
                if (b != 0) rhs += nth_product(nth_product(u, k, v), p + q - k, s) * b;
              }
              CHECK(lhs == rhs);
            }
        }
      }
    }
  }
}
