#include <memory>
#include <random>

#include "doctest.h"
#include "moonshine/jordan.hpp"
#include "moonshine/lca.hpp"
#include "oracles.hpp"

using namespace moonshine;

namespace {

SpacePtr space(JordanType x, int d) { return std::make_shared<const FormedSpace>(make_type_space(x, d)); }

LcaElement gen(const SpacePtr& h, JordanType x, const char* a, const char* b, int m = 1, int n = 1) {
  return make_generator(h, x, parse_vector(*h, a), parse_vector(*h, b), m, n);
}

LcaElement random_quadratic(const SpacePtr& h, JordanType x, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mode(1, 3);
  const std::size_t d = x == JordanType::A ? h->dim() / 2 : h->dim();
  for (;;) {
    const Vector a = oracle::random_vector(*h, 0, d, rng);
    const Vector b = x == JordanType::A ? oracle::random_vector(*h, d, 2 * d, rng) : oracle::random_vector(*h, 0, d, rng);
    const int m = mode(rng), n = mode(rng);
    if (a.parity() == Parity::odd && a == b && m == n) continue;
    LcaElement e = make_generator(h, x, a, b, m, n);
    if (!e.quads_zero()) return e;
  }
}

// Linear extension of L_{a,b} -> endo(a, b) to weight-two elements.
Matrix greiss_matrix(const LcaElement& x) {
  const FormedSpace& h = *x.ambient();
  Matrix m(x.jtype() == JordanType::A ? h.dim() / 2 : h.dim());
  for (const auto& [q, c] : x.quads()) {
    REQUIRE(degree(q) == 2);
    m += endo_from_pair(h, Vector::basis(h, q.a), Vector::basis(h, q.b)).matrix * c;
  }
  return m;
}

}  // namespace

TEST_SUITE("lca") {
  TEST_CASE("degree") {
    CHECK(degree(Quadratic{0, 1, 0, 1}) == 2);
    CHECK(degree(Quadratic{0, 2, 0, 1}) == 3);
    CHECK(degree(Quadratic{0, 3, 0, 4}) == 7);
  }

  TEST_CASE("kth_product examples") {
    const SpacePtr b2 = space(JordanType::B, 2);
    const LcaElement l12 = gen(b2, JordanType::B, "e1", "e2");
    const LcaElement p = kth_product(l12, 1, l12);
    CHECK(p == gen(b2, JordanType::B, "e1", "e1") * Rational(1, 2) + gen(b2, JordanType::B, "e2", "e2") * Rational(1, 2));
    CHECK(p.central_r() == 0);

    const SpacePtr b1 = space(JordanType::B, 1);
    const LcaElement w = gen(b1, JordanType::B, "e1", "e1");
    const LcaElement top = kth_product(w, 3, w);
    CHECK(top.quads_zero());
    CHECK(top.central_r() == Rational(1, 2));
    CHECK(top.to_text() == "1/2*r");

    const LcaElement zero = kth_product(w, 0, w);
    CHECK(zero == translation(w));
    CHECK(zero == gen(b1, JordanType::B, "e1", "e1", 2, 1) * Rational(2));
    CHECK(w.to_text() == "1*L(e1,e1;1,1)");
  }

  TEST_CASE("generators") {
    const SpacePtr a1 = space(JordanType::A, 1);
    CHECK_NOTHROW(gen(a1, JordanType::A, "e1", "e1*"));
    CHECK_THROWS_AS(gen(a1, JordanType::A, "e1*", "e1"), std::invalid_argument);
    CHECK_THROWS_AS(gen(a1, JordanType::A, "e1", "e1"), std::invalid_argument);
    const SpacePtr c1 = space(JordanType::C, 1);
    CHECK_THROWS_AS(gen(c1, JordanType::C, "f1", "f1"), std::invalid_argument);
    CHECK_NOTHROW(gen(c1, JordanType::C, "f1", "f1", 2, 1));
    // odd generators are antisymmetric
    CHECK(gen(c1, JordanType::C, "f1", "f2") == gen(c1, JordanType::C, "f2", "f1") * Rational(-1));
    // type A residues with nonzero C^x weight are rejected
    FockState bad = apply_mode(Vector::basis(*a1, 0), -1, apply_mode(Vector::basis(*a1, 0), -1, FockState::vacuum(a1)));
    CHECK_THROWS_AS(from_fock(bad, JordanType::A), std::logic_error);
  }

  TEST_CASE("cocycle") {
    const SpacePtr b1 = space(JordanType::B, 1);
    CHECK(cocycle(b1, JordanType::B, Quadratic{0, 1, 0, 1}, Quadratic{0, 1, 0, 1}) == Rational(1, 12));
    const SpacePtr b2 = space(JordanType::B, 2);
    CHECK(cocycle(b2, JordanType::B, Quadratic{0, 1, 1, 1}, Quadratic{0, 1, 1, 1}) == Rational(1, 24));
    const SpacePtr c2 = space(JordanType::C, 2);
    // f1, f2 pair only with f3, f4
    CHECK(cocycle(c2, JordanType::C, Quadratic{0, 1, 1, 1}, Quadratic{0, 2, 1, 1}) == 0);

    std::mt19937_64 rng(31);
    for (JordanType x : {JordanType::A, JordanType::B, JordanType::C}) {
      const SpacePtr h = space(x, 2);
      for (int trial = 0; trial < 20; ++trial) {
        const LcaElement u = random_quadratic(h, x, rng), v = random_quadratic(h, x, rng);
        const int du = *u.homogeneous_degree(), dv = *v.homogeneous_degree();
        const int top = du + dv - 1;
        const Rational c_uv = kth_product(u, top, v).central_r();
        const Rational c_vu = kth_product(v, top, u).central_r();
        CHECK(c_uv == Rational((du + dv) % 2 ? -1 : 1) * c_vu);
      }
    }
  }

  TEST_CASE("affinization bracket") {
    const SpacePtr b1 = space(JordanType::B, 1);
    const Quadratic w{0, 1, 0, 1};
    const ModeBracket zero = lie_bracket_modes(b1, JordanType::B, w, 0, w, 0, std::nullopt);
    CHECK(zero.central.is_zero());
    for (const auto& [key, c] : zero.terms) CHECK(key.second == 0);
    CHECK_FALSE(zero.terms.empty());

    const ModeBracket none = lie_bracket_modes(b1, JordanType::B, w, 1, w, -1, std::nullopt);
    CHECK(none.central.is_zero());

    const ModeBracket vir = lie_bracket_modes(b1, JordanType::B, w, 3, w, -1, std::nullopt);
    CHECK(vir.central == PolyR::level() * Rational(1, 2));
    const ModeBracket vir5 = lie_bracket_modes(b1, JordanType::B, w, 3, w, -1, Rational(5));
    CHECK(vir5.central == PolyR(Rational(5, 2)));
  }

  TEST_CASE("sesquilinearity and closure") {
    std::mt19937_64 rng(32);
    for (JordanType x : {JordanType::A, JordanType::B, JordanType::C}) {
      const SpacePtr h = space(x, 2);
      for (int trial = 0; trial < 30; ++trial) {
        const LcaElement u = random_quadratic(h, x, rng), v = random_quadratic(h, x, rng);
        const int top = *u.homogeneous_degree() + *v.homogeneous_degree();
        const LcaElement tu = translation(u);
        CHECK(kth_product(tu, 0, v).is_zero());
        for (int k = 1; k <= top; ++k) CHECK(kth_product(tu, k, v) == kth_product(u, k - 1, v) * Rational(-k));
      }
    }
  }

  TEST_CASE("Greiss product is the Jordan product") {
    std::mt19937_64 rng(33);
    for (JordanType x : {JordanType::A, JordanType::B, JordanType::C})
      for (int d = 1; d <= 2; ++d) {
        const SpacePtr h = space(x, d);
        const std::size_t half = x == JordanType::A ? h->dim() / 2 : h->dim();
        for (int trial = 0; trial < 10; ++trial) {
          const Vector a = oracle::random_vector(*h, 0, half, rng);
          const Vector b = x == JordanType::A ? oracle::random_vector(*h, half, 2 * half, rng) : oracle::random_vector(*h, 0, half, rng);
          const Vector u = oracle::random_vector(*h, 0, half, rng);
          const Vector v = x == JordanType::A ? oracle::random_vector(*h, half, 2 * half, rng) : oracle::random_vector(*h, 0, half, rng);
          if (x == JordanType::C && (a == b || u == v)) continue;
          const LcaElement p = kth_product(make_generator(h, x, a, b), 1, make_generator(h, x, u, v));
          CHECK(p.central_r() == 0);
          CHECK(greiss_matrix(p) == jordan_product(endo_from_pair(*h, a, b), endo_from_pair(*h, u, v)).matrix);
        }
      }
  }
}
