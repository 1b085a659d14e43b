#include <random>

#include "doctest.h"
#include "moonshine/jordan.hpp"
#include "oracles.hpp"

using namespace moonshine;

namespace {

Vector vec(const FormedSpace& h, const char* text) { return parse_vector(h, text); }

Matrix endo(const FormedSpace& h, const char* a, const char* b) { return endo_from_pair(h, vec(h, a), vec(h, b)).matrix; }

VectorPair random_pair(const FormedSpace& h, std::mt19937_64& rng) {
  if (h.jtype == JordanType::A) {
    const auto d = static_cast<std::size_t>(h.param);
    return {oracle::random_vector(h, 0, d, rng), oracle::random_vector(h, d, 2 * d, rng)};
  }
  return {oracle::random_vector(h, 0, h.dim(), rng), oracle::random_vector(h, 0, h.dim(), rng)};
}

JordanElement element(const FormedSpace& h, const VectorPair& p) { return endo_from_pair(h, p.a, p.b); }

}  // namespace

TEST_SUITE("jordan") {
  TEST_CASE("endomorphisms of pairs") {
    const FormedSpace b2 = make_type_space(JordanType::B, 2);
    Matrix e11(2);
    e11(0, 0) = 1;
    CHECK(endo(b2, "e1", "e1") == e11 * Rational(2));
    CHECK(endo(b2, "e1", "e2").to_text() == "[[0, 1], [1, 0]]");

    const FormedSpace a2 = make_type_space(JordanType::A, 2);
    Matrix e12(2);
    e12(0, 1) = 1;
    CHECK(endo(a2, "e1", "e2*") == e12);
    CHECK_THROWS_AS(endo(a2, "e1*", "e2"), std::invalid_argument);

    const FormedSpace c1 = make_type_space(JordanType::C, 1);
    CHECK(endo(c1, "f1", "f2") == Matrix::identity(2) * Rational(-1));
    CHECK(endo(c1, "f1", "f1") == Matrix(2));
  }

  TEST_CASE("Jordan products and traces") {
    const FormedSpace b2 = make_type_space(JordanType::B, 2);
    const JordanElement l12 = endo_from_pair(b2, vec(b2, "e1"), vec(b2, "e2"));
    CHECK(jordan_product(l12, l12).matrix == Matrix::identity(2));

    const std::vector<VectorPair> one{{vec(b2, "e1"), vec(b2, "e1")}};
    CHECK(trace_cycle(b2, one) == 2);
    const std::vector<VectorPair> two{{vec(b2, "e1"), vec(b2, "e1")}, {vec(b2, "e1"), vec(b2, "e1")}};
    CHECK(trace_cycle(b2, two) == 4);

    const FormedSpace a1 = make_type_space(JordanType::A, 1);
    const std::vector<VectorPair> a_two{{vec(a1, "e1"), vec(a1, "e1*")}, {vec(a1, "e1"), vec(a1, "e1*")}};
    CHECK(trace_cycle(a1, a_two) == 1);

    const FormedSpace c1 = make_type_space(JordanType::C, 1);
    const std::vector<VectorPair> c_one{{vec(c1, "f1"), vec(c1, "f2")}};
    CHECK(plain_trace_cycle(c1, c_one) == -2);
    CHECK(trace_cycle(c1, c_one) == 2);
    CHECK_THROWS_AS(trace_cycle(c1, std::vector<VectorPair>{}), std::invalid_argument);
  }

  TEST_CASE("trace of two pair endomorphisms") {
    std::mt19937_64 rng(41);
    const FormedSpace b3 = make_type_space(JordanType::B, 3);
    for (int trial = 0; trial < 30; ++trial) {
      const VectorPair p = random_pair(b3, rng), q = random_pair(b3, rng);
      const auto f = [&](const Vector& x, const Vector& y) { return form_eval(b3, x, y); };
      const Rational expected = 2 * (f(p.a, q.a) * f(p.b, q.b) + f(p.a, q.b) * f(p.b, q.a));
      CHECK(trace_cycle(b3, std::vector<VectorPair>{p, q}) == expected);
    }
  }

  TEST_CASE("gamma factor") {
    const FormedSpace b1 = make_type_space(JordanType::B, 1);
    const Vector e1 = vec(b1, "e1");
    const std::vector<VectorPair> two{{e1, e1}, {e1, e1}};
    // one 2-cycle: 2^{-1-2} * 4
    CHECK(gamma_factor(b1, CyclePermutation::from_cycles({{0, 1}}), two) == Rational(1, 2));
    const FormedSpace a1 = make_type_space(JordanType::A, 1);
    const Vector x = vec(a1, "e1"), y = vec(a1, "e1*");
    const std::vector<VectorPair> a_two{{x, y}, {x, y}};
    CHECK(gamma_factor(a1, CyclePermutation::from_cycles({{0, 1}}), a_two) == Rational(1, 4));
    CHECK_THROWS_AS(gamma_factor(a1, CyclePermutation::from_cycles({{0, 1, 2}}), a_two), std::invalid_argument);
  }

  TEST_CASE("trace identities") {
    std::mt19937_64 rng(42);
    for (JordanType x : {JordanType::A, JordanType::B, JordanType::C})
      for (int d = 1; d <= 3; ++d) {
        const FormedSpace h = make_type_space(x, d);
        for (int trial = 0; trial < 10; ++trial) {
          std::vector<VectorPair> pairs;
          for (int k = 0; k < 4; ++k) pairs.push_back(random_pair(h, rng));
          const Rational t = trace_cycle(h, pairs);
          std::vector<VectorPair> rotated(pairs.begin() + 1, pairs.end());
          rotated.push_back(pairs.front());
          CHECK(trace_cycle(h, rotated) == t);
          if (x != JordanType::A) {
            // each endomorphism is self-adjoint, so reversing the cycle preserves the trace
            const std::vector<VectorPair> reversed(pairs.rbegin(), pairs.rend());
            CHECK(trace_cycle(h, reversed) == t);
          }
        }
      }
  }

  TEST_CASE("Jordan algebra axioms") {
    std::mt19937_64 rng(43);
    for (JordanType x : {JordanType::A, JordanType::B, JordanType::C})
      for (int d = 1; d <= 3; ++d) {
        const FormedSpace h = make_type_space(x, d);
        for (int trial = 0; trial < 50 / 3 + 1; ++trial) {
          const JordanElement p = element(h, random_pair(h, rng));
          const JordanElement q = element(h, random_pair(h, rng));
          const JordanElement s = element(h, random_pair(h, rng));
          CHECK(jordan_product(p, q) == jordan_product(q, p));
          JordanElement qs = q;
          qs.matrix += s.matrix * Rational(3, 2);
          JordanElement lhs = jordan_product(p, qs);
          JordanElement rhs = jordan_product(p, q);
          rhs.matrix += jordan_product(p, s).matrix * Rational(3, 2);
          CHECK(lhs == rhs);
          // (xy)(xx) = x(y(xx))
          const JordanElement xx = jordan_product(p, p);
          CHECK(jordan_product(jordan_product(p, q), xx) == jordan_product(p, jordan_product(q, xx)));
        }
      }
  }
}
