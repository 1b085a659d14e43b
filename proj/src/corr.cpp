#include "moonshine/corr.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace moonshine {

namespace {

bool vector_fits(const FormedSpace& h, const Vector& v) {
  for (const auto& [i, c] : v.components()) {
    if (i >= h.dim()) return false;
    if (h.parity(i) != v.parity()) return false;
  }
  return true;
}

const Vector& vertex_vector(const InsertionList& t, int v) {
  const auto& e = t.entries[static_cast<std::size_t>(v / 2)];
  return v % 2 == 0 ? e.a : e.b;
}

Rational pow2_inv(int k) {
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(k);
  return Rational(1) / Rational(den);
}

}  // namespace

InsertionList make_insertion_list(JordanType x, int rank, std::vector<VectorPair> entries) {
  if (rank < 1) throw std::invalid_argument("insertion list: rank must be >= 1");
  InsertionList t;
  t.jtype = x;
  t.rank = rank;
  t.space = std::make_shared<const FormedSpace>(make_type_space(x, rank));
  for (const auto& e : entries) {
    if (!vector_fits(*t.space, e.a) || !vector_fits(*t.space, e.b))
      throw std::invalid_argument("insertion list: vector outside the type space");
    if (x == JordanType::A && !(in_primal_half(*t.space, e.a) && in_dual_half(*t.space, e.b)))
      throw std::invalid_argument("insertion list: type A needs a in h and b in h*");
  }
  t.entries = std::move(entries);
  return t;
}

InsertionList permuted(const InsertionList& t, std::span<const int> order) {
  if (order.size() != t.entries.size()) throw std::invalid_argument("permuted: size mismatch");
  InsertionList out = t;
  for (std::size_t i = 0; i < order.size(); ++i) out.entries[i] = t.entries.at(static_cast<std::size_t>(order[i]));
  return out;
}

InsertionList random_insertion_list(JordanType x, int rank, int n, std::mt19937_64& rng) {
  static const Rational pool[] = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                  Rational(1, 2), Rational(1), Rational(2)};
  const FormedSpace h = make_type_space(x, rank);
  const auto d = static_cast<std::size_t>(rank);
  std::uniform_int_distribution<int> pick(0, 6);
  auto draw = [&](std::size_t lo, std::size_t hi) {
    for (;;) {
      std::map<std::size_t, Rational> comps;
      for (std::size_t i = lo; i < hi; ++i) {
        Rational c = pool[pick(rng)];
        if (c != 0) comps[i] = c;
      }
      if (!comps.empty()) return Vector(h, std::move(comps));
    }
  };
  std::vector<VectorPair> entries;
  for (int i = 0; i < n; ++i) {
    VectorPair p;
    if (x == JordanType::A) {
      p.a = draw(0, d);
      p.b = draw(d, 2 * d);
    } else {
      do {
        p.a = draw(0, h.dim());
        p.b = draw(0, h.dim());
      } while (x == JordanType::C && p.a == p.b);
    }
    entries.push_back(std::move(p));
  }
  return make_insertion_list(x, rank, std::move(entries));
}

// ---------------------------------------------------------------------------

namespace {

void match(JordanType x, std::vector<int>& partner, Diagram& cur, const std::function<void(const Diagram&)>& fn) {
  const int verts = static_cast<int>(partner.size());
  int u = 0;
  while (u < verts && partner[u] >= 0) ++u;
  if (u == verts) {
    fn(cur);
    return;
  }
  for (int v = u + 1; v < verts; ++v) {
    if (partner[v] >= 0 || v / 2 == u / 2) continue;
    if (x == JordanType::A && v % 2 == u % 2) continue;
    partner[u] = v;
    partner[v] = u;
    cur.edges.emplace_back(u, v);
    match(x, partner, cur, fn);
    cur.edges.pop_back();
    partner[u] = partner[v] = -1;
  }
}

}  // namespace

void for_each_diagram(JordanType x, int n, const std::function<void(const Diagram&)>& fn) {
  if (n < 0) throw std::invalid_argument("diagrams: n < 0");
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  Diagram cur;
  match(x, partner, cur, fn);
}

std::vector<Diagram> enum_diagrams(const InsertionList& t) {
  std::vector<Diagram> out;
  for_each_diagram(t.jtype, t.size(), [&](const Diagram& d) { out.push_back(d); });
  return out;
}

std::size_t count_diagrams(JordanType x, int n) {
  std::size_t count = 0;
  for_each_diagram(x, n, [&](const Diagram&) { ++count; });
  return count;
}

std::string render_diagram(const Diagram& d, JordanType x) {
  auto name = [&](int v) {
    std::string s = (v % 2 == 0 ? "a" : "b") + std::to_string(v / 2 + 1);
    if (x == JordanType::A && v % 2 == 1) s += "*";
    return s;
  };
  std::string out = "{";
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    if (i) out += ", ";
    out += name(d.edges[i].first) + "-" + name(d.edges[i].second);
  }
  return out + "}";
}

Collapse collapse(const Diagram& d, int n) {
  Collapse c;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [u, v] : d.edges) {
    const int i = u / 2;
    const int j = v / 2;
    c.slot_edges.emplace_back(std::min(i, j) + 1, std::max(i, j) + 1);
    parent[find(i)] = find(j);
  }
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++c.cycles;
  return c;
}

int contraction_sign(const Diagram& d, const InsertionList& t) {
  const int verts = 2 * t.size();
  std::vector<int> partner(static_cast<std::size_t>(verts), -1);
  for (const auto& [u, v] : d.edges) {
    partner[u] = v;
    partner[v] = u;
  }
  std::vector<bool> alive(static_cast<std::size_t>(verts), true);
  int sign = 1;
  for (int u = 0; u < verts; ++u) {
    if (!alive[u]) continue;
    const int v = partner[u];
    if (vertex_vector(t, u).parity() == Parity::odd && vertex_vector(t, v).parity() == Parity::odd) {
      int between = 0;
      for (int w = u + 1; w < v; ++w)
        if (alive[w] && vertex_vector(t, w).parity() == Parity::odd) ++between;
      if (between % 2) sign = -sign;
    }
    alive[u] = alive[v] = false;
  }
  return sign;
}

CorrFn diagram_term(const Diagram& d, const InsertionList& t) {
  const int n = t.size();
  CorrFn out(n);
  Rational coef = pow2_inv(n);
  DiffExponent den;
  for (const auto& [u, v] : d.edges) {
    coef *= form_eval(*t.space, vertex_vector(t, u), vertex_vector(t, v));
    if (coef == 0) return out;
    den.add(u / 2 + 1, v / 2 + 1, 2);
  }
  coef *= contraction_sign(d, t);
  out.add_term(den, PolyR::monomial(coef, collapse(d, n).cycles));
  return out;
}

CorrFn corr_diagram_sum(const InsertionList& t) {
  CorrFn out(t.size());
  if (t.size() == 0) return CorrFn::constant(0, 1);
  for_each_diagram(t.jtype, t.size(), [&](const Diagram& d) { out = corr_add(out, diagram_term(d, t)); });
  return out;
}

CorrFn corr_closed_form(const InsertionList& t, const ClosedFormOptions& options) {
  const int n = t.size();
  if (n == 0) return CorrFn::constant(0, 1);
  CorrFn out(n);
  for_each_derangement(n, [&](const CyclePermutation& sigma) {
    Rational g = gamma_factor(*t.space, sigma, t.entries);
    if (g == 0) return;
    if (options.drop_cycle_prefactor && t.jtype != JordanType::A) g /= pow2_inv(sigma.cycle_count());
    const auto image = sigma.one_line();
    DiffExponent den;
    for (int i = 0; i < n; ++i) den.add(std::min(i, image[i]) + 1, std::max(i, image[i]) + 1, 2);
    out.add_term(den, PolyR::monomial(g, sigma.cycle_count()));
  });
  return out;
}

// ---------------------------------------------------------------------------
// The recursion, generic over the state type.

namespace {

template <class Ops>
class Recursion {
 public:
  using State = typename Ops::State;
  using Slot = std::pair<State, int>;

  explicit Recursion(int n) : n_(n) {}

  CorrFn eval(const std::vector<Slot>& list) {
    if (list.empty()) return CorrFn::constant(n_, 1);
    if (list.size() == 1) return CorrFn(n_);
    std::vector<Slot> key = list;
    std::sort(key.begin(), key.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    CorrFn out(n_);
    const auto& [v1, s1] = list[0];
    const int w1 = Ops::weight(v1);
    for (std::size_t j = 1; j < list.size(); ++j) {
      const auto& [vj, sj] = list[j];
      const int top = w1 + Ops::weight(vj) - 1;
      for (int k = 0; k <= top; ++k) {
        auto [quad, mu] = Ops::product(v1, k, vj);
        if (!Ops::is_zero(quad)) {
          std::vector<Slot> rest(list.begin() + 1, list.end());
          rest[j - 1].first = std::move(quad);
          out = corr_add(out, corr_mul_diffpow(eval(rest), s1, sj, k + 1));
        }
        if (!mu.is_zero()) {
          std::vector<Slot> rest;
          for (std::size_t i = 1; i < list.size(); ++i)
            if (i != j) rest.push_back(list[i]);
          out = corr_add(out, corr_mul_diffpow(corr_scale(eval(rest), mu), s1, sj, k + 1));
        }
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  int n_;
  std::map<std::vector<Slot>, CorrFn> memo_;
};

struct LcaOps {
  using State = LcaElement;
  static int weight(const LcaElement& x) {
    auto w = x.homogeneous_degree();
    if (!w || x.central_r() != 0 || x.const_1() != 0)
      throw std::invalid_argument("recursion: non-homogeneous insertion");
    return *w;
  }
  static std::pair<LcaElement, PolyR> product(const LcaElement& x, int k, const LcaElement& y) {
    LcaElement p = kth_product(x, k, y);
    return {p.quadratic_part(), PolyR::monomial(p.central_r(), 1) + PolyR(p.const_1())};
  }
  static bool is_zero(const LcaElement& x) { return x.quads_zero(); }
};

struct FockOps {
  using State = FockState;
  static int weight(const FockState& s) {
    auto w = s.homogeneous_weight();
    if (!w) throw std::invalid_argument("recursion: non-homogeneous insertion");
    return *w;
  }
  static std::pair<FockState, PolyR> product(const FockState& x, int k, const FockState& y) {
    FockState p = nth_product(x, k, y);
    return {p.without_vacuum(), PolyR(vacuum_coeff(p))};
  }
  static bool is_zero(const FockState& s) { return s.is_zero(); }
};

template <class Ops, class Range>
CorrFn run_recursion(const Range& insertions) {
  const int n = static_cast<int>(insertions.size());
  std::vector<typename Recursion<Ops>::Slot> list;
  for (int i = 0; i < n; ++i) {
    const auto& x = insertions[static_cast<std::size_t>(i)];
    if (Ops::is_zero(x)) return CorrFn(n);
    Ops::weight(x);
    list.emplace_back(x, i + 1);
  }
  Recursion<Ops> engine(n);
  return engine.eval(list);
}

}  // namespace

CorrFn corr_recursion(std::span<const LcaElement> insertions) { return run_recursion<LcaOps>(insertions); }

CorrFn corr_recursion(const InsertionList& t) {
  std::vector<LcaElement> xs;
  for (const auto& e : t.entries) {
    if (e.a.is_zero() || e.b.is_zero()) return CorrFn(t.size());
    xs.push_back(make_generator(t.space, t.jtype, e.a, e.b));
  }
  return corr_recursion(std::span<const LcaElement>(xs));
}

std::vector<FockState> dual_pair_states(const InsertionList& t, int r) {
  if (r < 1) throw std::invalid_argument("direct: level must be >= 1");
  const FormedSpace level = make_level_space(r);
  auto big = std::make_shared<const FormedSpace>(tensor(*t.space, level));
  const FockState vac = FockState::vacuum(big);
  std::vector<FockState> out;
  for (const auto& e : t.entries) {
    FockState s(big);
    for (std::size_t i = 0; i < level.dim(); ++i) {
      const Vector ei = Vector::basis(level, i);
      s += apply_mode(tensor_vector(*big, e.a, ei), -1, apply_mode(tensor_vector(*big, e.b, ei), -1, vac));
    }
    out.push_back(s * Rational(1, 2));
  }
  return out;
}

CorrFn corr_direct(std::span<const FockState> insertions) { return run_recursion<FockOps>(insertions); }

CorrFn corr_direct(const InsertionList& t, int r) {
  const auto states = dual_pair_states(t, r);
  return corr_direct(std::span<const FockState>(states));
}

}  // namespace moonshine
