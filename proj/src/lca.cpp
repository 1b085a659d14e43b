#include "moonshine/lca.hpp"

#include <stdexcept>

namespace moonshine {

void LcaElement::add_quad(const Quadratic& q, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = quads_.try_emplace(q, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) quads_.erase(it);
  }
}

std::optional<int> LcaElement::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [q, c] : quads_) {
    if (d && *d != degree(q)) return std::nullopt;
    d = degree(q);
  }
  return d;
}

LcaElement LcaElement::quadratic_part() const {
  LcaElement out(ambient_, jtype_);
  out.quads_ = quads_;
  return out;
}

LcaElement& LcaElement::operator+=(const LcaElement& o) {
  if (!ambient_) {
    ambient_ = o.ambient_;
    jtype_ = o.jtype_;
  }
  for (const auto& [q, c] : o.quads_) add_quad(q, c);
  central_r_ += o.central_r_;
  const_1_ += o.const_1_;
  return *this;
}

LcaElement& LcaElement::operator*=(const Rational& c) {
  if (c == 0) {
    quads_.clear();
  } else {
    for (auto& [q, x] : quads_) x *= c;
  }
  central_r_ *= c;
  const_1_ *= c;
  return *this;
}

std::string render_quadratic(const FormedSpace& space, const Quadratic& q) {
  return "L(" + space.space.labels[q.a] + "," + space.space.labels[q.b] + ";" + std::to_string(q.m) + "," +
         std::to_string(q.n) + ")";
}

std::string LcaElement::to_text() const {
  std::string out;
  for (const auto& [q, c] : quads_) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*" + render_quadratic(*ambient_, q);
  }
  if (central_r_ != 0) {
    if (!out.empty()) out += " + ";
    out += to_string(central_r_) + "*r";
  }
  if (const_1_ != 0) {
    if (!out.empty()) out += " + ";
    out += to_string(const_1_);
  }
  return out.empty() ? "0" : out;
}

FockState to_fock(const LcaElement& x) {
  FockState s(x.ambient());
  for (const auto& [q, c] : x.quads()) {
    s += FockState::monomial(x.ambient(), {{-q.m, q.a}, {-q.n, q.b}}, c / 2);
  }
  return s;
}

LcaElement from_fock(const FockState& s, JordanType jtype) {
  LcaElement out(s.ambient(), jtype);
  const FormedSpace& space = s.space();
  const auto d = static_cast<std::size_t>(space.param);
  Rational central = 0;
  for (const auto& [mono, c] : s.terms()) {
    const auto& f = mono.factors();
    if (f.empty()) {
      central += c;
      continue;
    }
    if (f.size() != 2) throw std::logic_error("from_fock: residue outside span{quadratics, vacuum}");
    Quadratic q{f[0].index, -f[0].mode, f[1].index, -f[1].mode};
    if (jtype == JordanType::A) {
      if (space.kind != SpaceKind::doubled) throw std::logic_error("from_fock: type A needs the doubled space");
      const bool a_dual = q.a >= d;
      const bool b_dual = q.b >= d;
      if (a_dual == b_dual) throw std::logic_error("from_fock: type A residue with nonzero C^x weight");
      if (a_dual) q = Quadratic{q.b, q.n, q.a, q.m};
    }
    out.add_quad(q, 2 * c);
  }
  out.set_central_r(central);
  return out;
}

LcaElement make_generator(const SpacePtr& ambient, JordanType jtype, const Vector& a, const Vector& b, int m,
                          int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("make_generator: modes must be >= 1");
  if (jtype == JordanType::A && !(in_primal_half(*ambient, a) && in_dual_half(*ambient, b)))
    throw std::invalid_argument("make_generator: type A needs a in h and b in h*");
  if (a.parity() == Parity::odd && a == b && m == n)
    throw std::invalid_argument("make_generator: odd a(-m)a(-m) is the zero state");
  FockState s = apply_mode(a, -m, apply_mode(b, -n, FockState::vacuum(ambient)));
  return from_fock(s * Rational(1, 2), jtype);
}

LcaElement make_quadratic(const SpacePtr& ambient, JordanType jtype, const Quadratic& q) {
  return make_generator(ambient, jtype, Vector::basis(*ambient, q.a), Vector::basis(*ambient, q.b), q.m, q.n);
}

LcaElement kth_product(const LcaElement& x, int k, const LcaElement& y) {
  if (k < 0) throw std::invalid_argument("kth_product: k must be >= 0");
  if (x.jtype() != y.jtype()) throw std::invalid_argument("kth_product: jtype mismatch");
  if (x.ambient() && y.ambient() && x.ambient() != y.ambient() &&
      x.ambient()->space.labels != y.ambient()->space.labels)
    throw std::invalid_argument("kth_product: ambient mismatch");
  return from_fock(nth_product(to_fock(x), k, to_fock(y)), x.jtype());
}

LcaElement translation(const LcaElement& x) { return from_fock(translation(to_fock(x)), x.jtype()); }

Rational cocycle(const SpacePtr& ambient, JordanType jtype, const Quadratic& x, const Quadratic& y) {
  const int top = degree(x) + degree(y) - 1;
  const LcaElement p = kth_product(make_quadratic(ambient, jtype, x), top, make_quadratic(ambient, jtype, y));
  return p.central_r() / factorial(top);
}

ModeBracket lie_bracket_modes(const SpacePtr& ambient, JordanType jtype, const Quadratic& x, int p,
                              const Quadratic& y, int q, const std::optional<Rational>& level) {
  ModeBracket out;
  const LcaElement X = make_quadratic(ambient, jtype, x);
  const LcaElement Y = make_quadratic(ambient, jtype, y);
  const PolyR k_value = level ? PolyR(*level) : PolyR::level();
  for (int k = 0; k <= degree(x) + degree(y) - 1; ++k) {
    const Rational b = binomial(p, k);
    if (b == 0) continue;
    const LcaElement prod = kth_product(X, k, Y);
    const int mode = p + q - k;
    for (const auto& [quad, c] : prod.quads()) {
      auto& slot = out.terms[{quad, mode}];
      slot += PolyR(b * c);
      if (slot.is_zero()) out.terms.erase({quad, mode});
    }
    if (mode == -1 && prod.central_r() != 0) out.central += k_value * (b * prod.central_r());
  }
  return out;
}

}  // namespace moonshine
