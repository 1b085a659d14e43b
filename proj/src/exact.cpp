#include "moonshine/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace moonshine {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational binomial(long x, long k) {
  if (k < 0) return 0;
  Rational out = 1;
  for (long i = 0; i < k; ++i) {
    out *= Rational(x - i);
    out /= Rational(i + 1);
  }
  return out;
}

Rational factorial(long n) {
  Rational out = 1;
  for (long i = 2; i <= n; ++i) out *= Rational(i);
  return out;
}

// ---------------------------------------------------------------------------
// PolyR

PolyR::PolyR(Rational c) {
  c.canonicalize();
  if (c != 0) coeffs_.push_back(std::move(c));
}

PolyR PolyR::monomial(const Rational& c, int degree) {
  PolyR p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = c;
  p.coeffs_.back().canonicalize();
  return p;
}

Rational PolyR::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational PolyR::eval(const Rational& r) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
  return acc;
}

PolyR PolyR::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  PolyR p;
  p.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

void PolyR::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyR& PolyR::operator+=(const PolyR& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyR& PolyR::operator-=(const PolyR& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyR& PolyR::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PolyR& PolyR::operator*=(const PolyR& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyR PolyR::operator-() const {
  PolyR p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

std::string PolyR::to_text() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string power = k == 1 ? "r" : "r^" + std::to_string(k);
    if (k == 0)
      out += to_string(coeffs_[k]);
    else if (coeffs_[k] == 1)
      out += power;
    else if (coeffs_[k] == -1)
      out += "-" + power;
    else
      out += to_string(coeffs_[k]) + "*" + power;
  }
  return out;
}

// ---------------------------------------------------------------------------
// DiffExponent

DiffExponent DiffExponent::single(int i, int j, int e) {
  DiffExponent d;
  d.add(i, j, e);
  return d;
}

int DiffExponent::exponent(int i, int j) const {
  for (const auto& f : factors_)
    if (f.i == i && f.j == j) return f.e;
  return 0;
}

void DiffExponent::add(int i, int j, int k) {
  if (i >= j || i < 1) throw std::invalid_argument("DiffExponent: pair must satisfy 1 <= i < j");
  auto it = std::lower_bound(factors_.begin(), factors_.end(), PairPower{i, j, 0},
                             [](const PairPower& a, const PairPower& b) {
                               return std::pair(a.i, a.j) < std::pair(b.i, b.j);
                             });
  if (it != factors_.end() && it->i == i && it->j == j) {
    int e = it->e + k;
    if (e < 0) throw std::domain_error("DiffExponent: negative exponent");
    if (e == 0) {
      factors_.erase(it);
    } else {
      it->e = e;
    }
    return;
  }
  if (k < 0) throw std::domain_error("DiffExponent: negative exponent");
  if (k > 0) factors_.insert(it, PairPower{i, j, k});
}

int DiffExponent::total_degree() const {
  int s = 0;
  for (const auto& f : factors_) s += f.e;
  return s;
}

int DiffExponent::max_slot() const {
  int m = 0;
  for (const auto& f : factors_) m = std::max(m, f.j);
  return m;
}

// ---------------------------------------------------------------------------
// CorrFn

CorrFn::CorrFn(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("CorrFn: negative slot count");
}

CorrFn CorrFn::constant(int n, const PolyR& c) {
  CorrFn f(n);
  f.add_term(DiffExponent{}, c);
  return f;
}

void CorrFn::add_term(const DiffExponent& den, const PolyR& coef) {
  if (coef.is_zero()) return;
  if (den.max_slot() > n_) throw std::invalid_argument("CorrFn: pair index exceeds slot count");
  auto [it, inserted] = terms_.try_emplace(den, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CorrFn corr_add(const CorrFn& f, const CorrFn& g) {
  if (f.slots() != g.slots()) throw std::invalid_argument("corr_add: slot-count mismatch");
  CorrFn out = f;
  for (const auto& [d, c] : g.terms()) out.add_term(d, c);
  return out;
}

CorrFn corr_sub(const CorrFn& f, const CorrFn& g) {
  if (f.slots() != g.slots()) throw std::invalid_argument("corr_sub: slot-count mismatch");
  CorrFn out = f;
  for (const auto& [d, c] : g.terms()) out.add_term(d, -c);
  return out;
}

CorrFn corr_scale(const CorrFn& f, const PolyR& c) {
  CorrFn out(f.slots());
  if (c.is_zero()) return out;
  for (const auto& [d, p] : f.terms()) out.add_term(d, p * c);
  return out;
}

CorrFn corr_mul_diffpow(const CorrFn& f, int i, int j, int k) {
  if (i == j) throw std::invalid_argument("corr_mul_diffpow: i == j");
  const bool swapped = i > j;
  if (swapped) std::swap(i, j);
  if (j > f.slots()) throw std::invalid_argument("corr_mul_diffpow: slot out of range");
  const bool negate = swapped && (k % 2 != 0);
  CorrFn out(f.slots());
  for (const auto& [d, p] : f.terms()) {
    DiffExponent e = d;
    e.add(i, j, k);
    out.add_term(e, negate ? -p : p);
  }
  return out;
}

namespace {

// Equality is decided on each homogeneous component separately (components of
// different total degree are linearly independent). Inside a component every
// numerator is a homogeneous polynomial in the differences, so it is faithfully
// represented by its restriction to z_n = 0, z_{n-1} = 1. That leaves n - 2
// variables, packed 8 bits each into a 64-bit monomial key.
using Mono = std::uint64_t;
using IntPoly = std::unordered_map<Mono, mpz_class>;

struct LinearForm {
  std::vector<std::pair<Mono, int>> parts;  // (monomial, coefficient)
};

LinearForm slot_value(int slot, int n) {
  if (slot == n) return {};
  if (slot == n - 1) return {{{0, 1}}};
  return {{{Mono{1} << (8 * (slot - 1)), 1}}};
}

LinearForm difference(int i, int j, int n) {
  LinearForm out = slot_value(i, n);
  for (auto [m, c] : slot_value(j, n).parts) {
    bool merged = false;
    for (auto& p : out.parts) {
      if (p.first == m) {
        p.second -= c;
        merged = true;
      }
    }
    if (!merged) out.parts.emplace_back(m, -c);
  }
  std::erase_if(out.parts, [](const auto& p) { return p.second == 0; });
  return out;
}

IntPoly multiply(const IntPoly& p, const IntPoly& q) {
  IntPoly out;
  out.reserve(p.size() * q.size());
  for (const auto& [m, c] : p)
    for (const auto& [qm, qc] : q) mpz_addmul(out[m + qm].get_mpz_t(), c.get_mpz_t(), qc.get_mpz_t());
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IntPoly to_poly(const LinearForm& l) {
  IntPoly out;
  for (auto [m, c] : l.parts) out[m] += c;
  return out;
}

struct Residual {
  int degree_group = 0;
  Mono mono = 0;
  int r_degree = 0;
  Rational value;
};

std::string describe_mono(Mono m, int n) {
  std::string out;
  for (int s = 1; s <= n - 2; ++s) {
    unsigned e = static_cast<unsigned>((m >> (8 * (s - 1))) & 0xFF);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "z" + std::to_string(s);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::optional<Residual> first_residual(const CorrFn& h) {
  const int n = h.slots();
  if (h.is_zero()) return std::nullopt;
  if (n > 10) throw std::invalid_argument("corr_eq: at most 10 slots supported");

  std::map<int, std::vector<const std::pair<const DiffExponent, PolyR>*>> groups;
  for (const auto& t : h.terms()) groups[t.first.total_degree()].push_back(&t);

  for (const auto& [deg, terms] : groups) {
    std::map<std::pair<int, int>, int> common;
    mpz_class den = 1;
    int r_top = 0;
    for (const auto* t : terms) {
      for (const auto& f : t->first.factors()) {
        int& e = common[{f.i, f.j}];
        e = std::max(e, f.e);
      }
      for (const auto& c : t->second.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      r_top = std::max(r_top, t->second.degree());
    }
    int total = 0;
    for (const auto& [k, e] : common) total += e;
    if (total - deg > 255) throw std::overflow_error("corr_eq: numerator degree too large");

    std::map<std::tuple<int, int, int>, IntPoly> powers;
    auto power = [&](int i, int j, int e) -> const IntPoly& {
      auto [it, fresh] = powers.try_emplace({i, j, e});
      if (fresh) {
        const IntPoly l = to_poly(difference(i, j, n));
        IntPoly p{{Mono{0}, mpz_class(1)}};
        for (int s = 0; s < e; ++s) p = multiply(p, l);
        it->second = std::move(p);
      }
      return it->second;
    };

    std::vector<IntPoly> acc(static_cast<std::size_t>(r_top + 1));
    for (const auto* t : terms) {
      IntPoly p{{Mono{0}, mpz_class(1)}};
      for (const auto& [key, e] : common) {
        const int missing = e - t->first.exponent(key.first, key.second);
        if (missing > 0) p = multiply(p, power(key.first, key.second, missing));
      }
      const auto& coefs = t->second.coefficients();
      for (std::size_t k = 0; k < coefs.size(); ++k) {
        if (coefs[k] == 0) continue;
        mpz_class scaled = den / coefs[k].get_den() * coefs[k].get_num();
        auto& target = acc[k];
        for (const auto& [m, c] : p) mpz_addmul(target[m].get_mpz_t(), c.get_mpz_t(), scaled.get_mpz_t());
      }
    }
    std::optional<Residual> best;
    for (std::size_t k = 0; k < acc.size(); ++k)
      for (const auto& [m, v] : acc[k]) {
        if (v == 0) continue;
        Residual r{deg, m, static_cast<int>(k), Rational(v, den)};
        r.value.canonicalize();
        if (!best || std::pair(r.mono, r.r_degree) < std::pair(best->mono, best->r_degree)) best = r;
      }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace

bool corr_eq(const CorrFn& f, const CorrFn& g) {
  if (f.slots() != g.slots()) throw std::invalid_argument("corr_eq: slot-count mismatch");
  return !first_residual(corr_sub(f, g)).has_value();
}

std::optional<std::string> corr_diff_witness(const CorrFn& f, const CorrFn& g) {
  if (f.slots() != g.slots()) return "slot-count mismatch";
  auto res = first_residual(corr_sub(f, g));
  if (!res) return std::nullopt;
  std::ostringstream os;
  os << "homogeneous degree -" << res->degree_group << ", numerator monomial r^" << res->r_degree
     << " * " << describe_mono(res->mono, f.slots());
  if (f.slots() >= 2) os << " (at z" << f.slots() - 1 << "=1, z" << f.slots() << "=0)";
  os << " differs by " << to_string(res->value);
  return os.str();
}

Rational corr_eval(const CorrFn& f, std::span<const Rational> z, const Rational& r) {
  const int n = f.slots();
  if (static_cast<int>(z.size()) != n) throw std::invalid_argument("corr_eval: wrong number of points");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (z[i] == z[j]) throw std::domain_error("corr_eval: coincident insertion points");
  Rational acc = 0;
  for (const auto& [d, p] : f.terms()) {
    Rational term = p.eval(r);
    for (const auto& pp : d.factors()) {
      Rational diff = z[pp.i - 1] - z[pp.j - 1];
      for (int e = 0; e < pp.e; ++e) term /= diff;
    }
    acc += term;
  }
  return acc;
}

std::optional<int> corr_degree_r(const CorrFn& f) {
  if (f.is_zero()) return std::nullopt;
  int deg = 0;
  for (const auto& [d, p] : f.terms()) deg = std::max(deg, p.degree());
  return deg;
}

CorrFn corr_specialize(const CorrFn& f, const Rational& r) {
  CorrFn out(f.slots());
  for (const auto& [d, p] : f.terms()) out.add_term(d, PolyR(p.eval(r)));
  return out;
}

CorrFn corr_relabel(const CorrFn& f, std::span<const int> slot_map) {
  const int n = f.slots();
  if (static_cast<int>(slot_map.size()) != n) throw std::invalid_argument("corr_relabel: map size");
  CorrFn out(n);
  for (const auto& [d, p] : f.terms()) {
    DiffExponent e;
    bool negate = false;
    for (const auto& pp : d.factors()) {
      int a = slot_map[pp.i - 1];
      int b = slot_map[pp.j - 1];
      if (a > b) {
        std::swap(a, b);
        if (pp.e % 2 != 0) negate = !negate;
      }
      e.add(a, b, pp.e);
    }
    out.add_term(e, negate ? -p : p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// rendering

RenderFormat parse_render_format(std::string_view name) {
  if (name == "text") return RenderFormat::text;
  if (name == "latex") return RenderFormat::latex;
  if (name == "json") return RenderFormat::json;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

namespace {

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = q < 0 ? "-" : "";
  mpz_class num = abs(q.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_poly(const PolyR& p) {
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string power = k == 1 ? "r" : "r^{" + std::to_string(k) + "}";
    if (k == 0)
      out += latex_rational(c[k]);
    else if (c[k] == 1)
      out += power;
    else if (c[k] == -1)
      out += "-" + power;
    else
      out += latex_rational(c[k]) + " " + power;
  }
  return out;
}

std::size_t summand_count(const PolyR& p) {
  return static_cast<std::size_t>(
      std::count_if(p.coefficients().begin(), p.coefficients().end(), [](const Rational& q) { return q != 0; }));
}

}  // namespace

nlohmann::json corr_to_json(const CorrFn& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [d, p] : f.terms()) {
    nlohmann::json den = nlohmann::json::array();
    for (const auto& pp : d.factors()) den.push_back({pp.i, pp.j, pp.e});
    nlohmann::json coef = nlohmann::json::array();
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) coef.push_back({to_string(c[k]), k});
    terms.push_back({{"den", den}, {"coef", coef}});
  }
  return {{"n", f.slots()}, {"terms", terms}};
}

CorrFn corr_from_json(const nlohmann::json& j) {
  CorrFn f(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    DiffExponent d;
    for (const auto& pp : t.at("den")) d.add(pp.at(0).get<int>(), pp.at(1).get<int>(), pp.at(2).get<int>());
    PolyR p;
    for (const auto& c : t.at("coef"))
      p += PolyR::monomial(parse_rational(c.at(0).get<std::string>()), c.at(1).get<int>());
    f.add_term(d, p);
  }
  return f;
}

std::string corr_render(const CorrFn& f, RenderFormat format) {
  if (format == RenderFormat::json) return corr_to_json(f).dump();
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [d, p] : f.terms()) {
    if (!out.empty()) out += " + ";
    if (format == RenderFormat::text) {
      if (d.empty() && summand_count(p) == 1) {
        out += p.to_text();
        continue;
      }
      out += "(" + p.to_text() + ")";
      for (const auto& pp : d.factors())
        out += " * (z" + std::to_string(pp.i) + "-z" + std::to_string(pp.j) + ")^-" + std::to_string(pp.e);
    } else {
      if (d.empty() && summand_count(p) == 1) {
        out += latex_poly(p);
        continue;
      }
      out += "\\left(" + latex_poly(p) + "\\right)";
      for (const auto& pp : d.factors())
        out += " (z_{" + std::to_string(pp.i) + "}-z_{" + std::to_string(pp.j) + "})^{-" + std::to_string(pp.e) + "}";
    }
  }
  return out;
}

}  // namespace moonshine
