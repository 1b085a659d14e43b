#include "moonshine/superlinear.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace moonshine {

JordanType parse_jordan_type(std::string_view name) {
  if (name == "A" || name == "a") return JordanType::A;
  if (name == "B" || name == "b") return JordanType::B;
  if (name == "C" || name == "c") return JordanType::C;
  throw std::invalid_argument("unknown Jordan type: " + std::string(name));
}

char to_char(JordanType t) {
  switch (t) {
    case JordanType::A: return 'A';
    case JordanType::B: return 'B';
    case JordanType::C: return 'C';
  }
  return '?';
}

std::pair<int, int> SuperSpace::sdim() const {
  int even = static_cast<int>(std::count(parity.begin(), parity.end(), Parity::even));
  return {even, static_cast<int>(parity.size()) - even};
}

std::optional<std::size_t> SuperSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

Vector::Vector(const FormedSpace& space, std::map<std::size_t, Rational> comps) {
  for (auto& [i, c] : comps) c.canonicalize();
  std::erase_if(comps, [](const auto& kv) { return kv.second == 0; });
  std::optional<Parity> p;
  for (const auto& [i, c] : comps) {
    if (i >= space.dim()) throw std::invalid_argument("vector component out of range");
    if (p && *p != space.parity(i)) throw std::invalid_argument("inhomogeneous vector");
    p = space.parity(i);
  }
  comps_ = std::move(comps);
  parity_ = p.value_or(Parity::even);
}

Vector Vector::basis(const FormedSpace& space, std::size_t index) {
  return Vector(space, {{index, Rational(1)}});
}

FormedSpace make_type_space(JordanType x, int d) {
  if (d < 1) throw std::invalid_argument("rank must be >= 1");
  FormedSpace f;
  f.jtype = x;
  f.param = d;
  const auto ud = static_cast<std::size_t>(d);
  switch (x) {
    case JordanType::B:
      f.kind = SpaceKind::type_space;
      for (int i = 1; i <= d; ++i) {
        f.space.labels.push_back("e" + std::to_string(i));
        f.space.parity.push_back(Parity::even);
      }
      f.form = BilinearForm(ud);
      for (std::size_t i = 0; i < ud; ++i) f.form(i, i) = 1;
      break;
    case JordanType::C:
      f.kind = SpaceKind::type_space;
      for (int i = 1; i <= 2 * d; ++i) {
        f.space.labels.push_back("f" + std::to_string(i));
        f.space.parity.push_back(Parity::odd);
      }
      f.form = BilinearForm(2 * ud);
      for (std::size_t i = 0; i < ud; ++i) {
        f.form(i, ud + i) = 1;
        f.form(ud + i, i) = -1;
      }
      break;
    case JordanType::A:
      f.kind = SpaceKind::doubled;
      for (int i = 1; i <= d; ++i) f.space.labels.push_back("e" + std::to_string(i));
      for (int i = 1; i <= d; ++i) f.space.labels.push_back("e" + std::to_string(i) + "*");
      f.space.parity.assign(2 * ud, Parity::even);
      f.form = BilinearForm(2 * ud);
      for (std::size_t i = 0; i < ud; ++i) {
        f.form(i, ud + i) = 1;
        f.form(ud + i, i) = 1;
      }
      break;
  }
  return f;
}

FormedSpace make_level_space(int r) {
  if (r < 1) throw std::invalid_argument("level must be >= 1");
  FormedSpace f;
  f.kind = SpaceKind::level_space;
  f.param = r;
  const auto ur = static_cast<std::size_t>(r);
  for (int i = 1; i <= r; ++i) f.space.labels.push_back("h" + std::to_string(i));
  f.space.parity.assign(ur, Parity::even);
  f.form = BilinearForm(ur);
  for (std::size_t i = 0; i < ur; ++i) f.form(i, i) = 1;
  return f;
}

FormedSpace tensor(const FormedSpace& f, const FormedSpace& g) {
  FormedSpace t;
  t.kind = SpaceKind::tensor;
  t.jtype = f.jtype;
  t.param = f.param;
  t.left_dim = f.dim();
  t.right_dim = g.dim();
  const std::size_t n = f.dim() * g.dim();
  t.form = BilinearForm(n);
  for (std::size_t u = 0; u < f.dim(); ++u) {
    for (std::size_t x = 0; x < g.dim(); ++x) {
      t.space.labels.push_back(f.space.labels[u] + "." + g.space.labels[x]);
      const bool odd = (f.parity(u) == Parity::odd) != (g.parity(x) == Parity::odd);
      t.space.parity.push_back(odd ? Parity::odd : Parity::even);
    }
  }
  for (std::size_t a = 0; a < f.dim(); ++a)
    for (std::size_t x = 0; x < g.dim(); ++x)
      for (std::size_t b = 0; b < f.dim(); ++b)
        for (std::size_t y = 0; y < g.dim(); ++y) {
          if (f.gram(a, b) == 0 || g.gram(x, y) == 0) continue;
          Rational v = f.gram(a, b) * g.gram(x, y);
          if (both_odd(g.parity(x), f.parity(b))) v = -v;
          t.form(a * g.dim() + x, b * g.dim() + y) = v;
        }
  return t;
}

Rational form_eval(const FormedSpace& f, const Vector& u, const Vector& v) {
  Rational acc = 0;
  for (const auto& [i, a] : u.components()) {
    if (i >= f.dim()) throw std::invalid_argument("form_eval: label not in basis");
    for (const auto& [j, b] : v.components()) {
      if (j >= f.dim()) throw std::invalid_argument("form_eval: label not in basis");
      const Rational& g = f.gram(i, j);
      if (g != 0) acc += a * b * g;
    }
  }
  return acc;
}

Vector tensor_vector(const FormedSpace& product, const Vector& left, const Vector& right) {
  if (product.kind != SpaceKind::tensor) throw std::invalid_argument("tensor_vector: not a tensor space");
  std::map<std::size_t, Rational> comps;
  for (const auto& [u, a] : left.components())
    for (const auto& [x, b] : right.components()) comps[u * product.right_dim + x] = a * b;
  return Vector(product, std::move(comps));
}

bool is_supersymmetric(const FormedSpace& f) {
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j) {
      const Rational& g = f.gram(i, j);
      if (g != 0 && f.parity(i) != f.parity(j)) return false;
      Rational expect = f.gram(j, i);
      if (both_odd(f.parity(i), f.parity(j))) expect = -expect;
      if (g != expect) return false;
    }
  return true;
}

Rational gram_determinant(const FormedSpace& f) {
  const std::size_t n = f.dim();
  std::vector<Rational> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = f.gram(i, j);
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[pivot * n + k], m[col * n + k]);
      det = -det;
    }
    det *= m[col * n + col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row * n + col] == 0) continue;
      Rational factor = m[row * n + col] / m[col * n + col];
      for (std::size_t k = col; k < n; ++k) m[row * n + k] -= factor * m[col * n + k];
    }
  }
  return det;
}

bool in_primal_half(const FormedSpace& f, const Vector& v) {
  if (f.kind != SpaceKind::doubled) return false;
  const auto d = static_cast<std::size_t>(f.param);
  return std::all_of(v.components().begin(), v.components().end(), [d](const auto& kv) { return kv.first < d; });
}

bool in_dual_half(const FormedSpace& f, const Vector& v) {
  if (f.kind != SpaceKind::doubled) return false;
  const auto d = static_cast<std::size_t>(f.param);
  return std::all_of(v.components().begin(), v.components().end(), [d](const auto& kv) { return kv.first >= d; });
}

Vector parse_vector(const FormedSpace& f, std::string_view text) {
  std::map<std::size_t, Rational> comps;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty vector");
  std::size_t pos = 0;
  while (pos < s.size()) {
    Rational sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    Rational coef = 1;
    if (pos < s.size() && s[pos] == '(') {
      auto close = s.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced parenthesis in vector: " + s);
      coef = parse_rational(std::string_view(s).substr(pos + 1, close - pos - 1));
      pos = close + 1;
      if (pos < s.size() && s[pos] == '*') ++pos;
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t end = pos;
      while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
      coef = parse_rational(std::string_view(s).substr(pos, end - pos));
      pos = end;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string label = s.substr(pos, end - pos);
    auto idx = f.space.index_of(label);
    if (!idx) throw std::invalid_argument("unknown basis label: '" + label + "'");
    comps[*idx] += sign * coef;
    pos = end;
  }
  return Vector(f, std::move(comps));
}

std::string render_vector(const FormedSpace& f, const Vector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : v.components()) {
    if (!out.empty()) out += "+";
    if (c != 1) out += "(" + to_string(c) + ")";
    out += f.space.labels[i];
  }
  return out;
}

nlohmann::json vector_to_json(const FormedSpace& f, const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [i, c] : v.components()) out.push_back({f.space.labels[i], to_string(c)});
  return out;
}

Vector vector_from_json(const FormedSpace& f, const nlohmann::json& j) {
  std::map<std::size_t, Rational> comps;
  for (const auto& entry : j) {
    const auto label = entry.at(0).get<std::string>();
    auto idx = f.space.index_of(label);
    if (!idx) throw std::invalid_argument("unknown basis label: '" + label + "'");
    comps[*idx] += parse_rational(entry.at(1).get<std::string>());
  }
  return Vector(f, std::move(comps));
}

}  // namespace moonshine
