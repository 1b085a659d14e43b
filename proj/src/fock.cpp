#include "moonshine/fock.hpp"

#include <stdexcept>

namespace moonshine {

std::optional<std::pair<FockMonomial, int>> FockMonomial::normalize(const FormedSpace& space,
                                                                    std::vector<ModeFactor> factors) {
  int sign = 1;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    for (std::size_t j = i; j > 0 && factors[j] < factors[j - 1]; --j) {
      if (both_odd(space.parity(factors[j].index), space.parity(factors[j - 1].index))) sign = -sign;
      std::swap(factors[j], factors[j - 1]);
    }
  }
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i] == factors[i - 1] && space.parity(factors[i].index) == Parity::odd) return std::nullopt;
  }
  for (const auto& f : factors) {
    if (f.mode > -1) throw std::invalid_argument("FockMonomial: creation modes must be <= -1");
    if (f.index >= space.dim()) throw std::invalid_argument("FockMonomial: index out of range");
  }
  FockMonomial m;
  m.factors_ = std::move(factors);
  return std::pair{std::move(m), sign};
}

int FockMonomial::weight() const {
  int w = 0;
  for (const auto& f : factors_) w -= f.mode;
  return w;
}

Parity FockMonomial::parity(const FormedSpace& space) const {
  bool odd = false;
  for (const auto& f : factors_)
    if (space.parity(f.index) == Parity::odd) odd = !odd;
  return odd ? Parity::odd : Parity::even;
}

// ---------------------------------------------------------------------------

FockState FockState::vacuum(SpacePtr ambient) {
  FockState s(std::move(ambient));
  s.add(FockMonomial{}, 1);
  return s;
}

FockState FockState::monomial(SpacePtr ambient, std::vector<ModeFactor> factors, const Rational& coef) {
  FockState s(ambient);
  auto norm = FockMonomial::normalize(*ambient, std::move(factors));
  if (norm) s.add(norm->first, coef * norm->second);
  return s;
}

void FockState::add(const FockMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockState& FockState::operator+=(const FockState& o) {
  if (!ambient_) ambient_ = o.ambient_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  if (!ambient_) ambient_ = o.ambient_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

FockState& FockState::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

int FockState::max_weight() const {
  int w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
  return w;
}

std::optional<int> FockState::homogeneous_weight() const {
  std::optional<int> w;
  for (const auto& [m, c] : terms_) {
    if (w && *w != m.weight()) return std::nullopt;
    w = m.weight();
  }
  return w;
}

Parity FockState::parity() const {
  if (terms_.empty()) return Parity::even;
  return terms_.begin()->first.parity(*ambient_);
}

FockState FockState::without_vacuum() const {
  FockState s = *this;
  s.terms_.erase(FockMonomial{});
  return s;
}

std::string FockState::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += to_string(c) + "*";
    for (const auto& f : m.factors())
      out += ambient_->space.labels[f.index] + "(" + std::to_string(f.mode) + ")";
    out += "|0>";
  }
  return out;
}

// ---------------------------------------------------------------------------

FockState apply_basis_mode(std::size_t index, int m, const FockState& s) {
  const FormedSpace& space = s.space();
  if (index >= space.dim()) throw std::invalid_argument("apply_mode: vector not in ambient space");
  FockState out(s.ambient());
  if (m == 0) return out;
  const bool a_odd = space.parity(index) == Parity::odd;
  if (m < 0) {
    for (const auto& [mono, c] : s.terms()) {
      std::vector<ModeFactor> f;
      f.reserve(mono.factors().size() + 1);
      f.push_back({m, index});
      f.insert(f.end(), mono.factors().begin(), mono.factors().end());
      auto norm = FockMonomial::normalize(space, std::move(f));
      if (norm) out.add(norm->first, c * norm->second);
    }
    return out;
  }
  for (const auto& [mono, c] : s.terms()) {
    const auto& f = mono.factors();
    bool odd_before = false;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[j].mode == -m) {
        const Rational& g = space.gram(index, f[j].index);
        if (g != 0) {
          std::vector<ModeFactor> rest;
          rest.reserve(f.size() - 1);
          for (std::size_t l = 0; l < f.size(); ++l)
            if (l != j) rest.push_back(f[l]);
          auto norm = FockMonomial::normalize(space, std::move(rest));
          Rational v = c * g * m;
          if (a_odd && odd_before) v = -v;
          out.add(norm->first, v);
        }
      }
      if (space.parity(f[j].index) == Parity::odd) odd_before = !odd_before;
    }
  }
  return out;
}

FockState apply_mode(const Vector& a, int m, const FockState& s) {
  FockState out(s.ambient());
  for (const auto& [i, c] : a.components()) out += apply_basis_mode(i, m, s) * c;
  return out;
}

namespace {

struct ModeChoice {
  std::size_t index;
  int n;      // the factor is e_index(-n) in the state
  int j = 0;  // chosen operator mode
  bool annihilator = false;
};

// Distributes `rest` >= 0 extra units over the creators: creator i takes mode
// -n_i - c_i with sum c_i = rest.
template <class Fn>
void for_each_creator_split(std::vector<ModeChoice*>& creators, std::size_t pos, int rest, Fn&& fn) {
  if (pos + 1 == creators.size()) {
    creators[pos]->j = -creators[pos]->n - rest;
    fn();
    return;
  }
  for (int c = 0; c <= rest; ++c) {
    creators[pos]->j = -creators[pos]->n - c;
    for_each_creator_split(creators, pos + 1, rest - c, fn);
  }
}

template <class Fn>
void for_each_mode_choice(std::vector<ModeChoice>& choice, std::size_t pos, int budget, int target, Fn&& fn) {
  if (pos == choice.size()) {
    std::vector<ModeChoice*> creators;
    int creator_sum = target;
    int n_sum = 0;
    for (auto& c : choice) {
      if (c.annihilator) {
        creator_sum -= c.j;
      } else {
        creators.push_back(&c);
        n_sum += c.n;
      }
    }
    if (creators.empty()) {
      if (creator_sum == 0) fn();
      return;
    }
    const int rest = -creator_sum - n_sum;
    if (rest < 0) return;
    for_each_creator_split(creators, 0, rest, fn);
    return;
  }
  choice[pos].annihilator = false;
  for_each_mode_choice(choice, pos + 1, budget, target, fn);
  choice[pos].annihilator = true;
  for (int j = 1; j <= budget; ++j) {
    choice[pos].j = j;
    for_each_mode_choice(choice, pos + 1, budget - j, target, fn);
  }
  choice[pos].annihilator = false;
}

}  // namespace

FockState nth_product(const FockState& u, int k, const FockState& v) {
  const SpacePtr& ambient = v.ambient() ? v.ambient() : u.ambient();
  FockState out(ambient);
  if (u.is_zero() || v.is_zero()) return out;
  const FormedSpace& space = *ambient;
  const int wv = v.max_weight();

  for (const auto& [mono, cu] : u.terms()) {
    std::vector<ModeChoice> choice;
    for (const auto& f : mono.factors()) choice.push_back({f.index, -f.mode});
    const int target = k + 1 - mono.weight();

    for_each_mode_choice(choice, 0, wv, target, [&] {
      Rational coef = cu;
      for (const auto& c : choice) coef *= binomial(-c.j - 1, c.n - 1);
      if (coef == 0) return;
      // Normal ordering: annihilators move to the right of every creator.
      bool odd = false;
      for (std::size_t i = 0; i < choice.size(); ++i) {
        if (!choice[i].annihilator || space.parity(choice[i].index) != Parity::odd) continue;
        for (std::size_t l = i + 1; l < choice.size(); ++l)
          if (!choice[l].annihilator && space.parity(choice[l].index) == Parity::odd) odd = !odd;
      }
      FockState s = v;
      for (auto it = choice.rbegin(); it != choice.rend() && !s.is_zero(); ++it)
        if (it->annihilator) s = apply_basis_mode(it->index, it->j, s);
      for (auto it = choice.rbegin(); it != choice.rend() && !s.is_zero(); ++it)
        if (!it->annihilator) s = apply_basis_mode(it->index, it->j, s);
      if (s.is_zero()) return;
      out += s * (odd ? -coef : coef);
    });
  }
  return out;
}

FockState translation(const FockState& s) {
  FockState out(s.ambient());
  for (const auto& [mono, c] : s.terms()) {
    const auto& f = mono.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::vector<ModeFactor> g = f;
      const int n = -g[i].mode;
      g[i].mode -= 1;
      auto norm = FockMonomial::normalize(s.space(), std::move(g));
      if (norm) out.add(norm->first, c * n * norm->second);
    }
  }
  return out;
}

Rational vacuum_coeff(const FockState& s) {
  auto it = s.terms().find(FockMonomial{});
  return it == s.terms().end() ? Rational(0) : it->second;
}

}  // namespace moonshine
