#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "moonshine/corr.hpp"

namespace moonshine {

std::string method_name(Method m) {
  switch (m) {
    case Method::recursion: return "recursion";
    case Method::diagrams: return "diagrams";
    case Method::closed: return "closed";
    case Method::direct: return "direct";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "recursion") return Method::recursion;
  if (name == "diagrams") return Method::diagrams;
  if (name == "closed") return Method::closed;
  if (name == "direct") return Method::direct;
  throw std::invalid_argument("unknown method: " + std::string(name));
}

bool CheckReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

const CheckItem* CheckReport::first_failure() const {
  for (const auto& c : items)
    if (!c.pass) return &c;
  return nullptr;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json out{{"pass", all_pass()}, {"items", nlohmann::json::array()}};
  for (const auto& c : items) {
    nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    out["items"].push_back(std::move(j));
  }
  return out;
}

CorrFn run_symbolic(Method m, const InsertionList& t, const ClosedFormOptions& closed) {
  switch (m) {
    case Method::recursion: return corr_recursion(t);
    case Method::diagrams: return corr_diagram_sum(t);
    case Method::closed: return corr_closed_form(t, closed);
    case Method::direct: break;
  }
  throw std::invalid_argument("run_symbolic: direct is not symbolic");
}

namespace {

void compare(CheckReport& report, std::string name, const CorrFn& f, const CorrFn& g) {
  CheckItem item{std::move(name), true, ""};
  if (auto w = corr_diff_witness(f, g)) {
    item.pass = false;
    item.witness = *w;
  }
  report.items.push_back(std::move(item));
}

}  // namespace

CheckReport corr_check(const InsertionList& t, const CheckOptions& options) {
  CheckReport report;
  const int n = t.size();
  std::vector<std::pair<Method, CorrFn>> symbolic;
  bool want_direct = false;
  for (Method m : options.methods) {
    if (m == Method::direct)
      want_direct = true;
    else
      symbolic.emplace_back(m, run_symbolic(m, t, options.closed));
  }

  for (std::size_t i = 0; i + 1 < symbolic.size(); ++i)
    compare(report, method_name(symbolic[i].first) + "=" + method_name(symbolic[i + 1].first), symbolic[i].second,
            symbolic[i + 1].second);

  for (const auto& [m, f] : symbolic) {
    const auto deg = corr_degree_r(f);
    CheckItem item{"degree(" + method_name(m) + ")", true, ""};
    if (deg && *deg > n / 2) {
      item.pass = false;
      item.witness = "degree in r is " + std::to_string(*deg) + " > " + std::to_string(n / 2);
    }
    report.items.push_back(std::move(item));
  }

  if (want_direct) {
    for (int r : options.r_samples) {
      const CorrFn direct = corr_direct(t, r);
      for (const auto& [m, f] : symbolic)
        compare(report, "direct(r=" + std::to_string(r) + ")=" + method_name(m), direct, corr_specialize(f, r));
    }
  }

  std::mt19937_64 rng(options.seed);
  for (int round = 0; round < options.permutation_rounds && n > 1; ++round) {
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 0);
    std::shuffle(tau.begin(), tau.end(), rng);
    const InsertionList moved = permuted(t, tau);
    std::vector<int> slot_map(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) slot_map[i] = tau[i] + 1;
    for (const auto& [m, f] : symbolic) {
      const CorrFn back = corr_relabel(run_symbolic(m, moved, options.closed), slot_map);
      compare(report, "permutation(" + method_name(m) + ")#" + std::to_string(round), f, back);
    }
  }
  return report;
}

}  // namespace moonshine
