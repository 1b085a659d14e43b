#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moonshine/corr.hpp"

namespace moonshine::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kVerification = 3;

struct JobSpec {
  JordanType jtype = JordanType::B;
  int rank = 1;
  std::optional<Rational> level;  // nullopt: symbolic r
  std::vector<std::string> insertions;  // "L(a,b)" each
  std::vector<Method> methods;          // empty: closed form only
  bool all_methods = false;             // every method the level admits
  RenderFormat format = RenderFormat::text;
  std::uint64_t seed = 0;
  bool inject_fault = false;
};

JobSpec job_from_json(const nlohmann::json& j);
nlohmann::json job_to_json(const JobSpec& job);

struct PairSpec {
  std::string a;
  std::string b;
  int m = 1;
  int n = 1;
};

/// Splits "L(v,w);L(v,w;2,1) ..." into its L(...) items. Separators between
/// items may be ';', ',' or whitespace. Throws std::invalid_argument.
std::vector<PairSpec> parse_pair_specs(std::string_view text);
InsertionList parse_insertions(JordanType x, int rank, std::string_view text);

/// Runs a corr job, writing the rendering to `out`; returns the exit code.
int run_corr(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Runs one invocation; returns the process exit code (0 ok, 2 usage, 3 verification failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moonshine::cli
