#include "moonshine/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#ifndef MOONSHINE_DEFAULT_CORPUS
#define MOONSHINE_DEFAULT_CORPUS "tests/golden"
#endif

namespace moonshine::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::optional<Rational> parse_level(const std::string& text) {
  if (text == "symbolic" || text == "r") return std::nullopt;
  return parse_rational(text);
}

std::string level_text(const std::optional<Rational>& level) { return level ? to_string(*level) : "symbolic"; }

int to_positive_int(const Rational& q, const char* what) {
  if (q.get_den() != 1 || q < 1 || !q.get_num().fits_sint_p())
    throw std::invalid_argument(std::string(what) + " must be a positive integer");
  return static_cast<int>(q.get_num().get_si());
}

std::vector<Method> all_methods(const std::optional<Rational>& level) {
  std::vector<Method> m{Method::recursion, Method::diagrams, Method::closed};
  if (level && level->get_den() == 1 && *level >= 1) m.push_back(Method::direct);
  return m;
}

SpacePtr type_space(JordanType x, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  return std::make_shared<const FormedSpace>(make_type_space(x, rank));
}

LcaElement parse_lca(const SpacePtr& h, JordanType x, std::string_view text) {
  const auto specs = parse_pair_specs(text);
  if (specs.size() != 1) throw std::invalid_argument("expected a single L(a,b;m,n): " + std::string(text));
  const auto& p = specs.front();
  return make_generator(h, x, parse_vector(*h, p.a), parse_vector(*h, p.b), p.m, p.n);
}

std::string render_insertions(const InsertionList& t) {
  std::string out;
  for (const auto& e : t.entries) {
    if (!out.empty()) out += ";";
    out += "L(" + render_vector(*t.space, e.a) + "," + render_vector(*t.space, e.b) + ")";
  }
  return out;
}

std::string pair_text(const PairSpec& p) {
  const std::string modes = p.m == 1 && p.n == 1 ? "" : ";" + std::to_string(p.m) + "," + std::to_string(p.n);
  return "L(" + p.a + "," + p.b + modes + ")";
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::invalid_argument("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<PairSpec> parse_pair_specs(std::string_view text) {
  std::vector<PairSpec> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ';' || text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos]))))
      ++pos;
  };
  for (skip(); pos < text.size(); skip()) {
    if (text[pos] != 'L' || pos + 1 >= text.size() || text[pos + 1] != '(')
      throw std::invalid_argument("expected L(...) at: " + std::string(text.substr(pos)));
    pos += 2;
    int depth = 1;
    std::vector<std::string> fields(1);
    std::vector<char> seps;
    for (; pos < text.size() && depth > 0; ++pos) {
      const char c = text[pos];
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) break;
      if (depth == 1 && (c == ',' || c == ';')) {
        seps.push_back(c);
        fields.emplace_back();
        continue;
      }
      fields.back().push_back(c);
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses in insertion list");
    ++pos;
    PairSpec p;
    if (fields.size() == 2 && seps[0] == ',') {
      p.a = trim(fields[0]);
      p.b = trim(fields[1]);
    } else if (fields.size() == 4 && seps[0] == ',' && seps[1] == ';' && seps[2] == ',') {
      p.a = trim(fields[0]);
      p.b = trim(fields[1]);
      p.m = to_positive_int(parse_rational(trim(fields[2])), "mode");
      p.n = to_positive_int(parse_rational(trim(fields[3])), "mode");
    } else {
      throw std::invalid_argument("malformed insertion, expected L(a,b) or L(a,b;m,n)");
    }
    out.push_back(std::move(p));
  }
  return out;
}

InsertionList parse_insertions(JordanType x, int rank, std::string_view text) {
  const FormedSpace h = make_type_space(x, rank);
  std::vector<VectorPair> entries;
  for (const auto& p : parse_pair_specs(text)) {
    if (p.m != 1 || p.n != 1) throw std::invalid_argument("correlation insertions must be weight-(1,1) generators");
    entries.push_back({parse_vector(h, p.a), parse_vector(h, p.b)});
  }
  return make_insertion_list(x, rank, std::move(entries));
}

JobSpec job_from_json(const nlohmann::json& j) {
  JobSpec job;
  job.jtype = parse_jordan_type(j.at("type").get<std::string>());
  job.rank = j.value("rank", 1);
  if (j.contains("level")) {
    const auto& lv = j.at("level");
    job.level = parse_level(lv.is_string() ? lv.get<std::string>() : lv.dump());
  }
  if (j.contains("insertions")) {
    const auto& ins = j.at("insertions");
    if (ins.is_string()) {
      for (const auto& p : parse_pair_specs(ins.get<std::string>())) job.insertions.push_back(pair_text(p));
    } else {
      for (const auto& s : ins) job.insertions.push_back(s.get<std::string>());
    }
  }
  if (j.contains("methods")) {
    for (const auto& m : j.at("methods")) {
      if (m.get<std::string>() == "all")
        job.all_methods = true;
      else
        job.methods.push_back(parse_method(m.get<std::string>()));
    }
  }
  job.format = parse_render_format(j.value("format", std::string("text")));
  job.seed = j.value("seed", std::uint64_t{0});
  return job;
}

nlohmann::json job_to_json(const JobSpec& job) {
  nlohmann::json j{{"type", std::string(1, to_char(job.jtype))},
                   {"rank", job.rank},
                   {"level", level_text(job.level)},
                   {"insertions", job.insertions},
                   {"methods", nlohmann::json::array()},
                   {"format", job.format == RenderFormat::text ? "text" : job.format == RenderFormat::latex ? "latex" : "json"},
                   {"seed", job.seed}};
  if (job.all_methods) j["methods"].push_back("all");
  for (Method m : job.methods) j["methods"].push_back(method_name(m));
  return j;
}

int run_corr(const JobSpec& job, std::ostream& out, std::ostream& err) {
  std::string joined;
  for (const auto& s : job.insertions) joined += s + ";";
  const InsertionList t = parse_insertions(job.jtype, job.rank, joined);
  const auto methods = job.all_methods ? all_methods(job.level)
                       : job.methods.empty() ? std::vector<Method>{Method::closed}
                                             : job.methods;

  std::vector<std::pair<Method, CorrFn>> results;
  for (Method m : methods) {
    if (m == Method::direct) {
      if (!job.level) throw std::invalid_argument("method direct needs an integer level >= 1");
      results.emplace_back(m, corr_direct(t, to_positive_int(*job.level, "level for method direct")));
    } else {
      CorrFn f = run_symbolic(m, t, ClosedFormOptions{job.inject_fault});
      if (job.level) f = corr_specialize(f, *job.level);
      results.emplace_back(m, std::move(f));
    }
  }

  std::optional<std::string> witness;
  for (std::size_t i = 1; i < results.size() && !witness; ++i)
    if (auto w = corr_diff_witness(results[0].second, results[i].second))
      witness = method_name(results[0].first) + " vs " + method_name(results[i].first) + ": " + *w;
  const bool agree = !witness.has_value();

  if (job.format == RenderFormat::json) {
    for (const auto& [m, f] : results) {
      nlohmann::json j = corr_to_json(f);
      j["method"] = method_name(m);
      j["agreement"] = agree;
      out << j.dump() << "\n";
    }
  } else if (results.size() == 1) {
    out << corr_render(results[0].second, job.format) << "\n";
  } else {
    for (const auto& [m, f] : results) out << method_name(m) << ": " << corr_render(f, job.format) << "\n";
    out << "agreement: " << (agree ? "true" : "false") << "\n";
  }
  if (!agree) {
    err << "disagreement: " << *witness << "\n";
    return kVerification;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

namespace {

struct CheckArgs {
  int max_n = 4;
  std::string ranks = "1,2";
  std::string types = "A,B,C";
  std::string r_samples = "1,2,3";
  std::string methods = "recursion,diagrams,closed,direct";
  int instances = 3;
  std::uint64_t seed = 0;
  bool inject_fault = false;
  std::string format = "json";
};

int run_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  CheckOptions options;
  options.methods.clear();
  for (const auto& m : split_list(a.methods)) options.methods.push_back(parse_method(m));
  options.r_samples.clear();
  for (const auto& r : split_list(a.r_samples)) options.r_samples.push_back(to_positive_int(parse_rational(r), "r sample"));
  options.closed.drop_cycle_prefactor = a.inject_fault;

  std::mt19937_64 rng(a.seed);
  nlohmann::json failures = nlohmann::json::array();
  std::size_t runs = 0;
  std::size_t assertions = 0;
  for (const auto& ts : split_list(a.types)) {
    const JordanType x = parse_jordan_type(ts);
    for (const auto& rs : split_list(a.ranks)) {
      const int d = to_positive_int(parse_rational(rs), "rank");
      for (int n = 0; n <= a.max_n; ++n)
        for (int i = 0; i < a.instances; ++i) {
          const InsertionList t = random_insertion_list(x, d, n, rng);
          options.seed = rng();
          const CheckReport report = corr_check(t, options);
          ++runs;
          assertions += report.items.size();
          if (const CheckItem* bad = report.first_failure()) {
            failures.push_back({{"type", ts}, {"rank", d}, {"n", n}, {"instance", i},
                                {"insertions", render_insertions(t)}, {"check", bad->name}, {"witness", bad->witness}});
          }
        }
    }
  }
  const bool pass = failures.empty();
  if (a.format == "json") {
    out << nlohmann::json{{"pass", pass}, {"instances", runs}, {"assertions", assertions}, {"failures", failures}}.dump()
        << "\n";
  } else {
    out << "instances: " << runs << ", assertions: " << assertions << ", failures: " << failures.size() << "\n";
  }
  if (!pass) {
    const auto& f = failures.front();
    err << "FAIL " << f["type"].get<std::string>() << " d=" << f["rank"] << " n=" << f["n"] << " "
        << f["insertions"].get<std::string>() << ": " << f["check"].get<std::string>() << ": "
        << f["witness"].get<std::string>() << "\n";
    return kVerification;
  }
  return kOk;
}

int run_bench(int max_n, const std::string& type, int rank, std::uint64_t seed, const std::string& engines,
              std::ostream& out) {
  const JordanType x = parse_jordan_type(type);
  const auto selected = split_list(engines);
  auto want = [&](const std::string& e) { return std::find(selected.begin(), selected.end(), e) != selected.end(); };
  out << "engine,n,type,millis,terms\n";
  std::mt19937_64 rng(seed);
  for (int n = 2; n <= max_n; ++n) {
    const InsertionList t = random_insertion_list(x, rank, n, rng);
    auto timed = [&](const std::string& name, auto&& fn) {
      if (!want(name)) return;
      const auto t0 = std::chrono::steady_clock::now();
      const std::size_t terms = fn();
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      out << name << "," << n << "," << type << "," << std::fixed << std::setprecision(3) << ms << "," << terms << "\n";
    };
    timed("diagrams", [&] { return count_diagrams(x, n); });
    timed("closed", [&] { return corr_closed_form(t).terms().size(); });
    timed("recursion", [&] { return corr_recursion(t).terms().size(); });
  }
  return kOk;
}

int run_selftest(const std::filesystem::path& corpus, bool update, std::ostream& out, std::ostream& err) {
  if (!std::filesystem::is_directory(corpus)) throw std::invalid_argument("corpus directory not found: " + corpus.string());
  std::vector<std::filesystem::path> jobs;
  for (const auto& entry : std::filesystem::directory_iterator(corpus))
    if (entry.path().extension() == ".json") jobs.push_back(entry.path());
  std::sort(jobs.begin(), jobs.end());
  int failed = 0;
  for (const auto& path : jobs) {
    std::ostringstream got;
    std::ostringstream job_err;
    int code = kUsage;
    try {
      code = run_corr(job_from_json(nlohmann::json::parse(read_file(path))), got, job_err);
    } catch (const std::exception& e) {
      job_err << "error: " << e.what() << "\n";
    }
    auto expected_path = path;
    expected_path.replace_extension(".txt");
    if (update) {
      std::ofstream(expected_path) << got.str();
      out << "wrote " << expected_path.filename().string() << "\n";
      continue;
    }
    const std::string expected = std::filesystem::exists(expected_path) ? read_file(expected_path) : "";
    if (code == kOk && got.str() == expected) {
      out << "ok   " << path.stem().string() << "\n";
    } else {
      ++failed;
      out << "FAIL " << path.stem().string() << "\n";
      err << path.stem().string() << ": expected\n" << expected << "got\n" << got.str() << job_err.str();
    }
  }
  out << jobs.size() - static_cast<std::size_t>(failed) << "/" << jobs.size() << " golden files reproduced\n";
  return failed ? kVerification : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact genus-zero correlation functions of moonshine-type vertex algebras V_{J_X,r}", "moonshine"};
  app.require_subcommand(1);

  std::string type = "B";
  int rank = 1;
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", type, "Jordan type A, B or C")->check(CLI::IsMember({"A", "B", "C"}));
    sub->add_option("--rank", rank, "rank d of the type space")->check(CLI::PositiveNumber);
  };

  // corr
  auto* corr = app.add_subcommand("corr", "compute a correlation function");
  add_type(corr);
  std::string level = "symbolic";
  std::string insertions;
  std::vector<std::string> methods;
  std::string format = "text";
  std::string job_file;
  std::uint64_t seed = 0;
  bool inject = false;
  corr->add_option("--level", level, "\"symbolic\" or a rational value of r");
  corr->add_option("--insertions", insertions, "e.g. \"L(e1,e1);L(e1,e1)\"");
  corr->add_option("--method", methods, "recursion, diagrams, closed, direct or all (repeatable; default closed)")->delimiter(',');
  corr->add_option("--format", format, "text, latex or json")->check(CLI::IsMember({"text", "latex", "json"}));
  corr->add_option("--job", job_file, "JobSpec JSON file (overrides the other options)");
  corr->add_option("--seed", seed, "seed recorded in the job");
  corr->add_flag("--inject-fault", inject, "use 2^-n instead of 2^(-s-n) in the closed form");

  // bracket / cocycle
  std::vector<std::string> operands;
  auto* bracket = app.add_subcommand("bracket", "all nonzero k-th products of two L(a,b;m,n)");
  add_type(bracket);
  bracket->add_option("operands", operands, "two elements L(a,b;m,n)")->expected(2)->required();
  auto* cocycle_cmd = app.add_subcommand("cocycle", "the 2-cocycle c(x,y)");
  add_type(cocycle_cmd);
  cocycle_cmd->add_option("operands", operands, "two elements L(a,b;m,n)")->expected(2)->required();

  // jordan
  auto* jordan = app.add_subcommand("jordan", "Jordan algebra matrices, products and traces");
  add_type(jordan);
  std::string matrix_of, product_of, trace_of;
  jordan->add_option("--matrix", matrix_of, "print the matrix of L(a,b)");
  jordan->add_option("--product", product_of, "Jordan product of two L(a,b)");
  jordan->add_option("--trace", trace_of, "trace of the ordered product of L(a,b)'s");

  // diagrams
  auto* diagrams = app.add_subcommand("diagrams", "enumerate contraction diagrams");
  add_type(diagrams);
  int n = 2;
  bool count_only = false;
  diagrams->add_option("--n", n, "number of insertions")->check(CLI::NonNegativeNumber);
  diagrams->add_flag("--count", count_only, "print only the number of diagrams");

  // check
  auto* check = app.add_subcommand("check", "cross-verify all engines on random insertion lists");
  CheckArgs ca;
  check->add_option("--max-n", ca.max_n, "largest number of insertions")->check(CLI::NonNegativeNumber);
  check->add_option("--ranks", ca.ranks, "comma-separated ranks");
  check->add_option("--types", ca.types, "comma-separated Jordan types");
  check->add_option("--r-samples", ca.r_samples, "levels for the direct engine");
  check->add_option("--methods", ca.methods, "engines to compare");
  check->add_option("--instances", ca.instances, "random lists per (type, rank, n)")->check(CLI::PositiveNumber);
  check->add_option("--seed", ca.seed, "random seed");
  check->add_option("--format", ca.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  check->add_flag("--inject-fault", ca.inject_fault, "corrupt the closed-form prefactor");

  // bench
  auto* bench = app.add_subcommand("bench", "time the engines, CSV output");
  int bench_n = 7;
  std::string engines = "diagrams,closed,recursion";
  bench->add_option("--max-n", bench_n, "largest n")->check(CLI::Range(2, 9));
  bench->add_option("--engines", engines, "comma-separated engines");
  bench->add_option("--seed", seed, "random seed");
  add_type(bench);

  // selftest
  auto* selftest = app.add_subcommand("selftest", "replay the golden corpus");
  std::string corpus = MOONSHINE_DEFAULT_CORPUS;
  bool update = false;
  selftest->add_option("--corpus", corpus, "directory of (job.json, job.txt) pairs");
  selftest->add_flag("--update", update, "rewrite the expected renderings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    const JordanType x = parse_jordan_type(type);
    if (corr->parsed()) {
      JobSpec job;
      if (!job_file.empty()) {
        job = job_from_json(nlohmann::json::parse(read_file(job_file)));
      } else {
        job.jtype = x;
        job.rank = rank;
        job.level = parse_level(level);
        for (const auto& p : parse_pair_specs(insertions)) job.insertions.push_back(pair_text(p));
        for (const auto& m : methods) {
          if (m == "all")
            job.all_methods = true;
          else
            job.methods.push_back(parse_method(m));
        }
        job.format = parse_render_format(format);
        job.seed = seed;
      }
      job.inject_fault = job.inject_fault || inject;
      return run_corr(job, out, err);
    }
    if (bracket->parsed() || cocycle_cmd->parsed()) {
      const SpacePtr h = type_space(x, rank);
      const LcaElement a = parse_lca(h, x, operands[0]);
      const LcaElement b = parse_lca(h, x, operands[1]);
      if (a.quads_zero() || b.quads_zero()) throw std::invalid_argument("operand is the zero state");
      const int top = *a.homogeneous_degree() + *b.homogeneous_degree() - 1;
      if (cocycle_cmd->parsed()) {
        out << to_string(kth_product(a, top, b).central_r() / factorial(top)) << "\n";
        return kOk;
      }
      bool any = false;
      for (int k = 0; k <= top; ++k) {
        const LcaElement p = kth_product(a, k, b);
        if (p.is_zero()) continue;
        out << "(" << k << ") " << p.to_text() << "\n";
        any = true;
      }
      if (!any) out << "0\n";
      return kOk;
    }
    if (jordan->parsed()) {
      const FormedSpace h = make_type_space(x, rank);
      auto endos = [&](const std::string& text) {
        std::vector<VectorPair> pairs;
        for (const auto& p : parse_pair_specs(text)) {
          if (p.m != 1 || p.n != 1) throw std::invalid_argument("jordan elements take L(a,b) only");
          pairs.push_back({parse_vector(h, p.a), parse_vector(h, p.b)});
        }
        return pairs;
      };
      if (!matrix_of.empty()) {
        for (const auto& p : endos(matrix_of)) out << endo_from_pair(h, p.a, p.b).matrix.to_text() << "\n";
      }
      if (!product_of.empty()) {
        const auto pairs = endos(product_of);
        if (pairs.size() != 2) throw std::invalid_argument("--product takes exactly two elements");
        out << jordan_product(endo_from_pair(h, pairs[0].a, pairs[0].b), endo_from_pair(h, pairs[1].a, pairs[1].b))
                   .matrix.to_text()
            << "\n";
      }
      if (!trace_of.empty()) out << to_string(trace_cycle(h, endos(trace_of))) << "\n";
      if (matrix_of.empty() && product_of.empty() && trace_of.empty())
        throw std::invalid_argument("jordan needs one of --matrix, --product, --trace");
      return kOk;
    }
    if (diagrams->parsed()) {
      if (count_only) {
        out << count_diagrams(x, n) << "\n";
        return kOk;
      }
      for_each_diagram(x, n, [&](const Diagram& d) {
        out << render_diagram(d, x) << "  c=" << collapse(d, n).cycles << "\n";
      });
      return kOk;
    }
    if (check->parsed()) return run_check(ca, out, err);
    if (bench->parsed()) return run_bench(bench_n, type, rank, seed, engines, out);
    if (selftest->parsed()) return run_selftest(corpus, update, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace moonshine::cli
