#pragma once

// Genus-zero correlation functions <1', L_{a1,b1}(z1) ... L_{an,bn}(zn) 1> of the
// level-r vertex algebra built on C_X, computed four independent ways.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "moonshine/exact.hpp"
#include "moonshine/fock.hpp"
#include "moonshine/jordan.hpp"
#include "moonshine/lca.hpp"
#include "moonshine/permutation.hpp"

namespace moonshine {

/// The sequence T = (a1,b1)...(an,bn) of weight-(1,1) generators. Entry i sits at
/// insertion point z_{i+1}.
struct InsertionList {
  JordanType jtype = JordanType::B;
  int rank = 1;
  SpacePtr space;  // the type space of make_type_space(jtype, rank)
  std::vector<VectorPair> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

/// Validates vectors against the type space (type A: a in h, b in h*).
InsertionList make_insertion_list(JordanType x, int rank, std::vector<VectorPair> entries);
/// Entry i of the result is entry order[i] of the input.
InsertionList permuted(const InsertionList& t, std::span<const int> order);
InsertionList random_insertion_list(JordanType x, int rank, int n, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Diagrams

/// Vertex 2k is a_{k+1}, vertex 2k+1 is b_{k+1}.
struct Diagram {
  std::vector<std::pair<int, int>> edges;  // u < v, sorted by u
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Perfect matchings with no edge inside one slot; in type A additionally no
/// a-a or b*-b* edge. Deterministic order (lowest free vertex first).
void for_each_diagram(JordanType x, int n, const std::function<void(const Diagram&)>& fn);
std::vector<Diagram> enum_diagrams(const InsertionList& t);
std::size_t count_diagrams(JordanType x, int n);
std::string render_diagram(const Diagram& d, JordanType x);

struct Collapse {
  std::vector<std::pair<int, int>> slot_edges;  // 1-based slots, one per diagram edge
  int cycles = 0;
};
Collapse collapse(const Diagram& d, int n);

/// Koszul sign of the full contraction, by left-to-right elimination.
int contraction_sign(const Diagram& d, const InsertionList& t);
CorrFn diagram_term(const Diagram& d, const InsertionList& t);

// ---------------------------------------------------------------------------
// Engines

CorrFn corr_diagram_sum(const InsertionList& t);

struct ClosedFormOptions {
  /// Fault injection for the verification harness: use 2^{-n} instead of
  /// 2^{-s-n} in types B and C.
  bool drop_cycle_prefactor = false;
};
CorrFn corr_closed_form(const InsertionList& t, const ClosedFormOptions& options = {});

/// CFT recursion in Vert_r(C_X) with symbolic r.
CorrFn corr_recursion(const InsertionList& t);
/// Same recursion for arbitrary weight-homogeneous elements of C_X; element i
/// sits at z_{i+1}. Throws std::invalid_argument for inhomogeneous insertions.
CorrFn corr_recursion(std::span<const LcaElement> insertions);

/// The same recursion run in the free-field Fock space of h (x) h' with
/// sdim h' = (r|0); coefficients are constants.
CorrFn corr_direct(const InsertionList& t, int r);
CorrFn corr_direct(std::span<const FockState> insertions);
/// The dual-pair images (1/2) sum_i (a (x) e_i)(-1)(b (x) e_i)(-1) 1.
std::vector<FockState> dual_pair_states(const InsertionList& t, int r);

// ---------------------------------------------------------------------------
// Cross-verification

enum class Method { recursion, diagrams, closed, direct };
std::string method_name(Method m);
Method parse_method(std::string_view name);

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
  const CheckItem* first_failure() const;
  nlohmann::json to_json() const;
};

struct CheckOptions {
  std::vector<Method> methods{Method::recursion, Method::diagrams, Method::closed, Method::direct};
  std::vector<int> r_samples{1, 2, 3};
  std::uint64_t seed = 0;
  int permutation_rounds = 1;  // random slot permutations per symbolic engine
  ClosedFormOptions closed;
};

CheckReport corr_check(const InsertionList& t, const CheckOptions& options);
/// Runs a symbolic engine by name.
CorrFn run_symbolic(Method m, const InsertionList& t, const ClosedFormOptions& closed = {});

}  // namespace moonshine
