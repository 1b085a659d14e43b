#pragma once

// Exact scalars, polynomials in the level r, and correlation functions as
// rational functions in pairwise differences of insertion points.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace moonshine {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// binom(x, k) for arbitrary integer x and k >= 0 (zero for k < 0).
Rational binomial(long x, long k);
Rational factorial(long n);

// ---------------------------------------------------------------------------

/// Polynomial in the formal level variable r, coefficients stored lowest degree first.
class PolyR {
 public:
  PolyR() = default;
  PolyR(Rational c);  // NOLINT: constants convert implicitly
  PolyR(long c) : PolyR(Rational(c)) {}  // NOLINT

  static PolyR level() { return monomial(Rational(1), 1); }
  static PolyR monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational eval(const Rational& r) const;
  /// Multiply by r^k.
  PolyR shifted(int k) const;

  PolyR& operator+=(const PolyR& o);
  PolyR& operator-=(const PolyR& o);
  PolyR& operator*=(const Rational& c);
  PolyR& operator*=(const PolyR& o);
  friend PolyR operator+(PolyR a, const PolyR& b) { return a += b; }
  friend PolyR operator-(PolyR a, const PolyR& b) { return a -= b; }
  friend PolyR operator*(PolyR a, const Rational& c) { return a *= c; }
  friend PolyR operator*(PolyR a, const PolyR& b) { return a *= b; }
  PolyR operator-() const;

  friend bool operator==(const PolyR& a, const PolyR& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const PolyR& a, const PolyR& b) { return a.coeffs_ < b.coeffs_; }

  /// "c | c*r | c*r^k" summands joined by " + ", lowest degree first; "0" when zero.
  std::string to_text() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------

struct PairPower {
  int i = 0;  // 1-based slot, i < j
  int j = 0;
  int e = 0;  // exponent of (z_i - z_j)^{-1}, >= 1
  auto operator<=>(const PairPower&) const = default;
};

/// Exponents e_ij of prod (z_i - z_j)^{-e_ij}, kept sorted by (i, j).
class DiffExponent {
 public:
  DiffExponent() = default;
  static DiffExponent single(int i, int j, int e);

  int exponent(int i, int j) const;
  /// Adds k to the exponent at normalized pair (i, j), i < j. Throws when the
  /// result is negative.
  void add(int i, int j, int k);
  const std::vector<PairPower>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  int total_degree() const;
  int max_slot() const;

  auto operator<=>(const DiffExponent&) const = default;

 private:
  std::vector<PairPower> factors_;
};

/// Sum over terms of PolyR(r) * prod (z_i - z_j)^{-e_ij}.
class CorrFn {
 public:
  explicit CorrFn(int n = 0);
  static CorrFn constant(int n, const PolyR& c);

  int slots() const { return n_; }
  const std::map<DiffExponent, PolyR>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const DiffExponent& den, const PolyR& coef);

  friend bool operator==(const CorrFn&, const CorrFn&) = default;

 private:
  int n_ = 0;
  std::map<DiffExponent, PolyR> terms_;
};

CorrFn corr_add(const CorrFn& f, const CorrFn& g);
CorrFn corr_sub(const CorrFn& f, const CorrFn& g);
CorrFn corr_scale(const CorrFn& f, const PolyR& c);
/// f * (z_i - z_j)^{-k}; (i > j) is normalized with sign (-1)^k.
CorrFn corr_mul_diffpow(const CorrFn& f, int i, int j, int k);

/// Equality as rational functions (common denominator, numerator expansion).
bool corr_eq(const CorrFn& f, const CorrFn& g);
/// Empty when equal; otherwise a description of one numerator monomial where
/// f and g differ.
std::optional<std::string> corr_diff_witness(const CorrFn& f, const CorrFn& g);

Rational corr_eval(const CorrFn& f, std::span<const Rational> z, const Rational& r);
/// std::nullopt stands for the zero function.
std::optional<int> corr_degree_r(const CorrFn& f);
/// Substitutes a value for r; all coefficients become constants.
CorrFn corr_specialize(const CorrFn& f, const Rational& r);
/// Renames slot s to slot_map[s - 1].
CorrFn corr_relabel(const CorrFn& f, std::span<const int> slot_map);

enum class RenderFormat { text, latex, json };
RenderFormat parse_render_format(std::string_view name);
std::string corr_render(const CorrFn& f, RenderFormat format);
nlohmann::json corr_to_json(const CorrFn& f);
CorrFn corr_from_json(const nlohmann::json& j);

}  // namespace moonshine
