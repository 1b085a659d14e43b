#pragma once

// Formed superspaces: parity-graded bases with non-degenerate supersymmetric
// bilinear forms, for the Jordan type spaces, the level spaces and their tensor
// products.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moonshine/exact.hpp"

namespace moonshine {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline int sign_of(bool odd_swap) { return odd_swap ? -1 : 1; }
inline bool both_odd(Parity a, Parity b) { return a == Parity::odd && b == Parity::odd; }

enum class JordanType { A, B, C };
JordanType parse_jordan_type(std::string_view name);
char to_char(JordanType t);

struct SuperSpace {
  std::vector<std::string> labels;
  std::vector<Parity> parity;

  std::size_t dim() const { return labels.size(); }
  /// (number of even, number of odd) basis vectors.
  std::pair<int, int> sdim() const;
  std::optional<std::size_t> index_of(std::string_view label) const;
};

/// Row-major Gram matrix over the basis.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(std::size_t dim) : dim_(dim), gram_(dim * dim, Rational(0)) {}

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return gram_[i * dim_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return gram_[i * dim_ + j]; }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> gram_;
};

enum class SpaceKind { type_space, level_space, tensor, doubled };

struct FormedSpace {
  SuperSpace space;
  BilinearForm form;
  SpaceKind kind = SpaceKind::type_space;
  JordanType jtype = JordanType::B;  // meaningful for type/doubled spaces and tensors built on them
  int param = 0;                     // rank d for type spaces, level r for level spaces
  // For tensors: basis index = left * right_dim + right.
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;

  std::size_t dim() const { return space.dim(); }
  Parity parity(std::size_t i) const { return space.parity[i]; }
  const Rational& gram(std::size_t i, std::size_t j) const { return form(i, j); }
};

using SpacePtr = std::shared_ptr<const FormedSpace>;

/// Homogeneous vector: basis index -> coefficient, all with the same parity.
class Vector {
 public:
  Vector() = default;
  /// Throws std::invalid_argument for mixed parity or out-of-range indices.
  Vector(const FormedSpace& space, std::map<std::size_t, Rational> comps);
  static Vector basis(const FormedSpace& space, std::size_t index);

  const std::map<std::size_t, Rational>& components() const { return comps_; }
  Parity parity() const { return parity_; }
  bool is_zero() const { return comps_.empty(); }

  friend bool operator==(const Vector&, const Vector&) = default;
  friend bool operator<(const Vector& a, const Vector& b) {
    return std::pair(a.parity_, a.comps_) < std::pair(b.parity_, b.comps_);
  }

 private:
  std::map<std::size_t, Rational> comps_;
  Parity parity_ = Parity::even;
};

struct VectorPair {
  Vector a;
  Vector b;
};

/// Type spaces: B (d|0) orthonormal, C (0|2d) symplectic with (f_i, f_{d+i}) = 1,
/// A the doubled space h + h* with isotropic halves and (e_i, e*_j) = delta_ij.
FormedSpace make_type_space(JordanType x, int d);
/// Level space (r|0) with orthonormal basis h1..hr.
FormedSpace make_level_space(int r);
/// Tensor product with form (a x, b y) = (-1)^{|x||b|} (a,b)(x,y)'.
FormedSpace tensor(const FormedSpace& f, const FormedSpace& g);

Rational form_eval(const FormedSpace& f, const Vector& u, const Vector& v);

/// u (x) x for u in the left factor and x in the right factor of a tensor space.
Vector tensor_vector(const FormedSpace& product, const Vector& left, const Vector& right);

bool is_supersymmetric(const FormedSpace& f);
Rational gram_determinant(const FormedSpace& f);

/// Type A only: does v lie in the h half (resp. the h* half) of the doubled space.
bool in_primal_half(const FormedSpace& f, const Vector& v);
bool in_dual_half(const FormedSpace& f, const Vector& v);

/// "e1", "(1/2)e1+(1/3)e2", "-e2", "2e1*". Throws std::invalid_argument.
Vector parse_vector(const FormedSpace& f, std::string_view text);
std::string render_vector(const FormedSpace& f, const Vector& v);
nlohmann::json vector_to_json(const FormedSpace& f, const Vector& v);
Vector vector_from_json(const FormedSpace& f, const nlohmann::json& j);

}  // namespace moonshine
