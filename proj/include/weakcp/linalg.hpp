#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weakcp/scalar.hpp"

namespace weakcp {

/// Finite-dimensional vector space with an ordered, labeled basis.
class FinSpace {
public:
  explicit FinSpace(std::vector<std::string> labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool operator==(const FinSpace& o) const { return labels_ == o.labels_; }

private:
  std::vector<std::string> labels_;
};

/// Spaces are shared immutable values; equality is structural.
using Space = std::shared_ptr<const FinSpace>;

Space make_space(std::vector<std::string> labels);

/// Space with basis e0..e{n-1} and labels "<prefix>0".."<prefix>{n-1}".
Space make_space(const std::string& prefix, std::size_t dim);

bool same_space(const Space& a, const Space& b);

/// Tensor product space. Basis is ordered row-major -- the pair (i, j)
/// sits at index i*dim(w) + j -- and labeled "vi⊗wj". The flat labeling
/// makes the product strictly associative: (u⊗v)⊗w and u⊗(v⊗w) are the
/// same space.
Space tensor_space(const Space& v, const Space& w);

/// Index of (i, j) in tensor_space(v, w).
inline std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t dim_w) {
  return i * dim_w + j;
}

/// Dense vector in a FinSpace. Immutable in spirit: mutation is limited to
/// the construction helpers below.
class Vec {
public:
  Vec(Space space, const Field& field);  // zero vector
  static Vec basis(const Space& space, const Field& field, std::size_t i);

  const Space& space() const { return space_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return coords_.size(); }

  const Scalar& operator[](std::size_t i) const { return coords_.at(i); }
  void set(std::size_t i, Scalar s);

  bool is_zero() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec scaled(const Scalar& c) const;
  Vec& operator+=(const Vec& o);
  Vec& add_scaled(const Vec& o, const Scalar& c);

  bool operator==(const Vec& o) const;
  bool operator!=(const Vec& o) const { return !(*this == o); }

  /// Coordinate tuple "(1, 0, -1/2)".
  std::string str() const;
  /// Labeled combination "e0 - 1/2*e2"; "0" for the zero vector.
  std::string pretty() const;

private:
  Space space_;
  Field field_;
  std::vector<Scalar> coords_;
};

/// v ⊗ w as an element of tensor_space(v.space, w.space). The optional
/// `product` argument avoids rebuilding the product space in inner loops;
/// it must equal tensor_space(v.space, w.space).
Vec tensor_vec(const Vec& v, const Vec& w);
Vec tensor_vec(const Vec& v, const Vec& w, const Space& product);

/// Linear map as a dense codomain.dim x domain.dim matrix.
class LinMap {
public:
  LinMap(Space domain, Space codomain, const Field& field);  // zero map
  static LinMap identity(const Space& s, const Field& field);
  /// Matrix whose j-th column is cols[j]; cols live in the codomain.
  static LinMap from_columns(const Space& domain, const Space& codomain,
                             const Field& field, const std::vector<Vec>& cols);
  /// The swap v⊗w -> w⊗v.
  static LinMap swap_map(const Space& v, const Space& w, const Field& field);

  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, Scalar s);

  Vec apply(const Vec& v) const;
  Vec column(std::size_t j) const;

  /// Composition (*this) ∘ inner; inner.codomain must match this->domain.
  LinMap compose(const LinMap& inner) const;
  /// Kronecker product acting on tensor_space(domain, o.domain).
  LinMap tensor(const LinMap& o) const;

  LinMap operator+(const LinMap& o) const;
  LinMap operator-(const LinMap& o) const;
  bool operator==(const LinMap& o) const;
  bool operator!=(const LinMap& o) const { return !(*this == o); }

  bool is_zero() const;
  std::size_t rank() const;

  std::string str() const;  // row-per-line matrix dump

private:
  Space domain_, codomain_;
  Field field_;
  std::vector<Scalar> m_;  // row-major
};

/// Inverse of a square map, or nullopt if singular.
std::optional<LinMap> inverse(const LinMap& m);

/// Incremental exact Gaussian elimination. Rows are inserted one at a
/// time and reduced against the current echelon; the final reduced row
/// echelon form (and hence pivots, solution and kernel dimension) is
/// canonical for the row span, independent of insertion order.
class EchelonSolver {
public:
  EchelonSolver(std::size_t cols, const Field& field);

  /// Adds the constraint coeffs · x = rhs.
  void add_row(std::vector<Scalar> coeffs, Scalar rhs);
  /// Adds a homogeneous row (membership/span building).
  void add_row(std::vector<Scalar> coeffs);

  bool consistent() const { return !inconsistent_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t kernel_dim() const { return cols_ - rows_.size(); }
  const std::vector<std::size_t>& pivots();

  /// One exact solution with every free variable set to `free_value`.
  /// Requires consistent().
  std::vector<Scalar> solution(const Scalar& free_value);

  /// Reduced row echelon rows (pivot entries 1, pivots cleared elsewhere).
  const std::vector<std::vector<Scalar>>& echelon_rows();
  Scalar echelon_rhs(std::size_t row) const { return rows_.at(row).rhs; }

  /// Reduces v against the echelon (no insertion); zero iff v is in the
  /// row span.
  std::vector<Scalar> residual(std::vector<Scalar> v) const;

private:
  struct Row {
    std::vector<Scalar> c;
    Scalar rhs;
    std::size_t pivot;
  };
  void finalize();  // back-substitution to full RREF

  std::size_t cols_;
  Field field_;
  std::vector<Row> rows_;                  // ordered by pivot column
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> row index or -1
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Scalar>> echelon_cache_;
  bool inconsistent_ = false;
  bool finalized_ = false;
};

/// Subspace of a FinSpace given by a canonical reduced-echelon basis.
class Subspace {
public:
  /// Row-echelon span of the generators (all must live in `ambient`).
  static Subspace span(const Space& ambient, const Field& field,
                       const std::vector<Vec>& generators);

  const Space& ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  /// Canonical residual of v modulo the subspace; zero iff contains(v).
  Vec reduce(const Vec& v) const;

  bool operator==(const Subspace& o) const;

private:
  Subspace(Space ambient, const Field& field) : ambient_(std::move(ambient)), field_(field) {}
  Space ambient_;
  Field field_;
  std::vector<Vec> basis_;          // RREF rows
  std::vector<std::size_t> pivots_;
};

/// Quotient of a FinSpace by the span of relation vectors. The quotient
/// basis consists of the ambient basis vectors at non-pivot columns
/// (pivots chosen left to right), so the construction is deterministic.
struct QuotientSpace {
  Space ambient;
  Subspace relations;
  Space quotient;
  LinMap project;  // ambient -> quotient
  LinMap section;  // quotient -> ambient, project ∘ section = id
};

QuotientSpace quotient_by(const Space& ambient, const Field& field,
                          const std::vector<Vec>& relation_vectors);

/// Image of an idempotent map e, with incl ∘ retr = e and
/// retr ∘ incl = id on the abstract image space. Throws (naming a witness
/// column) if e is not idempotent.
struct IdempotentImage {
  Subspace sub;    // column span of e inside the ambient space
  Space abstract;  // image as a space of its own; labels from pivot columns
  LinMap incl;     // abstract -> ambient
  LinMap retr;     // ambient -> abstract
};

IdempotentImage image_of_idempotent(const LinMap& e);

/// One affine constraint row: lhs · x = rhs.
struct LinearRow {
  Vec lhs;
  Scalar rhs;
};

/// Solves the affine system exactly. Returns the canonical solution with
/// free variables set to zero (or to `free_value`), or nullopt if the
/// system is inconsistent. The empty system yields the zero vector.
std::optional<Vec> solve_linear(const std::vector<LinearRow>& rows,
                                const Space& unknowns, const Field& field);
std::optional<Vec> solve_linear(const std::vector<LinearRow>& rows,
                                const Space& unknowns, const Field& field,
                                const Scalar& free_value);

/// Dimension of the solution space of the homogeneous part.
std::size_t homogeneous_kernel_dim(const std::vector<LinearRow>& rows,
                                   const Space& unknowns, const Field& field);

}  // namespace weakcp
