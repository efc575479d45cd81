#include "weakcp/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace weakcp {

FinSpace::FinSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw error("duplicate basis label '" + l + "'");
}

Space make_space(std::vector<std::string> labels) {
  return std::make_shared<const FinSpace>(std::move(labels));
}

Space make_space(const std::string& prefix, std::size_t dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return make_space(std::move(labels));
}

bool same_space(const Space& a, const Space& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Space tensor_space(const Space& v, const Space& w) {
  std::vector<std::string> labels;
  labels.reserve(v->dim() * w->dim());
  for (const auto& lv : v->labels())
    for (const auto& lw : w->labels()) labels.push_back(lv + "⊗" + lw);
  return make_space(std::move(labels));
}

// ---------------------------------------------------------------- Vec

Vec::Vec(Space space, const Field& field)
    : space_(std::move(space)), field_(field),
      coords_(space_->dim(), Scalar::zero(field)) {}

Vec Vec::basis(const Space& space, const Field& field, std::size_t i) {
  Vec v(space, field);
  v.set(i, Scalar::one(field));
  return v;
}

void Vec::set(std::size_t i, Scalar s) {
  if (s.field() != field_) throw error("coordinate field mismatch");
  coords_.at(i) = std::move(s);
}

bool Vec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

static void check_compatible(const Vec& a, const Vec& b) {
  if (a.field() != b.field()) throw error("vector field mismatch");
  if (!same_space(a.space(), b.space()))
    throw error("vector space mismatch (dims " + std::to_string(a.dim()) +
                " vs " + std::to_string(b.dim()) + ")");
}

Vec Vec::operator+(const Vec& o) const {
  Vec r = *this;
  r += o;
  return r;
}

Vec& Vec::operator+=(const Vec& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!o.coords_[i].is_zero()) coords_[i] += o.coords_[i];
  return *this;
}

Vec Vec::operator-(const Vec& o) const {
  check_compatible(*this, o);
  Vec r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!o.coords_[i].is_zero()) r.coords_[i] -= o.coords_[i];
  return r;
}

Vec Vec::operator-() const {
  Vec r = *this;
  for (auto& c : r.coords_)
    if (!c.is_zero()) c = -c;
  return r;
}

Vec Vec::scaled(const Scalar& c) const {
  Vec r(space_, field_);
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) r.coords_[i] = coords_[i] * c;
  return r;
}

Vec& Vec::add_scaled(const Vec& o, const Scalar& c) {
  check_compatible(*this, o);
  if (c.is_zero()) return *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!o.coords_[i].is_zero()) coords_[i] += o.coords_[i] * c;
  return *this;
}

bool Vec::operator==(const Vec& o) const {
  return field_ == o.field_ && same_space(space_, o.space_) && coords_ == o.coords_;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i].str();
  }
  os << ")";
  return os.str();
}

std::string Vec::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (!first) os << " + ";
    if (!coords_[i].is_one()) os << coords_[i].str() << "*";
    os << space_->label(i);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

Vec tensor_vec(const Vec& v, const Vec& w, const Space& product) {
  if (v.field() != w.field()) throw error("tensor of vectors over different fields");
  Vec r(product, v.field());
  std::size_t dw = w.dim();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < dw; ++j) {
      if (w[j].is_zero()) continue;
      r.set(tensor_index(i, j, dw), v[i] * w[j]);
    }
  }
  return r;
}

Vec tensor_vec(const Vec& v, const Vec& w) {
  return tensor_vec(v, w, tensor_space(v.space(), w.space()));
}

// ------------------------------------------------------------- LinMap

LinMap::LinMap(Space domain, Space codomain, const Field& field)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), field_(field),
      m_(domain_->dim() * codomain_->dim(), Scalar::zero(field)) {}

LinMap LinMap::identity(const Space& s, const Field& field) {
  LinMap m(s, s, field);
  for (std::size_t i = 0; i < s->dim(); ++i) m.set(i, i, Scalar::one(field));
  return m;
}

LinMap LinMap::from_columns(const Space& domain, const Space& codomain,
                            const Field& f, const std::vector<Vec>& cols) {
  if (cols.size() != domain->dim())
    throw error("from_columns: expected " + std::to_string(domain->dim()) +
                " columns, got " + std::to_string(cols.size()));
  LinMap m(domain, codomain, f);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!same_space(cols[j].space(), codomain))
      throw error("from_columns: column " + std::to_string(j) + " lives in the wrong space");
    for (std::size_t i = 0; i < codomain->dim(); ++i)
      if (!cols[j][i].is_zero()) m.set(i, j, cols[j][i]);
  }
  return m;
}

LinMap LinMap::swap_map(const Space& v, const Space& w, const Field& field) {
  Space vw = tensor_space(v, w);
  Space wv = tensor_space(w, v);
  LinMap m(vw, wv, field);
  for (std::size_t i = 0; i < v->dim(); ++i)
    for (std::size_t j = 0; j < w->dim(); ++j)
      m.set(tensor_index(j, i, v->dim()), tensor_index(i, j, w->dim()),
            Scalar::one(field));
  return m;
}

const Scalar& LinMap::at(std::size_t row, std::size_t col) const {
  return m_.at(row * domain_->dim() + col);
}

void LinMap::set(std::size_t row, std::size_t col, Scalar s) {
  if (s.field() != field_) throw error("matrix entry field mismatch");
  m_.at(row * domain_->dim() + col) = std::move(s);
}

Vec LinMap::apply(const Vec& v) const {
  if (v.field() != field_) throw error("apply: field mismatch");
  if (!same_space(v.space(), domain_)) throw error("apply: vector not in the domain");
  Vec r(codomain_, field_);
  for (std::size_t j = 0; j < domain_->dim(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < codomain_->dim(); ++i) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) r.set(i, r[i] + a * v[j]);
    }
  }
  return r;
}

Vec LinMap::column(std::size_t j) const {
  Vec r(codomain_, field_);
  for (std::size_t i = 0; i < codomain_->dim(); ++i)
    if (!at(i, j).is_zero()) r.set(i, at(i, j));
  return r;
}

LinMap LinMap::compose(const LinMap& inner) const {
  if (field_ != inner.field_) throw error("compose: field mismatch");
  if (!same_space(domain_, inner.codomain_))
    throw error("compose: inner codomain does not match outer domain");
  LinMap r(inner.domain_, codomain_, field_);
  for (std::size_t j = 0; j < inner.domain_->dim(); ++j)
    for (std::size_t k = 0; k < inner.codomain_->dim(); ++k) {
      const Scalar& b = inner.at(k, j);
      if (b.is_zero()) continue;
      for (std::size_t i = 0; i < codomain_->dim(); ++i) {
        const Scalar& a = at(i, k);
        if (!a.is_zero()) r.set(i, j, r.at(i, j) + a * b);
      }
    }
  return r;
}

LinMap LinMap::tensor(const LinMap& o) const {
  if (field_ != o.field_) throw error("tensor: field mismatch");
  LinMap r(tensor_space(domain_, o.domain_), tensor_space(codomain_, o.codomain_),
           field_);
  std::size_t od = o.domain_->dim(), oc = o.codomain_->dim();
  for (std::size_t i = 0; i < codomain_->dim(); ++i)
    for (std::size_t j = 0; j < domain_->dim(); ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < oc; ++k)
        for (std::size_t l = 0; l < od; ++l) {
          const Scalar& b = o.at(k, l);
          if (!b.is_zero())
            r.set(tensor_index(i, k, oc), tensor_index(j, l, od), a * b);
        }
    }
  return r;
}

LinMap LinMap::operator+(const LinMap& o) const {
  if (field_ != o.field_ || !same_space(domain_, o.domain_) ||
      !same_space(codomain_, o.codomain_))
    throw error("matrix sum: shape or field mismatch");
  LinMap r = *this;
  for (std::size_t i = 0; i < m_.size(); ++i)
    if (!o.m_[i].is_zero()) r.m_[i] += o.m_[i];
  return r;
}

LinMap LinMap::operator-(const LinMap& o) const {
  if (field_ != o.field_ || !same_space(domain_, o.domain_) ||
      !same_space(codomain_, o.codomain_))
    throw error("matrix difference: shape or field mismatch");
  LinMap r = *this;
  for (std::size_t i = 0; i < m_.size(); ++i)
    if (!o.m_[i].is_zero()) r.m_[i] -= o.m_[i];
  return r;
}

bool LinMap::operator==(const LinMap& o) const {
  return field_ == o.field_ && same_space(domain_, o.domain_) &&
         same_space(codomain_, o.codomain_) && m_ == o.m_;
}

bool LinMap::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t LinMap::rank() const {
  EchelonSolver solver(domain_->dim(), field_);
  for (std::size_t i = 0; i < codomain_->dim(); ++i) {
    std::vector<Scalar> row;
    row.reserve(domain_->dim());
    for (std::size_t j = 0; j < domain_->dim(); ++j) row.push_back(at(i, j));
    solver.add_row(std::move(row));
  }
  return solver.rank();
}

std::string LinMap::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < codomain_->dim(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < domain_->dim(); ++j) {
      if (j) os << " ";
      os << at(i, j).str();
    }
    os << "]\n";
  }
  return os.str();
}

std::optional<LinMap> inverse(const LinMap& m) {
  std::size_t n = m.domain()->dim();
  if (m.codomain()->dim() != n) throw error("inverse: map is not square");
  const Field& f = m.field();
  // Gauss-Jordan on [M | I].
  std::vector<std::vector<Scalar>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i].assign(2 * n, Scalar::zero(f));
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][n + i] = Scalar::one(f);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[col], a[piv]);
    Scalar inv = a[col][col].inverse();
    for (auto& x : a[col])
      if (!x.is_zero()) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar fct = a[r][col];
      for (std::size_t j = col; j < 2 * n; ++j)
        if (!a[col][j].is_zero()) a[r][j] -= fct * a[col][j];
    }
  }
  LinMap out(m.codomain(), m.domain(), f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a[i][n + j].is_zero()) out.set(i, j, a[i][n + j]);
  return out;
}

// ------------------------------------------------------ EchelonSolver

EchelonSolver::EchelonSolver(std::size_t cols, const Field& field)
    : cols_(cols), field_(field), pivot_row_(cols, -1) {}

void EchelonSolver::add_row(std::vector<Scalar> coeffs) {
  add_row(std::move(coeffs), Scalar::zero(field_));
}

void EchelonSolver::add_row(std::vector<Scalar> coeffs, Scalar rhs) {
  if (coeffs.size() != cols_) throw error("solver row has wrong length");
  finalized_ = false;
  std::size_t col = 0;
  while (col < cols_) {
    if (coeffs[col].is_zero()) {
      ++col;
      continue;
    }
    std::ptrdiff_t p = pivot_row_[col];
    if (p < 0) break;
    const Row& r = rows_[static_cast<std::size_t>(p)];
    Scalar f = coeffs[col];
    for (std::size_t j = col; j < cols_; ++j)
      if (!r.c[j].is_zero()) coeffs[j] -= f * r.c[j];
    if (!r.rhs.is_zero()) rhs -= f * r.rhs;
    ++col;
  }
  if (col == cols_) {
    if (!rhs.is_zero()) inconsistent_ = true;
    return;
  }
  Scalar inv = coeffs[col].inverse();
  for (std::size_t j = col; j < cols_; ++j)
    if (!coeffs[j].is_zero()) coeffs[j] *= inv;
  if (!rhs.is_zero()) rhs *= inv;
  pivot_row_[col] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(Row{std::move(coeffs), std::move(rhs), col});
}

void EchelonSolver::finalize() {
  if (finalized_) return;
  std::sort(rows_.begin(), rows_.end(),
            [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
  for (std::size_t i = 0; i < rows_.size(); ++i)
    pivot_row_[rows_[i].pivot] = static_cast<std::ptrdiff_t>(i);
  // Clear pivot columns above, bottom-up, so each subtracted row is final.
  for (std::size_t ri = rows_.size(); ri-- > 0;) {
    Row& r = rows_[ri];
    for (std::size_t rj = ri + 1; rj < rows_.size(); ++rj) {
      const Row& s = rows_[rj];
      const Scalar& f = r.c[s.pivot];
      if (f.is_zero()) continue;
      Scalar fct = f;
      for (std::size_t j = s.pivot; j < cols_; ++j)
        if (!s.c[j].is_zero()) r.c[j] -= fct * s.c[j];
      if (!s.rhs.is_zero()) r.rhs -= fct * s.rhs;
    }
  }
  pivots_.clear();
  for (const Row& r : rows_) pivots_.push_back(r.pivot);
  echelon_cache_.clear();
  finalized_ = true;
}

const std::vector<std::size_t>& EchelonSolver::pivots() {
  finalize();
  return pivots_;
}

const std::vector<std::vector<Scalar>>& EchelonSolver::echelon_rows() {
  finalize();
  if (echelon_cache_.size() != rows_.size()) {
    echelon_cache_.clear();
    for (const Row& r : rows_) echelon_cache_.push_back(r.c);
  }
  return echelon_cache_;
}

std::vector<Scalar> EchelonSolver::solution(const Scalar& free_value) {
  if (inconsistent_) throw error("solution() on an inconsistent system");
  finalize();
  std::vector<Scalar> x(cols_, free_value);
  for (const Row& r : rows_) x[r.pivot] = Scalar::zero(field_);
  for (const Row& r : rows_) {
    Scalar v = r.rhs;
    if (!free_value.is_zero()) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j == r.pivot || r.c[j].is_zero()) continue;
        if (pivot_row_[j] >= 0) continue;  // cleared pivots contribute nothing
        v -= r.c[j] * free_value;
      }
    }
    x[r.pivot] = std::move(v);
  }
  return x;
}

std::vector<Scalar> EchelonSolver::residual(std::vector<Scalar> v) const {
  if (v.size() != cols_) throw error("residual: wrong length");
  for (std::size_t col = 0; col < cols_; ++col) {
    if (v[col].is_zero()) continue;
    std::ptrdiff_t p = pivot_row_[col];
    if (p < 0) continue;
    const Row& r = rows_[static_cast<std::size_t>(p)];
    Scalar f = v[col];
    for (std::size_t j = col; j < cols_; ++j)
      if (!r.c[j].is_zero()) v[j] -= f * r.c[j];
  }
  return v;
}

// ----------------------------------------------------------- Subspace

Subspace Subspace::span(const Space& ambient, const Field& field,
                        const std::vector<Vec>& generators) {
  EchelonSolver solver(ambient->dim(), field);
  for (const Vec& g : generators) {
    if (g.field() != field) throw error("subspace generator field mismatch");
    if (!same_space(g.space(), ambient))
      throw error("subspace generator lives outside the ambient space");
    std::vector<Scalar> row;
    row.reserve(ambient->dim());
    for (std::size_t i = 0; i < ambient->dim(); ++i) row.push_back(g[i]);
    solver.add_row(std::move(row));
  }
  Subspace s(ambient, field);
  s.pivots_ = solver.pivots();
  for (const auto& row : solver.echelon_rows()) {
    Vec v(ambient, field);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero()) v.set(i, row[i]);
    s.basis_.push_back(std::move(v));
  }
  return s;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

Vec Subspace::reduce(const Vec& v) const {
  if (!same_space(v.space(), ambient_)) throw error("reduce: vector not in ambient space");
  Vec r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar& c = r[pivots_[k]];
    if (!c.is_zero()) r.add_scaled(basis_[k], -c);
  }
  return r;
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && same_space(ambient_, o.ambient_) &&
         pivots_ == o.pivots_ && basis_ == o.basis_;
}

// ------------------------------------------------------ QuotientSpace

QuotientSpace quotient_by(const Space& ambient, const Field& field,
                          const std::vector<Vec>& relation_vectors) {
  Subspace rel = Subspace::span(ambient, field, relation_vectors);
  std::vector<std::string> qlabels;
  std::vector<std::size_t> free_cols;
  {
    std::vector<bool> is_pivot(ambient->dim(), false);
    for (std::size_t p : rel.pivots()) is_pivot[p] = true;
    for (std::size_t i = 0; i < ambient->dim(); ++i)
      if (!is_pivot[i]) {
        free_cols.push_back(i);
        qlabels.push_back(ambient->label(i));
      }
  }
  Space quot = make_space(std::move(qlabels));
  std::vector<std::size_t> quot_index(ambient->dim(), 0);
  for (std::size_t q = 0; q < free_cols.size(); ++q) quot_index[free_cols[q]] = q;

  LinMap project(ambient, quot, field);
  for (std::size_t q = 0; q < free_cols.size(); ++q)
    project.set(q, free_cols[q], Scalar::one(field));
  // A pivot basis vector is congruent to minus the free part of its
  // echelon relation row.
  for (std::size_t k = 0; k < rel.dim(); ++k) {
    std::size_t p = rel.pivots()[k];
    const Vec& row = rel.basis()[k];
    for (std::size_t q = 0; q < free_cols.size(); ++q) {
      const Scalar& c = row[free_cols[q]];
      if (!c.is_zero()) project.set(q, p, -c);
    }
  }

  LinMap section(quot, ambient, field);
  for (std::size_t q = 0; q < free_cols.size(); ++q)
    section.set(free_cols[q], q, Scalar::one(field));

  return QuotientSpace{ambient, std::move(rel), std::move(quot),
                       std::move(project), std::move(section)};
}

// --------------------------------------------------- IdempotentImage

IdempotentImage image_of_idempotent(const LinMap& e) {
  if (!same_space(e.domain(), e.codomain()))
    throw error("image_of_idempotent: map is not an endomorphism");
  const Field& f = e.field();
  const Space& amb = e.domain();
  LinMap ee = e.compose(e);
  if (ee != e) {
    for (std::size_t j = 0; j < amb->dim(); ++j)
      if (ee.column(j) != e.column(j))
        throw error("map is not idempotent: e(e(v)) != e(v) at basis column " +
                    std::to_string(j) + " ('" + amb->label(j) + "')");
  }
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < amb->dim(); ++j) cols.push_back(e.column(j));
  Subspace sub = Subspace::span(amb, f, cols);

  std::vector<std::string> labels;
  for (std::size_t p : sub.pivots()) labels.push_back(amb->label(p));
  Space abstract = make_space(std::move(labels));

  LinMap incl = LinMap::from_columns(abstract, amb, f, sub.basis());
  // retr = (pivot-coordinate selector) ∘ e; then incl∘retr = e and
  // retr∘incl = id because e fixes its image pointwise.
  LinMap retr(amb, abstract, f);
  for (std::size_t i = 0; i < sub.dim(); ++i)
    for (std::size_t j = 0; j < amb->dim(); ++j) {
      const Scalar& v = e.at(sub.pivots()[i], j);
      if (!v.is_zero()) retr.set(i, j, v);
    }
  return IdempotentImage{std::move(sub), std::move(abstract), std::move(incl),
                         std::move(retr)};
}

// -------------------------------------------------------- solve_linear

static EchelonSolver build_solver(const std::vector<LinearRow>& rows,
                                  const Space& unknowns, const Field& field,
                                  bool homogeneous) {
  EchelonSolver solver(unknowns->dim(), field);
  for (const LinearRow& r : rows) {
    if (!same_space(r.lhs.space(), unknowns))
      throw error("solve_linear: constraint row over the wrong unknown space");
    if (r.lhs.field() != field || r.rhs.field() != field)
      throw error("solve_linear: row field mismatch");
    std::vector<Scalar> c;
    c.reserve(unknowns->dim());
    for (std::size_t i = 0; i < unknowns->dim(); ++i) c.push_back(r.lhs[i]);
    solver.add_row(std::move(c), homogeneous ? Scalar::zero(field) : r.rhs);
  }
  return solver;
}

std::optional<Vec> solve_linear(const std::vector<LinearRow>& rows,
                                const Space& unknowns, const Field& field,
                                const Scalar& free_value) {
  EchelonSolver solver = build_solver(rows, unknowns, field, false);
  if (!solver.consistent()) return std::nullopt;
  std::vector<Scalar> x = solver.solution(free_value);
  Vec v(unknowns, field);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) v.set(i, x[i]);
  return v;
}

std::optional<Vec> solve_linear(const std::vector<LinearRow>& rows,
                                const Space& unknowns, const Field& field) {
  return solve_linear(rows, unknowns, field, Scalar::zero(field));
}

std::size_t homogeneous_kernel_dim(const std::vector<LinearRow>& rows,
                                   const Space& unknowns, const Field& field) {
  EchelonSolver solver = build_solver(rows, unknowns, field, true);
  return solver.kernel_dim();
}

}  // namespace weakcp
