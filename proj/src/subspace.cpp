#include "adequacy/subspace.hpp"

namespace adq {

Subspace::Subspace(const Matrix& rows) : ambient_(rows.cols()) {
  auto rr = rref(rows);
  Matrix b(rows.field(), rr.rank, rows.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    for (std::size_t j = 0; j < rows.cols(); ++j) b(i, j) = rr.reduced(i, j);
  }
  basis_ = std::move(b);
  pivots_ = std::move(rr.pivots);
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  return Subspace(Matrix(f, 0, ambient));
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  return Subspace(Matrix::identity(f, ambient));
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& vs) {
  return Subspace(Matrix::from_rows(f, vs, ambient));
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    auto r = basis_.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "subspace membership");
  const Field& f = field();
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem t = r[pivots_[i]];
    if (t == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] = f.sub(r[j], f.mul(t, basis_(i, j)));
  }
  for (auto x : r) {
    if (x != 0) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Vec Subspace::coords(std::span<const Elem> v) const {
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::operator+(const Subspace& o) const {
  auto vs = vectors();
  for (auto& v : o.vectors()) vs.push_back(std::move(v));
  return span(field(), ambient_, vs);
}

Subspace Subspace::orthogonal() const {
  if (dim() == 0) return full(field(), ambient_);
  return Subspace(kernel(basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  // (A ∩ B) = (A^perp + B^perp)^perp
  return (orthogonal() + o.orthogonal()).orthogonal();
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_.entries() == o.basis_.entries() &&
         dim() == o.dim();
}

EchelonBuilder::EchelonBuilder(Field f, std::size_t ambient)
    : field_(std::move(f)), ambient_(ambient) {}

Vec EchelonBuilder::reduce(std::span<const Elem> v) const {
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem t = r[pivot_[i]];
    if (t == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (rows_[i][j] != 0) r[j] = field_.sub(r[j], field_.mul(t, rows_[i][j]));
    }
  }
  return r;
}

bool EchelonBuilder::contains(std::span<const Elem> v) const {
  const auto r = reduce(v);
  for (auto x : r) {
    if (x != 0) return false;
  }
  return true;
}

bool EchelonBuilder::add(std::span<const Elem> v) {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "echelon row length");
  auto r = reduce(v);
  std::size_t piv = 0;
  while (piv < ambient_ && r[piv] == 0) ++piv;
  if (piv == ambient_) return false;
  const Elem inv = field_.inv(r[piv]);
  for (auto& x : r) x = field_.mul(x, inv);
  rows_.push_back(std::move(r));
  pivot_.push_back(piv);
  original_.emplace_back(v.begin(), v.end());
  return true;
}

Subspace EchelonBuilder::subspace() const {
  return Subspace::span(field_, ambient_, rows_);
}

}  // namespace adq
