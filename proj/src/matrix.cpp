#include "adequacy/matrix.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace adq {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(f)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
  }
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.e_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

Matrix Matrix::column(const Field& f, std::span<const Elem> v) {
  return Matrix(f, v.size(), 1, Vec(v.begin(), v.end()));
}

void Matrix::check_same(const Matrix& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorCode::IncompatibleFields, "matrix fields differ");
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "add");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.add(e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "sub");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.sub(e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same(o);
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "mul");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = e_[i * cols_ + k];
      if (a == 0) continue;
      const Elem* brow = o.e_.data() + k * o.cols_;
      Elem* rrow = r.e_.data() + i * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (brow[j] != 0) rrow[j] = field_.add(rrow[j], field_.mul(a, brow[j]));
      }
    }
  }
  return r;
}

Vec Matrix::operator*(std::span<const Elem> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector");
  Vec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Elem a = e_[i * cols_ + j];
      if (a != 0 && v[j] != 0) acc = field_.add(acc, field_.mul(a, v[j]));
    }
    r[i] = acc;
  }
  return r;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.mul(e_[i], s);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

Matrix Matrix::pow(std::uint64_t e) const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "power of non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix b = *this;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

bool Matrix::is_zero() const {
  for (auto x : e_) {
    if (x != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

Elem Matrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "trace of non-square matrix");
  Elem t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, (*this)(i, i));
  return t;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_ && field_ == o.field_;
}

std::string Matrix::format() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << field_.format((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::IncompatibleFields, "kronecker");
  const Field& f = a.field();
  Matrix r(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t i2 = 0; i2 < a.cols(); ++i2) {
      const Elem x = a(i, i2);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.rows(); ++j) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          r(i * b.rows() + j, i2 * b.cols() + j2) = f.mul(x, b(j, j2));
        }
      }
    }
  }
  return r;
}

Matrix lift(const Matrix& m, const Embedding& emb) {
  if (!(m.field() == emb.source())) throw Error(ErrorCode::IncompatibleFields, "lift");
  std::vector<Elem> e;
  e.reserve(m.entries().size());
  for (auto x : m.entries()) e.push_back(emb(x));
  return Matrix(emb.target(), m.rows(), m.cols(), std::move(e));
}

Matrix unflatten(const Field& f, std::size_t n, std::span<const Elem> v) {
  if (v.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "unflatten");
  return Matrix(f, n, n, Vec(v.begin(), v.end()));
}

RrefResult rref(Matrix m) {
  const Field f = m.field();
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const Elem inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem t = m(i, c);
      if (t == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(r, j) != 0) m(i, j) = f.sub(m(i, j), f.mul(t, m(r, j)));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel(const Matrix& m) {
  const Field& f = m.field();
  const auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = f.neg(rr.reduced(i, free));
    basis.push_back(std::move(x));
  }
  return Matrix::from_rows(f, basis, m.cols());
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto rr = rref(std::move(aug));
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
  }
  return inv;
}

std::optional<Solution> solve(const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  const Field& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto rr = rref(std::move(aug));
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.reduced(i, a.cols());
  return Solution{std::move(x), kernel(a)};
}

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "characteristic polynomial");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Elem inv = f.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      const Elem u = f.mul(h(r, j), inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(r, c) = f.sub(h(r, c), f.mul(u, h(j + 1, c)));
      for (std::size_t c = 0; c < n; ++c) h(c, j + 1) = f.add(h(c, j + 1), f.mul(u, h(c, r)));
    }
  }
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(f, 1));
  for (std::size_t k = 0; k < n; ++k) {
    Poly next = p[k] * Poly::linear(f, h(k, k));
    Elem t = 1;
    for (std::size_t i = k; i-- > 0;) {
      t = f.mul(t, h(i + 1, i));
      if (t == 0) break;
      next = next - p[i].scaled(f.mul(t, h(i, k)));
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

Matrix eval_poly(const Poly& p, const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "polynomial in non-square matrix");
  const Field& f = m.field();
  Matrix r(f, m.rows(), m.cols());
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    r = r * m;
    for (std::size_t d = 0; d < m.rows(); ++d) r(d, d) = f.add(r(d, d), c[i]);
  }
  return r;
}

namespace {

// Minimal polynomial of m restricted to the cyclic subspace generated by v.
Poly local_min_poly(const Matrix& m, const Vec& v) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  std::vector<Vec> basis;   // reduced Krylov vectors, pivot normalized to 1
  std::vector<std::size_t> pivots;
  std::vector<Vec> combos;  // coefficients over v, mv, m^2 v, ...
  Vec w = v;
  for (std::size_t k = 0; k <= n; ++k) {
    Vec red = w;
    Vec combo(k + 1, 0);
    combo[k] = 1;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Elem t = red[pivots[b]];
      if (t == 0) continue;
      for (std::size_t j = 0; j < n; ++j) red[j] = f.sub(red[j], f.mul(t, basis[b][j]));
      for (std::size_t j = 0; j < combos[b].size(); ++j) {
        combo[j] = f.sub(combo[j], f.mul(t, combos[b][j]));
      }
    }
    std::size_t piv = 0;
    while (piv < n && red[piv] == 0) ++piv;
    if (piv == n) return Poly(f, std::move(combo));
    const Elem inv = f.inv(red[piv]);
    for (auto& x : red) x = f.mul(x, inv);
    for (auto& x : combo) x = f.mul(x, inv);
    basis.push_back(std::move(red));
    pivots.push_back(piv);
    combos.push_back(std::move(combo));
    w = m * w;
  }
  throw Error(ErrorCode::InternalMismatch, "Krylov sequence did not terminate");
}

}  // namespace

Poly min_poly(const Matrix& m, std::uint64_t seed) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "minimal polynomial");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Poly acc = Poly::constant(f, 1);
  if (n == 0) return acc;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 3; ++trial) {
    Vec v(n);
    for (auto& x : v) x = rng() % f.order();
    if (std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; })) continue;
    acc = lcm(acc, local_min_poly(m, v));
  }
  if (eval_poly(acc, m).is_zero()) return acc;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    acc = lcm(acc, local_min_poly(m, e));
  }
  return acc;
}

Matrix eigenprojector(const Matrix& m, Elem alpha, const Poly& cp) {
  const Field& f = m.field();
  if (cp.eval(alpha) != 0) {
    throw Error(ErrorCode::NotAnEigenvalue, f.format(alpha) + " is not an eigenvalue");
  }
  const Poly lin = Poly::linear(f, alpha);
  Poly rest = cp;
  Poly power = Poly::constant(f, 1);
  for (;;) {
    auto [q, r] = rest.divmod(lin);
    if (!r.is_zero()) break;
    rest = std::move(q);
    power = power * lin;
  }
  // s * rest + t * power = 1, so h = s * rest is 1 mod power and 0 mod rest.
  const auto eg = ext_gcd(rest, power);
  const Poly h = (eg.s * rest) % cp;
  return eval_poly(h, m);
}

Matrix eigenprojector(const Matrix& m, Elem alpha) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "eigenprojector");
  const Poly cp = char_poly(m);
  if (cp.eval(alpha) != 0) {
    throw Error(ErrorCode::NotAnEigenvalue,
                m.field().format(alpha) + " is not an eigenvalue");
  }
  for (const auto& fac : factor_poly(cp)) {
    if (fac.poly.degree() > 1) {
      throw Error(ErrorCode::FieldTooSmall,
                  "characteristic polynomial does not split over " + m.field().describe());
    }
  }
  return eigenprojector(m, alpha, cp);
}

Elem trace_pairing(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "trace pairing needs equal square shapes");
  }
  if (!(a.field() == b.field())) throw Error(ErrorCode::IncompatibleFields, "trace pairing");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Elem t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) != 0 && b(j, i) != 0) t = f.add(t, f.mul(a(i, j), b(j, i)));
    }
  }
  return t;
}

}  // namespace adq
