#include "adequacy/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

namespace adq {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::InternalMismatch, "integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::InternalMismatch, "integer overflow");
  return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged integer rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "integer matrix product");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < o.cols_; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc = checked_add(acc, checked_mul((*this)(i, k), o(k, j)));
      r(i, j) = acc;
    }
  }
  return r;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "integer matrix-vector");
  IntVec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) r[i] = checked_add(r[i], checked_mul((*this)(i, k), v[k]));
  }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

std::string IntMatrix::format() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss; every intermediate is a minor of m, so __int128 is ample.
  std::vector<__int128> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = a[k * n + k];
  }
  const __int128 d = sign * a[n * n - 1];
  if (d > INT64_MAX || d < INT64_MIN) throw Error(ErrorCode::InternalMismatch, "determinant overflow");
  return static_cast<std::int64_t>(d);
}

std::size_t rank_over_q(const IntMatrix& m) {
  return smith_normal_form(m).rank;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i += q * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, std::int64_t q) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = checked_add(a(i, c), checked_mul(q, a(j, c)));
}

// col_i += q * col_j
void add_col(IntMatrix& a, std::size_t i, std::size_t j, std::int64_t q) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) = checked_add(a(r, i), checked_mul(q, a(r, j)));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t r = a.rows(), c = a.cols();
  IntMatrix u = IntMatrix::identity(r), v = IntMatrix::identity(c);
  std::size_t t = 0;
  for (; t < std::min(r, c); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto bring_min = [&](bool whole_block) {
      std::size_t bi = r, bj = c;
      std::int64_t best = 0;
      for (std::size_t i = t; i < r; ++i) {
        for (std::size_t j = t; j < c; ++j) {
          if (!whole_block && i != t && j != t) continue;
          const auto x = std::llabs(a(i, j));
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == r) return false;
      if (bi != t) {
        swap_rows(a, bi, t);
        swap_rows(u, bi, t);
      }
      if (bj != t) {
        swap_cols(a, bj, t);
        swap_cols(v, bj, t);
      }
      return true;
    };
    if (!bring_min(true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        const auto q = a(i, t) / a(t, t);
        if (q != 0) {
          add_row(a, i, t, -q);
          add_row(u, i, t, -q);
        }
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        const auto q = a(t, j) / a(t, t);
        if (q != 0) {
          add_col(a, j, t, -q);
          add_col(v, j, t, -q);
        }
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        bring_min(false);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i) {
        for (std::size_t j = t + 1; j < c; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            add_row(a, t, i, 1);
            add_row(u, t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
    }
  }
  SmithForm out;
  out.rank = t;
  for (std::size_t i = 0; i < std::min(r, c); ++i) out.invariants.push_back(a(i, i));
  out.left = std::move(u);
  out.diag = std::move(a);
  out.right = std::move(v);
  return out;
}

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

struct Egcd {
  std::int64_t g, x, y;
};

Egcd egcd(std::int64_t a, std::int64_t b) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const auto q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

}  // namespace

ModularHermite::ModularHermite(std::size_t cols, std::int64_t modulus)
    : cols_(cols), mod_(modulus), rows_(cols) {
  if (modulus <= 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  for (std::size_t i = 0; i < cols; ++i) {
    IntVec e(cols, 0);
    e[i] = modulus;
    rows_[i] = std::move(e);
  }
}

void ModularHermite::add(IntVec v) {
  for (auto& x : v) x = mod_pos(x, mod_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    if (rows_[c].empty()) {
      // The pivot column keeps its true value (mod_ itself is allowed).
      rows_[c] = std::move(v);
      return;
    }
    IntVec& h = rows_[c];
    const auto [g, x, y] = egcd(h[c], v[c]);
    const auto hc = h[c] / g, vc = v[c] / g;
    IntVec nh(cols_), nv(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      const __int128 a = static_cast<__int128>(x) * h[j] + static_cast<__int128>(y) * v[j];
      const __int128 b = static_cast<__int128>(hc) * v[j] - static_cast<__int128>(vc) * h[j];
      nh[j] = static_cast<std::int64_t>(((a % mod_) + mod_) % mod_);
      nv[j] = static_cast<std::int64_t>(((b % mod_) + mod_) % mod_);
    }
    nh[c] = g;  // g divides mod_ (h[c] always divides mod_), keep it exact
    nv[c] = 0;
    h = std::move(nh);
    v = std::move(nv);
  }
}

IntMatrix ModularHermite::basis() const {
  IntMatrix m(cols_, cols_);
  for (std::size_t i = 0; i < cols_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = rows_[i].empty() ? 0 : rows_[i][j];
  }
  return m;
}

}  // namespace adq
