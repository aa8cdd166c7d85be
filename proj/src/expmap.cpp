#include "adequacy/expmap.hpp"

namespace adq {

std::size_t nilpotency_index(const Matrix& x) {
  if (!x.is_square()) throw Error(ErrorCode::NotSquare, "nilpotency index");
  Matrix p = Matrix::identity(x.field(), x.rows());
  for (std::size_t k = 0; k <= x.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * x;
  }
  return 0;
}

bool is_nilpotent_to_order_l(const Matrix& x) {
  if (x.rows() == 0) return true;
  const std::size_t k = nilpotency_index(x);
  return k != 0 && k <= x.field().prime();
}

bool is_unipotent_to_order_l(const Matrix& u) {
  if (!u.is_square()) throw Error(ErrorCode::NotSquare, "unipotency check");
  return is_nilpotent_to_order_l(u - Matrix::identity(u.field(), u.rows()));
}

namespace {

// sum_{i=lo}^{l-1} coeff(i) x^i, stopping once the powers vanish.
template <typename Coeff>
Matrix truncated_series(const Matrix& x, std::size_t lo, Coeff&& coeff) {
  const auto& f = x.field();
  const std::uint64_t l = f.prime();
  Matrix sum(f, x.rows(), x.cols());
  Matrix power = Matrix::identity(f, x.rows());
  for (std::uint64_t i = 0; i < l && !power.is_zero(); ++i) {
    if (i >= lo) sum = sum + power.scaled(coeff(i));
    power = power * x;
  }
  return sum;
}

}  // namespace

Matrix exp_nilpotent(const Matrix& x) {
  if (!x.is_square()) throw Error(ErrorCode::NotSquare, "exp");
  if (!is_nilpotent_to_order_l(x)) {
    throw Error(ErrorCode::NotNilpotentToOrderL, "X^l is nonzero");
  }
  const auto& f = x.field();
  Elem inv_fact = f.one();
  return truncated_series(x, 0, [&](std::uint64_t i) {
    if (i > 0) inv_fact = f.div(inv_fact, f.from_int(static_cast<std::int64_t>(i)));
    return inv_fact;
  });
}

Matrix log_unipotent(const Matrix& u) {
  if (!u.is_square()) throw Error(ErrorCode::NotSquare, "log");
  if (!is_unipotent_to_order_l(u)) {
    throw Error(ErrorCode::NotUnipotentToOrderL, "(u - 1)^l is nonzero");
  }
  const auto& f = u.field();
  const Matrix n = u - Matrix::identity(f, u.rows());
  return truncated_series(n, 1, [&](std::uint64_t i) {
    const Elem c = f.inv(f.from_int(static_cast<std::int64_t>(i)));
    return i % 2 == 1 ? c : f.neg(c);
  });
}

bool one_parameter(const Matrix& x, Elem a, Elem b) {
  const auto& f = x.field();
  return exp_nilpotent(x.scaled(a)) * exp_nilpotent(x.scaled(b)) ==
         exp_nilpotent(x.scaled(f.add(a, b)));
}

bool conjugation_equivariance(const Matrix& x, const Matrix& g) {
  const auto gi = inverse(g);
  if (!gi) throw Error(ErrorCode::NotInvertible, "conjugating matrix is singular");
  return g * exp_nilpotent(x) * *gi == exp_nilpotent(g * x * *gi);
}

}  // namespace adq
