#pragma once

#include "adequacy/matrix.hpp"

namespace adq {

/// Least k with x^k = 0, or 0 if x is not nilpotent.
std::size_t nilpotency_index(const Matrix& x);

bool is_nilpotent_to_order_l(const Matrix& x);
bool is_unipotent_to_order_l(const Matrix& u);

/// 1 + X + X^2/2! + ... + X^(l-1)/(l-1)! where l is the characteristic of
/// x's field. Throws NotNilpotentToOrderL unless X^l = 0.
Matrix exp_nilpotent(const Matrix& x);

/// N - N^2/2 + N^3/3 - ... + (-1)^l N^(l-1)/(l-1) with N = u - 1.
/// Throws NotUnipotentToOrderL unless N^l = 0.
Matrix log_unipotent(const Matrix& u);

/// exp(aX) exp(bX) = exp((a+b)X).
bool one_parameter(const Matrix& x, Elem a, Elem b);

/// g exp(X) g^-1 = exp(g X g^-1). Throws NotInvertible for singular g.
bool conjugation_equivariance(const Matrix& x, const Matrix& g);

}  // namespace adq
