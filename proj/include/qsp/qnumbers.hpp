#pragma once

#include "qsp/scalar.hpp"

namespace qsp {

// All functions take the symmetriser exponent d, so that q_i = q^d.

/// [n]_i = (q_i^n - q_i^{-n}) / (q_i - q_i^{-1}); defined for every integer n.
Scalar q_number(int n, int d = 1);
/// [n]_i! ; n >= 0.
Scalar q_factorial(int n, int d = 1);
/// {n}_i = q_i^{n-1} [n]_i = 1 + q_i^2 + ... + q_i^{2(n-1)}.
Scalar braced(int n, int d = 1);
/// {n}_i! = {1}_i {2}_i ... {n}_i ; n >= 0.
Scalar braced_factorial(int n, int d = 1);
/// {n}_i!! = {n}_i {n-2}_i ... down to {1}_i or {2}_i ; n >= 0.
Scalar braced_double_factorial(int n, int d = 1);

/// q_i - q_i^{-1}.
Scalar q_diff(int d = 1);

}  // namespace qsp
