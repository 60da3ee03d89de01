#include "qsp/qnumbers.hpp"

#include <stdexcept>

namespace qsp {

namespace {

void require_nonnegative(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + " of a negative integer");
}

}  // namespace

Scalar q_number(int n, int d) {
    if (n == 0) return Scalar(0);
    if (n < 0) return -q_number(-n, d);
    // q_i^{-(n-1)} (1 + q_i^2 + ... + q_i^{2(n-1)})
    std::vector<Int> c(static_cast<std::size_t>(2 * d * (n - 1)) + 1, Int(0));
    for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(2 * d * k)] = Int(1);
    return Scalar::laurent(Poly(std::move(c)), -d * (n - 1));
}

Scalar braced(int n, int d) {
    if (n == 0) return Scalar(0);
    return q_number(n, d).times_q_pow(d * (n - 1));
}

Scalar q_factorial(int n, int d) {
    require_nonnegative(n, "q-factorial");
    Scalar r(1);
    for (int k = 1; k <= n; ++k) r *= q_number(k, d);
    return r;
}

Scalar braced_factorial(int n, int d) {
    require_nonnegative(n, "braced factorial");
    Scalar r(1);
    for (int k = 1; k <= n; ++k) r *= braced(k, d);
    return r;
}

Scalar braced_double_factorial(int n, int d) {
    require_nonnegative(n, "braced double factorial");
    Scalar r(1);
    for (int k = n; k > 0; k -= 2) r *= braced(k, d);
    return r;
}

Scalar q_diff(int d) { return Scalar::q_pow(d) - Scalar::q_pow(-d); }

}  // namespace qsp
