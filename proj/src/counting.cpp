#include "catval/counting.hpp"

#include <stdexcept>

namespace catval {

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(long n, long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= n - i;
    return num / factorial(k);
}

Int multinomial(long n, const std::vector<long>& parts) {
    Int result = 1;
    long remaining = n;
    for (long p : parts) {
        if (p < 0) return 0;
        result *= binomial(remaining, p);
        remaining -= p;
        if (result == 0) return 0;
    }
    return result;
}

Int eulerian(long n, long k) {
    if (n < 1 || k < 1 || k > n) return 0;
    // A(m, j) = j A(m-1, j) + (m - j + 1) A(m-1, j-1), row by row.
    std::vector<Int> row{Int(1)};  // row for m = 1
    for (long m = 2; m <= n; ++m) {
        std::vector<Int> next(static_cast<size_t>(m));
        for (long j = 1; j <= m; ++j) {
            Int v = 0;
            if (j <= m - 1) v += j * row[static_cast<size_t>(j - 1)];
            if (j >= 2) v += (m - j + 1) * row[static_cast<size_t>(j - 2)];
            next[static_cast<size_t>(j - 1)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k - 1)];
}

Int stirling2(long r, long k) {
    if (r < 0 || k < 0 || k > r) return 0;
    if (r == 0) return 1;  // k == 0 == r
    if (k == 0) return 0;
    std::vector<Int> row{Int(1)};  // S(0, 0)
    for (long m = 1; m <= r; ++m) {
        std::vector<Int> next(static_cast<size_t>(m) + 1);
        for (long j = 1; j <= m; ++j) {
            Int v = j * (j < static_cast<long>(row.size()) ? row[static_cast<size_t>(j)] : Int(0));
            v += row[static_cast<size_t>(j - 1)];
            next[static_cast<size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

}  // namespace catval
