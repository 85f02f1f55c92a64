#pragma once

#include <bideal/count.hpp>

namespace bideal {

// Both sides of a closed-form identity, evaluated independently. Callers
// compare lhs against rhs; the checkers never assume the identity holds.
struct IdentityPair {
    Count lhs;
    Count rhs;
    bool holds() const { return lhs == rhs; }
};

// sum_{k=0}^{n} k * 2^(n-k)  vs  2^(n+1) - n - 2
inline IdentityPair sum_k_pow2(long long n) {
    Count lhs = 0;
    for (long long k = 0; k <= n; ++k) lhs += Count(k) * pow2(n - k);
    Count rhs = pow2(n + 1) - n - 2;
    return {lhs, rhs};
}

// sum_{k=0}^{n} k^2 * 2^(n-k)  vs  6 * 2^n - n^2 - 4n - 6
inline IdentityPair sum_k_squared_pow2(long long n) {
    Count lhs = 0;
    for (long long k = 0; k <= n; ++k) lhs += Count(k) * k * pow2(n - k);
    Count rhs = 6 * pow2(n) - Count(n) * n - 4 * n - 6;
    return {lhs, rhs};
}

// sum_{s=m}^{n} C(s, m)  vs  C(n+1, m+1), the hockey stick sum
inline IdentityPair hockey_stick(long long m, long long n) {
    Count lhs = 0;
    for (long long s = m; s <= n; ++s) lhs += binomial(s, m);
    return {lhs, binomial(n + 1, m + 1)};
}

// sum_{l=0}^{A-B} 2^l * C(A-l, B)  vs  sum_{s=0}^{A-B} C(A+1, s)
inline IdentityPair pow2_binomial_transform(long long A, long long B) {
    Count lhs = 0;
    for (long long l = 0; l <= A - B; ++l) lhs += pow2(l) * binomial(A - l, B);
    Count rhs = 0;
    for (long long s = 0; s <= A - B; ++s) rhs += binomial(A + 1, s);
    return {lhs, rhs};
}

// C(2n-i-k-2, n-i-1) - C(2n-i-k-2, n-i-k-1), the raw two-binomial term
// counting Dyck paths of semilength n with first peak i and last peak k.
// Out-of-range binomials vanish. The degenerate staircase cell i = k = n is
// NOT patched here; bpaths' dyck_count_first_last layers that on top.
inline Count dyck_peak_term(long long n, long long i, long long k) {
    long long a = 2 * n - i - k - 2;
    return binomial_or_zero(a, n - i - 1) - binomial_or_zero(a, n - i - k - 1);
}

// sum_{j=1}^{b} (j-1)^2 * 2^(b-j)  vs  3 * 2^b - b^2 - 2b - 3
inline IdentityPair quadratic_pow2_prefix(long long b) {
    Count lhs = 0;
    for (long long j = 1; j <= b; ++j) lhs += Count(j - 1) * (j - 1) * pow2(b - j);
    Count rhs = 3 * pow2(b) - Count(b) * b - 2 * b - 3;
    return {lhs, rhs};
}

// sum_{j=b+1}^{b+n-1} (j-1)^2 * 2^(b+n-j-1)
//   vs  2^(n-1) * (b^2 + 2b + 3) - n^2 - b^2 - 2bn - 2
inline IdentityPair quadratic_pow2_window(long long b, long long n) {
    Count lhs = 0;
    for (long long j = b + 1; j <= b + n - 1; ++j)
        lhs += Count(j - 1) * (j - 1) * pow2(b + n - j - 1);
    Count rhs = pow2(n - 1) * (Count(b) * b + 2 * b + 3) - Count(n) * n - Count(b) * b -
                2 * Count(b) * n - 2;
    return {lhs, rhs};
}

// sum_{b=0}^{n-2} [ 2^(2n-b-3) * (b^2 + 2b + 3)
//                   + 2^(n-b-2) * (n^2 + b^2 + 2bn - 2b - 2n - 2) ]
//   vs  2^(2n+1) - 2^n * (n+3) - 4n(n-1)
inline IdentityPair combined_tail_sum(long long n) {
    Count lhs = 0;
    for (long long b = 0; b <= n - 2; ++b) {
        Count quad = Count(b) * b + 2 * b + 3;
        Count mixed = Count(n) * n + Count(b) * b + 2 * Count(b) * n - 2 * b - 2 * n - 2;
        lhs += pow2(2 * n - b - 3) * quad + pow2(n - b - 2) * mixed;
    }
    Count rhs = pow2(2 * n + 1) - pow2(n) * (n + 3) - 4 * Count(n) * (n - 1);
    return {lhs, rhs};
}

}  // namespace bideal
