#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace bideal {

// Exact arbitrary-precision integer used for every count in the library.
// Counts here routinely leave the 64-bit range (the identity grids reach
// binomials around C(81,40) ~ 1.9e23), so no fixed-width shortcut is taken.
using Count = boost::multiprecision::cpp_int;

// Thrown when an exactness assumption fails (a division that must be exact
// leaves a remainder, an internal cross-check disagrees).
struct exactness_error : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {

// Pascal-triangle memo for small upper indices, immutable after first use.
// Rows are built once up to kTableRows and shared read-only; anything larger
// falls back to the multiplicative product, which divides exactly step by step.
class BinomialTable {
  public:
    static constexpr int kTableRows = 257;  // covers upper index a <= 256

    static const BinomialTable& instance() {
        static const BinomialTable table;
        return table;
    }

    const Count& at(int a, int b) const { return rows_[a][b]; }

  private:
    BinomialTable() {
        rows_.resize(kTableRows);
        for (int a = 0; a < kTableRows; ++a) {
            rows_[a].resize(a + 1);
            rows_[a][0] = 1;
            rows_[a][a] = 1;
            for (int b = 1; b < a; ++b)
                rows_[a][b] = rows_[a - 1][b - 1] + rows_[a - 1][b];
        }
    }

    std::vector<std::vector<Count>> rows_;
};

inline Count binomial_product(long long a, long long b) {
    if (b > a - b) b = a - b;
    Count result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;  // exact: result is a running binomial
    }
    return result;
}

}  // namespace detail

// C(a, b) for a >= 0, with C(a, b) = 0 when b < 0 or b > a.
// Negative upper indices are a domain error; no formula in this library needs
// them except where binomial_or_zero below is documented to absorb them.
inline Count binomial(long long a, long long b) {
    if (a < 0) throw std::domain_error("binomial: negative upper index");
    if (b < 0 || b > a) return 0;
    if (a < detail::BinomialTable::kTableRows)
        return detail::BinomialTable::instance().at(static_cast<int>(a), static_cast<int>(b));
    return detail::binomial_product(a, b);
}

// C(a, b) extended by zero outside 0 <= b <= a, including a < 0. The peak
// count formulas index binomials past their combinatorial range and expect
// those terms to vanish.
inline Count binomial_or_zero(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    return binomial(a, b);
}

inline Count pow2(long long k) {
    if (k < 0) throw std::domain_error("pow2: negative exponent");
    return Count(1) << static_cast<unsigned>(k);
}

// C(2n, n) / (n + 1), computed by exact division.
inline Count catalan(long long n) {
    if (n < 0) throw std::domain_error("catalan: negative index");
    Count central = binomial(2 * n, n);
    Count result = central / (n + 1);
    if (result * (n + 1) != central)
        throw exactness_error("catalan: central binomial not divisible by n+1");
    return result;
}

}  // namespace bideal
