#pragma once

#include <bideal/count.hpp>
#include <bideal/root_poset.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bideal {

// A B_n-path: a word of length 2n over {r, f} in which every prefix holds at
// least as many r's as f's. Stored as a bit mask over 1-based positions
// (bit k-1 set means position k is an f), which caps the rank at 32.
class BPath {
  public:
    BPath() = default;

    static BPath from_bits(int n, uint64_t fbits) {
        require_rank(n);
        if (n < 32 && (fbits >> (2 * n)) != 0)
            throw std::domain_error("BPath: f bits past the end of the word");
        BPath path;
        path.n_ = n;
        path.fbits_ = fbits;
        if (!path.dominant()) throw std::domain_error("BPath: prefix dominance violated");
        return path;
    }

    // 1-based, strictly increasing positions of the f's.
    static BPath from_f_positions(int n, const std::vector<int>& positions) {
        require_rank(n);
        uint64_t bits = 0;
        int prev = 0;
        for (int pos : positions) {
            if (pos <= prev || pos > 2 * n)
                throw std::domain_error("BPath: f positions not ascending in range");
            bits |= uint64_t(1) << (pos - 1);
            prev = pos;
        }
        return from_bits(n, bits);
    }

    // Parses a lowercase r/f word. On failure returns nullopt and, if asked,
    // reports the shortest offending prefix.
    static std::optional<BPath> parse(std::string_view word, int n,
                                      std::string* error = nullptr) {
        require_rank(n);
        if (word.size() != static_cast<size_t>(2 * n)) {
            if (error)
                *error = "expected " + std::to_string(2 * n) + " letters, got " +
                         std::to_string(word.size());
            return std::nullopt;
        }
        uint64_t bits = 0;
        int height = 0;
        for (size_t k = 0; k < word.size(); ++k) {
            char c = word[k];
            if (c != 'r' && c != 'f') {
                if (error)
                    *error = "letter '" + std::string(1, c) + "' at position " +
                             std::to_string(k + 1) + " is not r or f";
                return std::nullopt;
            }
            if (c == 'f') {
                bits |= uint64_t(1) << k;
                --height;
            } else {
                ++height;
            }
            if (height < 0) {
                if (error)
                    *error = "prefix \"" + std::string(word.substr(0, k + 1)) +
                             "\" has more f's than r's";
                return std::nullopt;
            }
        }
        BPath path;
        path.n_ = n;
        path.fbits_ = bits;
        return path;
    }

    int rank() const { return n_; }
    int length() const { return 2 * n_; }
    uint64_t f_bits() const { return fbits_; }

    bool f_at(int pos) const { return (fbits_ >> (pos - 1)) & 1; }
    int f_count() const { return __builtin_popcountll(fbits_); }

    // Position of the k-th f (1-based k), or 0 when there are fewer than k.
    int f_position(int k) const {
        uint64_t bits = fbits_;
        for (int seen = 1; bits; ++seen) {
            int pos = __builtin_ctzll(bits) + 1;
            if (seen == k) return pos;
            bits &= bits - 1;
        }
        return 0;
    }

    std::vector<int> f_positions() const {
        std::vector<int> out;
        for (uint64_t bits = fbits_; bits; bits &= bits - 1)
            out.push_back(__builtin_ctzll(bits) + 1);
        return out;
    }

    std::string str() const {
        std::string s(static_cast<size_t>(length()), 'r');
        for (int pos : f_positions()) s[static_cast<size_t>(pos - 1)] = 'f';
        return s;
    }

    friend bool operator==(const BPath&, const BPath&) = default;
    friend auto operator<=>(const BPath& a, const BPath& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.fbits_ <=> b.fbits_;
    }

  private:
    bool dominant() const {
        int height = 0;
        for (int pos = 1; pos <= length(); ++pos) {
            height += f_at(pos) ? -1 : 1;
            if (height < 0) return false;
        }
        return true;
    }

    uint64_t fbits_ = 0;
    int n_ = 1;
};

inline bool is_bpath(std::string_view word, int n) {
    return BPath::parse(word, n).has_value();
}

// First and second f positions, with sentinels for the missing ones: a path
// with no f classifies as (2n+1, 2n+2) and a single-f path as (pos, 2n+1).
struct PathClass {
    int first_f = 0;
    int second_f = 0;

    friend bool operator==(const PathClass&, const PathClass&) = default;
};

inline PathClass classify(const BPath& path) {
    int twon = path.length();
    int first = path.f_position(1);
    int second = path.f_position(2);
    if (first == 0) return {twon + 1, twon + 2};
    if (second == 0) return {first, twon + 1};
    return {first, second};
}

namespace detail {

template <class Visit>
void bpath_walk(int n, int pos, int height, uint64_t bits, Visit&& visit) {
    if (pos > 2 * n) {
        visit(BPath::from_bits(n, bits));
        return;
    }
    bpath_walk(n, pos + 1, height + 1, bits, visit);  // r first: lex order
    if (height > 0)
        bpath_walk(n, pos + 1, height - 1, bits | (uint64_t(1) << (pos - 1)), visit);
}

}  // namespace detail

// Visits all C(2n, n) B_n-paths in lexicographic order with r < f,
// so the all-r path comes first.
template <class Visit>
void for_each_bpath(int n, Visit&& visit) {
    require_rank(n);
    detail::bpath_walk(n, 1, 0, 0, visit);
}

inline std::vector<BPath> all_bpaths(int n) {
    std::vector<BPath> out;
    for_each_bpath(n, [&](const BPath& p) { out.push_back(p); });
    return out;
}

inline Count bpath_count(int n) {
    require_rank(n);
    return binomial(2 * n, n);
}

// Path at a given rank in the enumeration order of for_each_bpath.
inline BPath unrank_bpath(int n, uint64_t index) {
    require_rank(n);
    // completion counts for all (steps, height) states
    std::vector<std::vector<uint64_t>> ways(static_cast<size_t>(2 * n + 1),
                                            std::vector<uint64_t>(static_cast<size_t>(2 * n + 2), 0));
    for (int h = 0; h <= 2 * n; ++h) ways[static_cast<size_t>(2 * n)][static_cast<size_t>(h)] = 1;
    for (int step = 2 * n - 1; step >= 0; --step)
        for (int h = 0; h <= 2 * n; ++h) {
            uint64_t w = ways[static_cast<size_t>(step + 1)][static_cast<size_t>(h + 1)];
            if (h > 0) w += ways[static_cast<size_t>(step + 1)][static_cast<size_t>(h - 1)];
            ways[static_cast<size_t>(step)][static_cast<size_t>(h)] = w;
        }
    if (index >= ways[0][0]) throw std::domain_error("unrank_bpath: index out of range");
    uint64_t bits = 0;
    int height = 0;
    for (int step = 0; step < 2 * n; ++step) {
        uint64_t with_r = ways[static_cast<size_t>(step + 1)][static_cast<size_t>(height + 1)];
        if (index < with_r) {
            ++height;
        } else {
            index -= with_r;
            bits |= uint64_t(1) << step;
            --height;
        }
    }
    return BPath::from_bits(n, bits);
}

// |B_n(i)|: paths whose first f sits at position i. Closed form: for i <= n a
// 2^k-weighted sum of Dyck peak terms, for i > n simply 2^(2n-i). Rank 1 has
// only the two paths rr and rf.
inline Count count_class_first(int n, int i) {
    require_rank(n);
    if (i < 1 || i > 2 * n) throw std::domain_error("count_class_first: class out of range");
    if (n == 1) return i == 2 ? 1 : 0;
    if (i > n) return pow2(2 * n - i);
    Count total = 0;
    for (int k = 1; k <= n - 1; ++k)
        total += pow2(k) * (binomial_or_zero(2 * n - i - k - 1, n - i) -
                            binomial_or_zero(2 * n - i - k - 1, n - i - k));
    return total;
}

// Same, but accepting the sentinel i = 2n+1 for the all-r path (count 1).
inline Count count_class_first_ext(int n, int i) {
    if (i == 2 * n + 1) return 1;
    return count_class_first(n, i);
}

// |B_n(i, j)|: paths with first f at i and second at j. Dropping the first r
// and first f is a bijection onto B_{n-1}(j-2), so the count ignores i. The
// sentinel j = 2n+1 (single-f paths) maps onto the rank-(n-1) all-r sentinel.
inline Count count_class_pair(int n, int i, int j) {
    require_rank(n, 2);
    if (i < 2 || j <= i || j > 2 * n + 1)
        throw std::domain_error("count_class_pair: class out of range");
    return count_class_first_ext(n - 1, j - 2);
}

// Decodes a path to its coideal of positive roots: (i, j) belongs to the
// coideal iff the path has at least i f's and the i-th f sits at position
// <= i + j. Row i of the result is the interval [pos_i - i, 2n - i].
inline std::vector<Root> path_to_coideal(const BPath& path) {
    int n = path.rank();
    std::vector<Root> roots;
    int row = 0;
    for (int pos : path.f_positions()) {
        ++row;
        for (int j = pos - row; j <= 2 * n - row; ++j) roots.push_back({row, j});
    }
    return roots;
}

// Inverse of path_to_coideal. Validates that the given set really is a
// coideal: nonempty rows form a prefix, each row is an upper interval of
// columns, and the row minima are weakly increasing.
inline BPath coideal_to_path(const std::vector<Root>& coideal, int n) {
    require_rank(n);
    std::vector<std::vector<char>> present(static_cast<size_t>(n + 1));
    for (int r = 1; r <= n; ++r)
        present[static_cast<size_t>(r)].assign(static_cast<size_t>(2 * n - 2 * r + 1), 0);
    for (Root a : coideal) {
        if (!is_valid_root(n, a)) throw std::domain_error("coideal_to_path: invalid root");
        present[static_cast<size_t>(a.r)][static_cast<size_t>(a.s - a.r)] = 1;
    }
    std::vector<int> fpos;
    int prev_min = 0;
    bool closed_rows = true;
    for (int r = 1; r <= n; ++r) {
        const auto& row = present[static_cast<size_t>(r)];
        int first = -1;
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c]) { first = static_cast<int>(c); break; }
        if (first < 0) { closed_rows = false; continue; }
        if (!closed_rows) throw std::domain_error("coideal_to_path: set is not upward-closed");
        for (size_t c = static_cast<size_t>(first); c < row.size(); ++c)
            if (!row[c]) throw std::domain_error("coideal_to_path: set is not upward-closed");
        int min_col = r + first;
        if (min_col < prev_min) throw std::domain_error("coideal_to_path: set is not upward-closed");
        prev_min = min_col;
        fpos.push_back(r + min_col);
    }
    return BPath::from_f_positions(n, fpos);
}

// Dyck paths of semilength n with first peak at height h and last peak at
// height k. The closed form degenerates only at the full staircase h = k = n,
// the unique single-peak path.
inline Count dyck_count_first_last(int n, int h, int k) {
    require_rank(n);
    if (h < 1 || h > n || k < 1 || k > n)
        throw std::domain_error("dyck_count_first_last: peak height out of range");
    if (h == n && k == n) return 1;
    long long a = 2LL * n - h - k - 2;
    return binomial_or_zero(a, n - h - 1) - binomial_or_zero(a, n - h - k - 1);
}

}  // namespace bideal
