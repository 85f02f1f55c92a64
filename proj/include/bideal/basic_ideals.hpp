#pragma once

#include <bideal/bpaths.hpp>
#include <bideal/count.hpp>
#include <bideal/root_poset.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bideal {

// A pair of B_n-paths of equal rank; p carries the lower half of the doubled
// board, q the upper half.
struct PathPair {
    BPath p;
    BPath q;

    int rank() const {
        if (p.rank() != q.rank()) throw std::domain_error("PathPair: ranks differ");
        return p.rank();
    }
};

using AffineMask = Poset<AffineNode>::Mask;

// Decoded subset of D \ {delta} in the canonical index layout. Lower part
// from p as in path_to_coideal; upper part: delta - (r, s) is present iff q
// has fewer than r f's or the r-th f of q sits at position > r + s.
inline AffineMask decode_pair_mask(int n, const BPath& p, const BPath& q) {
    AffineMask mask(static_cast<size_t>(2 * n * n));
    int row = 0;
    for (int pos : p.f_positions()) {
        ++row;
        for (int j = pos - row; j <= 2 * n - row; ++j)
            mask.set(static_cast<size_t>(lower_index(n, {row, j})));
    }
    auto qpos = q.f_positions();
    for (int r = 1; r <= n; ++r) {
        int cutoff = 2 * n - r;  // include s in [r, cutoff]
        if (r <= static_cast<int>(qpos.size())) {
            int limit = qpos[static_cast<size_t>(r - 1)] - r - 1;
            if (limit < cutoff) cutoff = limit;
        }
        for (int s = r; s <= cutoff; ++s)
            mask.set(static_cast<size_t>(upper_index(n, {r, s})));
    }
    return mask;
}

// Decoded subset as explicit nodes, lower block first, both row-major.
inline std::vector<AffineNode> pair_to_affine_coideal(const PathPair& pair) {
    int n = pair.rank();
    AffineMask mask = decode_pair_mask(n, pair.p, pair.q);
    std::vector<AffineNode> nodes;
    const auto roots = positive_roots(n);
    for (const Root& a : roots)
        if (mask.test(static_cast<size_t>(lower_index(n, a))))
            nodes.push_back(AffineNode::lower(a));
    for (const Root& a : roots)
        if (mask.test(static_cast<size_t>(upper_index(n, a))))
            nodes.push_back(AffineNode::upper(a));
    return nodes;
}

// A pair is admissible when its decoded subset is upward-closed in the affine
// order. Both halves are upward-closed within their own copies by
// construction, so only the lower-to-upper closure can fail; the check is
// still the plain definition against the full poset.
inline bool is_admissible(const PathPair& pair, const Poset<AffineNode>& poset) {
    int n = pair.rank();
    if (poset.size() != 2 * n * n) throw std::domain_error("is_admissible: poset rank mismatch");
    return poset.is_upward_closed(decode_pair_mask(n, pair.p, pair.q));
}

inline bool is_admissible(const PathPair& pair) {
    return is_admissible(pair, affine_poset_cached(pair.rank()));
}

// Class-level admissibility test. With classify(p) = (a, b) and
// classify(q) = (i, j), sentinels included:
//   a >= 3, b <= 2n      ->  i >= 2n+4-b and j >= 2n+4-a
//   a >= 3, b = 2n+1     ->  j >= 2n+4-a
//   a = 2,  b <= 2n      ->  j >= 2n+1 and i >= 2n+4-b
//   a = 2,  b = 2n+1     ->  j >= 2n+1
//   all-r p              ->  always admissible
// The a = 2 rows force q to carry at most one f: the decoded lower set then
// contains (1, 1), whose upper cone is the whole upper copy above row 1.
inline bool admissible_classes(int n, PathClass p, PathClass q) {
    const int a = p.first_f, b = p.second_f;
    const int i = q.first_f, j = q.second_f;
    if (a == 2 * n + 1) return true;
    if (a >= 3) {
        if (b <= 2 * n && i < 2 * n + 4 - b) return false;
        return j >= 2 * n + 4 - a;
    }
    // a == 2
    if (j < 2 * n + 1) return false;
    if (b <= 2 * n) return i >= 2 * n + 4 - b;
    return true;
}

inline bool is_admissible_criterion(const PathPair& pair) {
    int n = pair.rank();
    return admissible_classes(n, classify(pair.p), classify(pair.q));
}

// Closed form for the number of basic ideals.
inline Count count_basic_formula(int n) {
    require_rank(n, 2);
    return Count(3 * n + 5) * pow2(2 * n - 2) - 2 * Count(3 * n - 1) * binomial(2 * n - 2, n - 1);
}

// The four-way case split of the admissible-pair count, kept in its raw
// pre-simplification shape: s1 covers p with two f's by position 2n, s2
// single-f p, s3 p starting rf, s4 the residual paths built from all-r and
// rf r..r. Class sizes |B_n(*, j)| appear as |B_{n-1}(j-2)| throughout.
struct CaseBreakdown {
    Count s1, s2, s3, s4;
    Count total() const { return s1 + s2 + s3 + s4; }
};

inline CaseBreakdown case_sums(int n) {
    require_rank(n, 2);
    const int twon = 2 * n;
    std::vector<Count> size_prev(static_cast<size_t>(twon), 0);  // |B_{n-1}(m)|, m = 1..2n-1
    for (int m = 1; m <= twon - 1; ++m)
        size_prev[static_cast<size_t>(m - 1)] = count_class_first_ext(n - 1, m);
    auto prev = [&](int m) -> const Count& { return size_prev[static_cast<size_t>(m - 1)]; };

    CaseBreakdown out{0, 0, 0, 0};
    for (int b = 4; b <= twon; ++b) {
        Count inner = 0;
        for (int a = 3; a <= b - 1; ++a)
            for (int j = twon + 4 - a; j <= twon + 1; ++j)
                inner += Count(b + j - twon - 4) * prev(j - 2);
        out.s1 += prev(b - 2) * inner;
    }
    for (int a = 3; a <= twon; ++a)
        for (int j = twon + 4 - a; j <= twon + 1; ++j)
            out.s2 += Count(j - 2) * prev(j - 2);
    for (int b = 4; b <= twon; ++b) out.s3 += prev(b - 2) * (b - 3);
    out.s4 = Count(twon - 1) + 2 * binomial(twon, n) - 1;
    return out;
}

// Independent route: walk every ordered pair of path classes, apply the
// class criterion, and weigh by class sizes. Covers the sentinel classes
// (single-f paths and the all-r path) uniformly.
inline Count count_basic_pairs(int n) {
    require_rank(n, 2);
    const int twon = 2 * n;
    std::vector<PathClass> classes;
    std::vector<Count> sizes;
    for (int i = 2; i <= twon; ++i)
        for (int j = i + 1; j <= twon + 1; ++j) {
            classes.push_back({i, j});
            sizes.push_back(count_class_first_ext(n - 1, j - 2));
        }
    classes.push_back({twon + 1, twon + 2});
    sizes.push_back(1);

    Count total = 0;
    for (size_t pi = 0; pi < classes.size(); ++pi) {
        if (sizes[pi] == 0) continue;
        Count q_total = 0;
        for (size_t qi = 0; qi < classes.size(); ++qi)
            if (admissible_classes(n, classes[pi], classes[qi])) q_total += sizes[qi];
        total += sizes[pi] * q_total;
    }
    return total;
}

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BruteforceOptions {
    int threads = 1;
    Count cap = 100000;  // refuse larger projected outputs
};

// Ground truth: counts the coideals of D \ {delta} by direct enumeration.
// The closed form serves only as the projection for the resource guard.
inline Count count_basic_bruteforce(int n, const BruteforceOptions& options = {}) {
    require_rank(n, 2);
    Count projected = count_basic_formula(n);
    if (projected > options.cap)
        throw resource_limit_error("projected coideal count " + projected.str() +
                                   " exceeds cap " + options.cap.str());
    return count_coideals(affine_poset_cached(n), options.threads);
}

// b~_n - 8 b~_{n-1} + 16 b~_{n-2} - (24 / (n-1)) C(2n-6, n-2); zero whenever
// the recurrence holds. The division must be exact or the data is corrupt.
inline Count recurrence_residual(int n) {
    require_rank(n, 4);
    Count scaled = 24 * binomial(2 * n - 6, n - 2);
    Count quotient = scaled / (n - 1);
    if (quotient * (n - 1) != scaled)
        throw exactness_error("recurrence_residual: 24*C(2n-6, n-2) not divisible by n-1");
    return count_basic_formula(n) - 8 * count_basic_formula(n - 1) +
           16 * count_basic_formula(n - 2) - quotient;
}

namespace detail {

// Rebuilds the q-path whose decoded upper set equals the given one. Input is
// the per-row inclusion bound: keep[r] = largest s with delta - (r, s)
// included, or r - 1 for an empty row, or 2n - r for a full row.
inline BPath upper_coideal_to_path(int n, const std::vector<int>& keep) {
    std::vector<int> fpos;
    int r = 1;
    for (; r <= n; ++r) {
        int k = keep[static_cast<size_t>(r - 1)];
        if (k >= 2 * n - r) break;  // full row: q must run out of f's here
        fpos.push_back(r + k + 1);
    }
    for (; r <= n; ++r)
        if (keep[static_cast<size_t>(r - 1)] < 2 * n - r)
            throw std::domain_error("upper_coideal_to_path: set is not upward-closed");
    return BPath::from_f_positions(n, fpos);
}

}  // namespace detail

// Constraints on q for (p, q) to be admissible, plus the q with the smallest
// decoded upper set. Fields are present only when the regime constrains them.
struct QAdmissibility {
    PathClass p_class;
    std::optional<int> first_f_min;
    std::optional<int> second_f_min;
    std::optional<int> max_f_count;
    BPath minimal_q;
};

// The minimal upper set is the union of the upper cones of the decoded lower
// set; converting it back through the path bijection yields the minimal q
// independently of any class reasoning.
inline QAdmissibility admissible_q_info(const BPath& p) {
    const int n = p.rank();
    require_rank(n, 2);
    const int twon = 2 * n;

    // required[r] = largest s with delta - (r, s) forced, r - 1 when none
    std::vector<int> required(static_cast<size_t>(n));
    for (int r = 1; r <= n; ++r) required[static_cast<size_t>(r - 1)] = r - 1;
    int row = 0;
    for (int pos : p.f_positions()) {
        ++row;
        int j = pos - row;  // leftmost root of the decoded row
        int bound = twon - j;
        int from = row == 1 ? 2 : 1;
        for (int r = from; r <= n; ++r) {
            int top = std::min(bound, twon - r);
            if (top > required[static_cast<size_t>(r - 1)])
                required[static_cast<size_t>(r - 1)] = top;
        }
    }

    QAdmissibility info;
    info.p_class = classify(p);
    info.minimal_q = detail::upper_coideal_to_path(n, required);
    const int a = info.p_class.first_f, b = info.p_class.second_f;
    if (a == twon + 1) return info;  // all-r p: no constraints
    if (a >= 3) {
        if (b <= twon) info.first_f_min = twon + 4 - b;
        info.second_f_min = twon + 4 - a;
    } else {
        info.max_f_count = 1;
        if (b <= twon) info.first_f_min = twon + 4 - b;
    }
    return info;
}

}  // namespace bideal
