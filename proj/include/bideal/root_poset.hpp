#pragma once

#include <bideal/count.hpp>

#include <boost/dynamic_bitset.hpp>

#include <atomic>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace bideal {

// A positive root of type B_n, written as the index pair (r, s) with
// 1 <= r <= s <= 2n - r. Row r of the triangular diagram holds the roots
// (r, r) .. (r, 2n - r); there are n^2 roots in total.
struct Root {
    int r = 0;
    int s = 0;

    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;  // row-major
};

inline bool is_valid_root(int n, Root a) {
    return 1 <= a.r && a.r <= a.s && a.s <= 2 * n - a.r;
}

inline void require_rank(int n, int min_rank = 1) {
    if (n < min_rank || n > 32)
        throw std::domain_error("rank out of supported range");
}

inline int root_count(int n) { return n * n; }

// Row-major position of a root: rows ascending, columns ascending inside a row.
inline int root_index(int n, Root a) {
    return (a.r - 1) * (2 * n + 1 - a.r) + (a.s - a.r);
}

inline std::vector<Root> positive_roots(int n) {
    require_rank(n);
    std::vector<Root> roots;
    roots.reserve(static_cast<size_t>(root_count(n)));
    for (int r = 1; r <= n; ++r)
        for (int s = r; s <= 2 * n - r; ++s) roots.push_back({r, s});
    return roots;
}

// Coefficients of (r, s) over the simple roots a_1 .. a_n. The vector has the
// shape 0..0 1..1 0..0 when s <= n and 0..0 1..1 2..2 otherwise:
// ones on positions r .. min(s, 2n - s), twos on positions 2n - s + 1 .. n.
inline std::vector<int> root_to_coeffs(int n, Root a) {
    require_rank(n);
    if (!is_valid_root(n, a)) throw std::domain_error("root_to_coeffs: invalid root");
    std::vector<int> c(static_cast<size_t>(n), 0);
    if (a.s <= n) {
        for (int i = a.r; i <= a.s; ++i) c[static_cast<size_t>(i - 1)] = 1;
    } else {
        for (int i = a.r; i <= 2 * n - a.s; ++i) c[static_cast<size_t>(i - 1)] = 1;
        for (int i = 2 * n - a.s + 1; i <= n; ++i) c[static_cast<size_t>(i - 1)] = 2;
    }
    return c;
}

// Coefficients of the null root delta over a_0 .. a_n: (1, 1, 2, 2, ..., 2).
inline std::vector<int> delta_coeffs(int n) {
    require_rank(n, 2);
    std::vector<int> c(static_cast<size_t>(n + 1), 2);
    c[0] = 1;
    c[1] = 1;
    return c;
}

// (r, s) <= (r^, s^) iff r^ <= r and s^ >= s: moving up and to the right in
// the triangular diagram only ever reaches larger roots.
inline bool leq_finite(int n, Root a, Root b) {
    if (!is_valid_root(n, a) || !is_valid_root(n, b))
        throw std::domain_error("leq_finite: invalid root");
    return b.r <= a.r && b.s >= a.s;
}

// A node of the affine poset D: delta on top, the positive roots (lower copy),
// and the reflected roots delta - gamma (upper copy).
enum class NodeTag : uint8_t { Lower, Upper, Delta };

struct AffineNode {
    NodeTag tag = NodeTag::Delta;
    Root root;  // meaningful for Lower/Upper only

    static AffineNode lower(Root a) { return {NodeTag::Lower, a}; }
    static AffineNode upper(Root a) { return {NodeTag::Upper, a}; }
    static AffineNode delta() { return {NodeTag::Delta, {}}; }

    friend bool operator==(const AffineNode&, const AffineNode&) = default;
};

// Order on D. Within the lower copy the finite order applies; the upper copy
// carries the reversed order; delta dominates everything. A lower root (r, s)
// sits below delta - (r^, s^) exactly when s^ <= 2n - s, except that rows with
// r = 1 additionally require r^ > 1. No upper node sits below a lower one.
inline bool leq_affine(int n, const AffineNode& x, const AffineNode& y) {
    require_rank(n, 2);
    if (x == y) return true;
    if (y.tag == NodeTag::Delta) return true;
    if (x.tag == NodeTag::Delta) return false;
    if (x.tag == NodeTag::Lower && y.tag == NodeTag::Lower)
        return leq_finite(n, x.root, y.root);
    if (x.tag == NodeTag::Upper && y.tag == NodeTag::Upper)
        return leq_finite(n, y.root, x.root);
    if (x.tag == NodeTag::Upper) return false;  // upper below lower: never
    if (!is_valid_root(n, x.root) || !is_valid_root(n, y.root))
        throw std::domain_error("leq_affine: invalid root");
    if (x.root.r == 1 && y.root.r == 1) return false;
    return y.root.s <= 2 * n - x.root.s;
}

// Finite poset of positive roots as a concrete structure: the full order
// relation as bit rows, the cover relation, and a linear extension running
// from maximal elements down. Immutable once built; safe to share across
// threads.
template <class T>
class Poset {
  public:
    using Mask = boost::dynamic_bitset<>;

    template <class Leq>
    Poset(std::vector<T> elements, Leq&& leq) : elements_(std::move(elements)) {
        const int m = size();
        upsets_.assign(static_cast<size_t>(m), Mask(static_cast<size_t>(m)));
        std::vector<Mask> downsets(static_cast<size_t>(m), Mask(static_cast<size_t>(m)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (leq(elements_[static_cast<size_t>(i)], elements_[static_cast<size_t>(j)])) {
                    upsets_[static_cast<size_t>(i)].set(static_cast<size_t>(j));
                    downsets[static_cast<size_t>(j)].set(static_cast<size_t>(i));
                }
        build_covers(downsets);
        build_extension();
    }

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<T>& elements() const { return elements_; }
    const T& element(int i) const { return elements_[static_cast<size_t>(i)]; }

    bool leq(int i, int j) const { return upsets_[static_cast<size_t>(i)].test(static_cast<size_t>(j)); }
    const Mask& upset(int i) const { return upsets_[static_cast<size_t>(i)]; }

    // Elements covering i (immediate successors).
    const std::vector<int>& upper_covers(int i) const { return ucovers_[static_cast<size_t>(i)]; }

    std::vector<std::pair<int, int>> cover_edges() const {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < size(); ++i)
            for (int j : ucovers_[static_cast<size_t>(i)]) edges.emplace_back(i, j);
        return edges;
    }

    // Linear extension with every element preceded by all elements above it.
    const std::vector<int>& extension() const { return ext_; }

    bool is_upward_closed(const Mask& members) const {
        for (size_t i = members.find_first(); i != Mask::npos; i = members.find_next(i))
            if (!upsets_[i].is_subset_of(members)) return false;
        return true;
    }

  private:
    void build_covers(const std::vector<Mask>& downsets) {
        const int m = size();
        ucovers_.assign(static_cast<size_t>(m), {});
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j || !leq(i, j)) continue;
                // j covers i iff nothing sits strictly between them
                Mask between = upsets_[static_cast<size_t>(i)];
                between &= downsets[static_cast<size_t>(j)];
                if (between.count() == 2) ucovers_[static_cast<size_t>(i)].push_back(j);
            }
    }

    void build_extension() {
        const int m = size();
        ext_.reserve(static_cast<size_t>(m));
        std::vector<char> done(static_cast<size_t>(m), 0);
        for (int step = 0; step < m; ++step) {
            int pick = -1;
            for (int v = 0; v < m && pick < 0; ++v) {
                if (done[static_cast<size_t>(v)]) continue;
                bool ready = true;
                for (int u : ucovers_[static_cast<size_t>(v)])
                    if (!done[static_cast<size_t>(u)]) { ready = false; break; }
                if (ready) pick = v;
            }
            if (pick < 0) throw std::logic_error("Poset: cover relation is cyclic");
            done[static_cast<size_t>(pick)] = 1;
            ext_.push_back(pick);
        }
    }

    std::vector<T> elements_;
    std::vector<Mask> upsets_;
    std::vector<std::vector<int>> ucovers_;
    std::vector<int> ext_;
};

inline Poset<Root> finite_poset(int n) {
    require_rank(n);
    return Poset<Root>(positive_roots(n), [n](Root a, Root b) { return leq_finite(n, a, b); });
}

// Index layout of the affine poset D \ {delta}: first the n^2 lower roots in
// row-major order, then the n^2 upper nodes keyed by the subtracted root in
// the same order.
inline int lower_index(int n, Root a) { return root_index(n, a); }
inline int upper_index(int n, Root a) { return n * n + root_index(n, a); }

inline Poset<AffineNode> affine_poset(int n) {
    require_rank(n, 2);
    std::vector<AffineNode> nodes;
    nodes.reserve(static_cast<size_t>(2 * n * n));
    for (Root a : positive_roots(n)) nodes.push_back(AffineNode::lower(a));
    for (Root a : positive_roots(n)) nodes.push_back(AffineNode::upper(a));
    return Poset<AffineNode>(std::move(nodes), [n](const AffineNode& x, const AffineNode& y) {
        return leq_affine(n, x, y);
    });
}

// Shared per-rank instance for hot paths (admissibility checks build none of
// their own). Built once under a lock, then read-only.
inline const Poset<AffineNode>& affine_poset_cached(int n) {
    static std::mutex guard;
    static std::map<int, std::unique_ptr<Poset<AffineNode>>> cache;
    std::lock_guard<std::mutex> lock(guard);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Poset<AffineNode>>(affine_poset(n));
    return *slot;
}

namespace detail {

// Backtracking over the linear extension, maximal elements first. At each
// element the branch excluding it is always open; the branch including it is
// open only when every upper cover is already in. Each leaf is one coideal,
// so the walk is output-sensitive.
template <class T, class Visit>
void coideal_walk(const Poset<T>& poset, typename Poset<T>::Mask& members, size_t depth,
                  Visit&& visit) {
    const auto& ext = poset.extension();
    if (depth == ext.size()) {
        visit(std::as_const(members));
        return;
    }
    int e = ext[depth];
    coideal_walk(poset, members, depth + 1, visit);
    for (int u : poset.upper_covers(e))
        if (!members.test(static_cast<size_t>(u))) return;
    members.set(static_cast<size_t>(e));
    coideal_walk(poset, members, depth + 1, visit);
    members.reset(static_cast<size_t>(e));
}

}  // namespace detail

// Visits every coideal (upward-closed subset) of the poset exactly once,
// including the empty and full ones. The mask passed to the visitor uses the
// poset's element indexing and is only valid during the call.
template <class T, class Visit>
void for_each_coideal(const Poset<T>& poset, Visit&& visit) {
    typename Poset<T>::Mask members(static_cast<size_t>(poset.size()));
    detail::coideal_walk(poset, members, 0, visit);
}

namespace detail {

template <class T>
uint64_t count_coideals_from(const Poset<T>& poset, typename Poset<T>::Mask& members,
                             size_t depth) {
    const auto& ext = poset.extension();
    if (depth == ext.size()) return 1;
    int e = ext[depth];
    uint64_t total = count_coideals_from(poset, members, depth + 1);
    bool can_include = true;
    for (int u : poset.upper_covers(e))
        if (!members.test(static_cast<size_t>(u))) { can_include = false; break; }
    if (can_include) {
        members.set(static_cast<size_t>(e));
        total += count_coideals_from(poset, members, depth + 1);
        members.reset(static_cast<size_t>(e));
    }
    return total;
}

}  // namespace detail

// Counts coideals. With threads > 1 the decision tree is split at a fixed
// prefix depth into independent subtree tasks; workers then count their
// subtrees with no shared state beyond the task queue.
template <class T>
Count count_coideals(const Poset<T>& poset, int threads = 1) {
    using Mask = typename Poset<T>::Mask;
    if (threads <= 1 || poset.size() < 16) {
        Mask members(static_cast<size_t>(poset.size()));
        return Count(detail::count_coideals_from(poset, members, 0));
    }

    const size_t want = static_cast<size_t>(threads) * 8;
    std::vector<Mask> tasks{Mask(static_cast<size_t>(poset.size()))};
    size_t depth = 0;
    const auto& ext = poset.extension();
    while (depth < ext.size() && tasks.size() < want) {
        int e = ext[depth];
        std::vector<Mask> next;
        next.reserve(tasks.size() * 2);
        for (auto& members : tasks) {
            next.push_back(members);  // exclude e
            bool can_include = true;
            for (int u : poset.upper_covers(e))
                if (!members.test(static_cast<size_t>(u))) { can_include = false; break; }
            if (can_include) {
                Mask with = members;
                with.set(static_cast<size_t>(e));
                next.push_back(std::move(with));
            }
        }
        tasks = std::move(next);
        ++depth;
    }

    std::atomic<size_t> cursor{0};
    std::vector<uint64_t> partial(static_cast<size_t>(threads), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (;;) {
                size_t i = cursor.fetch_add(1);
                if (i >= tasks.size()) break;
                Mask members = tasks[i];
                partial[static_cast<size_t>(t)] +=
                    detail::count_coideals_from(poset, members, depth);
            }
        });
    for (auto& th : pool) th.join();

    Count total = 0;
    for (uint64_t c : partial) total += c;
    return total;
}

// Grid placement of the doubled board. Lower root (i, j) owns the unit box
// with northwest corner (j-1, -(i-1)); the upper node delta - (r, s) owns the
// box with northwest corner (2n-s-1, r+1). Cell order matches the affine
// poset's element order.
struct BoardCell {
    AffineNode node;
    int x = 0;
    int y = 0;
};

inline std::vector<BoardCell> board_cells(int n) {
    require_rank(n, 2);
    std::vector<BoardCell> cells;
    cells.reserve(static_cast<size_t>(2 * n * n));
    for (Root a : positive_roots(n))
        cells.push_back({AffineNode::lower(a), a.s - 1, -(a.r - 1)});
    for (Root a : positive_roots(n))
        cells.push_back({AffineNode::upper(a), 2 * n - a.s - 1, a.r + 1});
    return cells;
}

}  // namespace bideal
