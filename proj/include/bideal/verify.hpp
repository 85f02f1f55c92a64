#pragma once

#include <bideal/basic_ideals.hpp>
#include <bideal/bpaths.hpp>
#include <bideal/count.hpp>
#include <bideal/identities.hpp>
#include <bideal/root_poset.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace bideal::verify {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // first counterexample when failing
};

struct Options {
    int n_max = 0;           // 0: run every check at its stated range
    int threads = 1;         // workers for the brute-force counts
    std::uint64_t random_pairs = 100000;
    std::uint64_t seed = 20240817;
};

inline int capped(const Options& options, int stated) {
    if (options.n_max <= 0) return stated;
    return std::min(stated, options.n_max);
}

namespace detail {

inline std::string root_str(Root a) {
    return "(" + std::to_string(a.r) + "," + std::to_string(a.s) + ")";
}

inline std::string node_str(const AffineNode& x) {
    switch (x.tag) {
        case NodeTag::Lower: return root_str(x.root);
        case NodeTag::Upper: return "d-" + root_str(x.root);
        default: return "delta";
    }
}

// Coefficients over a_0 .. a_n, the oracle route for both orders.
inline std::vector<int> affine_node_coeffs(int n, const AffineNode& x) {
    std::vector<int> d = delta_coeffs(n);
    if (x.tag == NodeTag::Delta) return d;
    std::vector<int> c = root_to_coeffs(n, x.root);
    std::vector<int> out(static_cast<size_t>(n + 1), 0);
    if (x.tag == NodeTag::Lower) {
        for (int i = 0; i < n; ++i) out[static_cast<size_t>(i + 1)] = c[static_cast<size_t>(i)];
    } else {
        out = d;
        for (int i = 0; i < n; ++i) out[static_cast<size_t>(i + 1)] -= c[static_cast<size_t>(i)];
    }
    return out;
}

inline bool coeff_leq(const std::vector<int>& u, const std::vector<int>& v) {
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

// Dyck path statistics measured by enumeration: counts[h][k] = number of
// semilength-n Dyck paths with first peak h and last peak k.
inline std::vector<std::vector<uint64_t>> dyck_peak_table(int n) {
    std::vector<std::vector<uint64_t>> counts(static_cast<size_t>(n + 1),
                                              std::vector<uint64_t>(static_cast<size_t>(n + 1), 0));
    std::vector<char> word(static_cast<size_t>(2 * n), 0);  // 0 = r, 1 = f
    auto record = [&] {
        int first = 0;
        while (!word[static_cast<size_t>(first)]) ++first;  // leading r run
        int last = 0;
        while (word[static_cast<size_t>(2 * n - 1 - last)]) ++last;  // trailing f run
        ++counts[static_cast<size_t>(first)][static_cast<size_t>(last)];
    };
    std::function<void(int, int, int)> rec = [&](int pos, int ups, int height) {
        if (pos == 2 * n) {
            if (height == 0) record();
            return;
        }
        if (ups < n) {
            word[static_cast<size_t>(pos)] = 0;
            rec(pos + 1, ups + 1, height + 1);
        }
        if (height > 0) {
            word[static_cast<size_t>(pos)] = 1;
            rec(pos + 1, ups, height - 1);
            word[static_cast<size_t>(pos)] = 0;
        }
    };
    rec(0, 0, 0);
    return counts;
}

// Binomial oracle over a different route than the library's Pascal rows.
inline Count product_binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Count num = 1, den = 1;
    for (long long i = 1; i <= b; ++i) {
        num *= a - b + i;
        den *= i;
    }
    return num / den;
}

inline uint64_t bpath_total_u64(int n) {
    return binomial(2 * n, n).convert_to<uint64_t>();
}

inline BPath sample_bpath(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> dist(0, bpath_total_u64(n) - 1);
    return unrank_bpath(n, dist(rng));
}

// Upper half of the decoded pair, as a mask over upper indices only.
inline AffineMask upper_half(int n, const BPath& q) {
    AffineMask whole = decode_pair_mask(n, BPath::from_bits(n, 0), q);
    AffineMask upper(whole.size());
    for (size_t i = static_cast<size_t>(n) * static_cast<size_t>(n); i < whole.size(); ++i)
        if (whole.test(i)) upper.set(i);
    return upper;
}

template <class T>
std::vector<std::pair<int, int>> reduction_by_triples(const Poset<T>& poset) {
    std::vector<std::pair<int, int>> edges;
    const int m = poset.size();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j || !poset.leq(i, j)) continue;
            bool direct = true;
            for (int k = 0; k < m && direct; ++k)
                if (k != i && k != j && poset.leq(i, k) && poset.leq(k, j)) direct = false;
            if (direct) edges.emplace_back(i, j);
        }
    return edges;
}

}  // namespace detail

// ---------------------------------------------------------------- orders ---

inline std::vector<CheckResult> order_checks(const Options& options) {
    std::vector<CheckResult> out;
    const int top = capped(options, 8);

    CheckResult finite{"finite order matches coefficient-vector comparison (n=2.." +
                       std::to_string(top) + ")"};
    for (int n = 2; n <= top && finite.pass; ++n) {
        const auto roots = positive_roots(n);
        for (const Root& a : roots) {
            for (const Root& b : roots) {
                bool by_index = leq_finite(n, a, b);
                bool by_coeffs = detail::coeff_leq(root_to_coeffs(n, a), root_to_coeffs(n, b));
                if (by_index != by_coeffs) {
                    finite.pass = false;
                    finite.detail = "n=" + std::to_string(n) + " a=" + detail::root_str(a) +
                                    " b=" + detail::root_str(b);
                    break;
                }
            }
            if (!finite.pass) break;
        }
    }
    out.push_back(std::move(finite));

    CheckResult affine{"affine order matches coefficient-vector comparison (n=2.." +
                       std::to_string(top) + ")"};
    for (int n = 2; n <= top && affine.pass; ++n) {
        std::vector<AffineNode> nodes;
        for (Root a : positive_roots(n)) nodes.push_back(AffineNode::lower(a));
        for (Root a : positive_roots(n)) nodes.push_back(AffineNode::upper(a));
        nodes.push_back(AffineNode::delta());
        for (const AffineNode& x : nodes) {
            for (const AffineNode& y : nodes) {
                bool by_index = leq_affine(n, x, y);
                bool by_coeffs = x == y || detail::coeff_leq(detail::affine_node_coeffs(n, x),
                                                            detail::affine_node_coeffs(n, y));
                if (by_index != by_coeffs) {
                    affine.pass = false;
                    affine.detail = "n=" + std::to_string(n) + " x=" + detail::node_str(x) +
                                    " y=" + detail::node_str(y);
                    break;
                }
            }
            if (!affine.pass) break;
        }
    }
    out.push_back(std::move(affine));

    CheckResult laws{"affine order restricts to the two copies as expected (n=2.." +
                     std::to_string(top) + ")"};
    for (int n = 2; n <= top && laws.pass; ++n) {
        const auto roots = positive_roots(n);
        for (const Root& a : roots) {
            for (const Root& b : roots) {
                AffineNode la = AffineNode::lower(a), lb = AffineNode::lower(b);
                AffineNode ua = AffineNode::upper(a), ub = AffineNode::upper(b);
                bool ok = leq_affine(n, la, lb) == leq_finite(n, a, b) &&
                          leq_affine(n, ua, ub) == leq_finite(n, b, a) &&
                          !leq_affine(n, ua, lb) && leq_affine(n, la, AffineNode::delta()) &&
                          leq_affine(n, ua, AffineNode::delta());
                if (!ok) {
                    laws.pass = false;
                    laws.detail = "n=" + std::to_string(n) + " a=" + detail::root_str(a) +
                                  " b=" + detail::root_str(b);
                    break;
                }
            }
            if (!laws.pass) break;
        }
    }
    out.push_back(std::move(laws));
    return out;
}

// ---------------------------------------------------------------- posets ---

inline std::vector<CheckResult> poset_checks(const Options& options) {
    std::vector<CheckResult> out;
    const int top_sizes = capped(options, 8);

    CheckResult sizes{"root counts: n^2 roots in rows of 2n-2r+1 (n=2.." +
                      std::to_string(top_sizes) + ")"};
    for (int n = 2; n <= top_sizes && sizes.pass; ++n) {
        const auto roots = positive_roots(n);
        std::vector<int> rows(static_cast<size_t>(n + 1), 0);
        for (const Root& a : roots) ++rows[static_cast<size_t>(a.r)];
        bool ok = static_cast<int>(roots.size()) == n * n &&
                  affine_poset(n).size() == 2 * n * n;
        for (int r = 1; r <= n; ++r) ok = ok && rows[static_cast<size_t>(r)] == 2 * n - 2 * r + 1;
        if (!ok) {
            sizes.pass = false;
            sizes.detail = "n=" + std::to_string(n);
        }
    }
    out.push_back(std::move(sizes));

    const int top_laws = capped(options, 6);
    CheckResult laws{"posets are reflexive, antisymmetric, transitive (n=2.." +
                     std::to_string(top_laws) + ")"};
    auto check_laws = [&](const auto& poset, int n, const char* which) {
        const int m = poset.size();
        for (int i = 0; i < m; ++i) {
            if (!poset.leq(i, i)) {
                laws.pass = false;
                laws.detail = std::string(which) + " n=" + std::to_string(n) + ": not reflexive";
                return;
            }
            for (size_t j = poset.upset(i).find_first(); j != AffineMask::npos;
                 j = poset.upset(i).find_next(j)) {
                if (static_cast<int>(j) != i && poset.leq(static_cast<int>(j), i)) {
                    laws.pass = false;
                    laws.detail = std::string(which) + " n=" + std::to_string(n) +
                                  ": not antisymmetric";
                    return;
                }
                if (!poset.upset(static_cast<int>(j)).is_subset_of(poset.upset(i))) {
                    laws.pass = false;
                    laws.detail = std::string(which) + " n=" + std::to_string(n) +
                                  ": not transitive";
                    return;
                }
            }
        }
    };
    for (int n = 2; n <= top_laws && laws.pass; ++n) {
        check_laws(finite_poset(n), n, "finite");
        if (laws.pass) check_laws(affine_poset(n), n, "affine");
    }
    out.push_back(std::move(laws));

    const int top_red = capped(options, 4);
    CheckResult covers{"cover lists equal an independently recomputed reduction (n=2.." +
                       std::to_string(top_red) + ")"};
    for (int n = 2; n <= top_red && covers.pass; ++n) {
        auto check_one = [&](const auto& poset, const char* which) {
            auto expected = detail::reduction_by_triples(poset);
            auto actual = poset.cover_edges();
            std::set<std::pair<int, int>> e(expected.begin(), expected.end());
            std::set<std::pair<int, int>> a(actual.begin(), actual.end());
            if (e != a) {
                covers.pass = false;
                covers.detail = std::string(which) + " n=" + std::to_string(n);
            }
        };
        check_one(finite_poset(n), "finite");
        if (covers.pass) check_one(affine_poset(n), "affine");
    }
    out.push_back(std::move(covers));

    CheckResult ext{"linear extension lists every element after its superiors (n=2.." +
                    std::to_string(top_laws) + ")"};
    for (int n = 2; n <= top_laws && ext.pass; ++n) {
        const auto poset = affine_poset(n);
        std::vector<int> position(static_cast<size_t>(poset.size()), 0);
        for (size_t t = 0; t < poset.extension().size(); ++t)
            position[static_cast<size_t>(poset.extension()[t])] = static_cast<int>(t);
        for (int i = 0; i < poset.size() && ext.pass; ++i)
            for (int j = 0; j < poset.size(); ++j)
                if (i != j && poset.leq(i, j) &&
                    position[static_cast<size_t>(j)] > position[static_cast<size_t>(i)]) {
                    ext.pass = false;
                    ext.detail = "n=" + std::to_string(n);
                    break;
                }
    }
    out.push_back(std::move(ext));

    if (capped(options, 4) >= 4) {
        CheckResult fig{"rank-4 cover diagram matches the doubled-board pattern"};
        const int n = 4;
        const auto poset = affine_poset(n);
        std::set<std::pair<int, int>> expected;
        for (Root a : positive_roots(n)) {
            if (a.s + 1 <= 2 * n - a.r)
                expected.insert({lower_index(n, a), lower_index(n, {a.r, a.s + 1})});
            if (a.r >= 2) expected.insert({lower_index(n, a), lower_index(n, {a.r - 1, a.s})});
            if (a.s - 1 >= a.r)
                expected.insert({upper_index(n, a), upper_index(n, {a.r, a.s - 1})});
            if (a.r + 1 <= a.s && a.s <= 2 * n - (a.r + 1))
                expected.insert({upper_index(n, a), upper_index(n, {a.r + 1, a.s})});
        }
        for (int j = 2; j <= 6; ++j) {
            expected.insert({lower_index(n, {1, j}), upper_index(n, {2, 2 * n - j})});
            expected.insert({lower_index(n, {2, j}), upper_index(n, {1, 2 * n - j})});
        }
        auto actual_edges = poset.cover_edges();
        std::set<std::pair<int, int>> actual(actual_edges.begin(), actual_edges.end());
        if (actual != expected) {
            fig.pass = false;
            fig.detail = "edge sets differ: expected " + std::to_string(expected.size()) +
                         ", got " + std::to_string(actual.size());
        }
        out.push_back(std::move(fig));
    }
    return out;
}

// -------------------------------------------------------------- coideals ---

inline std::vector<CheckResult> coideal_checks(const Options& options) {
    std::vector<CheckResult> out;

    CheckResult antichain{"coideal count of a k-antichain is 2^k (k=1..12)"};
    for (int k = 1; k <= 12 && antichain.pass; ++k) {
        std::vector<int> elems(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) elems[static_cast<size_t>(i)] = i;
        Poset<int> poset(elems, [](int a, int b) { return a == b; });
        if (count_coideals(poset) != pow2(k)) {
            antichain.pass = false;
            antichain.detail = "k=" + std::to_string(k);
        }
    }
    out.push_back(std::move(antichain));

    CheckResult chain{"coideal count of a k-chain is k+1 (k=1..12)"};
    for (int k = 1; k <= 12 && chain.pass; ++k) {
        std::vector<int> elems(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) elems[static_cast<size_t>(i)] = i;
        Poset<int> poset(elems, [](int a, int b) { return a <= b; });
        if (count_coideals(poset) != Count(k + 1)) {
            chain.pass = false;
            chain.detail = "k=" + std::to_string(k);
        }
    }
    out.push_back(std::move(chain));

    const int top_fin = capped(options, 6);
    CheckResult finite{"finite poset has C(2n,n) coideals (n=2.." + std::to_string(top_fin) + ")"};
    for (int n = 2; n <= top_fin && finite.pass; ++n)
        if (count_coideals(finite_poset(n)) != binomial(2 * n, n)) {
            finite.pass = false;
            finite.detail = "n=" + std::to_string(n);
        }
    out.push_back(std::move(finite));

    const int top_closed = capped(options, 5);
    CheckResult closed{"every enumerated coideal is upward-closed (finite n<=" +
                       std::to_string(top_closed) + ", affine n<=3)"};
    for (int n = 2; n <= top_closed && closed.pass; ++n) {
        const auto poset = finite_poset(n);
        for_each_coideal(poset, [&](const AffineMask& mask) {
            if (!poset.is_upward_closed(mask)) {
                closed.pass = false;
                closed.detail = "finite n=" + std::to_string(n);
            }
        });
    }
    for (int n = 2; n <= std::min(3, capped(options, 3)) && closed.pass; ++n) {
        const auto poset = affine_poset(n);
        for_each_coideal(poset, [&](const AffineMask& mask) {
            if (!poset.is_upward_closed(mask)) {
                closed.pass = false;
                closed.detail = "affine n=" + std::to_string(n);
            }
        });
    }
    out.push_back(std::move(closed));

    CheckResult parallel{"parallel coideal count agrees with sequential"};
    for (int n = 2; n <= std::min(4, capped(options, 4)) && parallel.pass; ++n) {
        const auto poset = affine_poset(n);
        if (count_coideals(poset, 1) != count_coideals(poset, 3)) {
            parallel.pass = false;
            parallel.detail = "n=" + std::to_string(n);
        }
    }
    out.push_back(std::move(parallel));

    CheckResult rank2{"rank-2 affine poset has 24 coideals"};
    if (count_coideals(affine_poset(2)) != 24) {
        rank2.pass = false;
        rank2.detail = "got " + count_coideals(affine_poset(2)).str();
    }
    out.push_back(std::move(rank2));
    return out;
}

// ---------------------------------------------------------------- bpaths ---

inline std::vector<CheckResult> bpath_checks(const Options& options) {
    std::vector<CheckResult> out;
    const int top = capped(options, 7);

    CheckResult counts{"B-path enumeration yields C(2n,n) distinct valid words (n=1.." +
                       std::to_string(top) + ")"};
    for (int n = 1; n <= top && counts.pass; ++n) {
        std::set<std::string> seen;
        uint64_t total = 0;
        bool valid = true;
        for_each_bpath(n, [&](const BPath& p) {
            ++total;
            seen.insert(p.str());
            valid = valid && is_bpath(p.str(), n);
        });
        if (!valid || Count(total) != bpath_count(n) || seen.size() != total) {
            counts.pass = false;
            counts.detail = "n=" + std::to_string(n);
        }
    }
    out.push_back(std::move(counts));

    CheckResult classes{"class counts match bucketed enumeration (n=2.." + std::to_string(top) +
                        ")"};
    for (int n = 2; n <= top && classes.pass; ++n) {
        std::map<int, uint64_t> first_counts;
        std::map<std::pair<int, int>, uint64_t> pair_counts;
        for_each_bpath(n, [&](const BPath& p) {
            PathClass c = classify(p);
            ++first_counts[c.first_f];
            ++pair_counts[{c.first_f, c.second_f}];
        });
        for (int i = 1; i <= 2 * n && classes.pass; ++i) {
            uint64_t seen = first_counts.count(i) ? first_counts[i] : 0;
            if (count_class_first(n, i) != Count(seen)) {
                classes.pass = false;
                classes.detail = "n=" + std::to_string(n) + " i=" + std::to_string(i);
            }
        }
        for (int i = 2; i <= 2 * n && classes.pass; ++i)
            for (int j = i + 1; j <= 2 * n + 1 && classes.pass; ++j) {
                auto it = pair_counts.find({i, j});
                uint64_t seen = it == pair_counts.end() ? 0 : it->second;
                if (count_class_pair(n, i, j) != Count(seen)) {
                    classes.pass = false;
                    classes.detail = "n=" + std::to_string(n) + " (i,j)=(" + std::to_string(i) +
                                     "," + std::to_string(j) + ")";
                }
            }
        if (classes.pass) {
            uint64_t allr = pair_counts.count({2 * n + 1, 2 * n + 2})
                                ? pair_counts[{2 * n + 1, 2 * n + 2}]
                                : 0;
            if (allr != 1) {
                classes.pass = false;
                classes.detail = "n=" + std::to_string(n) + " all-r sentinel";
            }
        }
    }
    out.push_back(std::move(classes));

    CheckResult partition{"class sizes partition C(2n,n) (n=2..12)"};
    for (int n = 2; n <= 12 && partition.pass; ++n) {
        Count by_first = 1;  // the all-r path
        for (int i = 1; i <= 2 * n; ++i) by_first += count_class_first(n, i);
        Count by_pair = 1;
        for (int i = 2; i <= 2 * n; ++i)
            for (int j = i + 1; j <= 2 * n + 1; ++j) by_pair += count_class_pair(n, i, j);
        if (by_first != binomial(2 * n, n) || by_pair != binomial(2 * n, n) ||
            count_class_first(n, 1) != 0) {
            partition.pass = false;
            partition.detail = "n=" + std::to_string(n);
        }
    }
    out.push_back(std::move(partition));

    const int top_round = capped(options, 6);
    CheckResult round{"path <-> coideal decoding is a bijection (n=2.." +
                      std::to_string(top_round) + ")"};
    for (int n = 2; n <= top_round && round.pass; ++n) {
        const auto poset = finite_poset(n);
        std::set<std::vector<Root>> images;
        for_each_bpath(n, [&](const BPath& p) {
            auto roots = path_to_coideal(p);
            AffineMask mask(static_cast<size_t>(poset.size()));
            for (Root a : roots) mask.set(static_cast<size_t>(root_index(n, a)));
            if (!poset.is_upward_closed(mask) || coideal_to_path(roots, n) != p) {
                round.pass = false;
                round.detail = "n=" + std::to_string(n) + " p=" + p.str();
            }
            images.insert(std::move(roots));
        });
        if (round.pass && Count(images.size()) != bpath_count(n)) {
            round.pass = false;
            round.detail = "n=" + std::to_string(n) + ": decode not injective";
        }
    }
    out.push_back(std::move(round));

    const int top_dyck = capped(options, 7);
    CheckResult dyck{"Dyck first/last peak formula matches enumeration (n=1.." +
                     std::to_string(top_dyck) + ")"};
    for (int n = 1; n <= top_dyck && dyck.pass; ++n) {
        auto table = detail::dyck_peak_table(n);
        for (int h = 1; h <= n && dyck.pass; ++h)
            for (int k = 1; k <= n; ++k)
                if (dyck_count_first_last(n, h, k) !=
                    Count(table[static_cast<size_t>(h)][static_cast<size_t>(k)])) {
                    dyck.pass = false;
                    dyck.detail = "n=" + std::to_string(n) + " h=" + std::to_string(h) +
                                  " k=" + std::to_string(k);
                    break;
                }
    }
    out.push_back(std::move(dyck));

    CheckResult weighted{"2^k-weighted peak sums reproduce first-f class counts (n=2..8)"};
    for (int n = 2; n <= 8 && weighted.pass; ++n)
        for (int i = 2; i <= n && weighted.pass; ++i) {
            Count sum = 0;
            for (int k = 1; k <= n - 1; ++k)
                sum += pow2(k) * dyck_count_first_last(n, i - 1, k);
            if (sum != count_class_first(n, i)) {
                weighted.pass = false;
                weighted.detail = "n=" + std::to_string(n) + " i=" + std::to_string(i);
            }
        }
    out.push_back(std::move(weighted));

    CheckResult append{"appending identity 4*C(2n,n) - 2*Cat(n) = C(2n+2,n+1) (n=1..20)"};
    for (int n = 1; n <= 20 && append.pass; ++n)
        if (4 * binomial(2 * n, n) - 2 * catalan(n) != binomial(2 * n + 2, n + 1)) {
            append.pass = false;
            append.detail = "n=" + std::to_string(n);
        }
    out.push_back(std::move(append));

    CheckResult term{"raw peak terms agree with the patched Dyck counts off the corner (n<=8)"};
    for (int n = 1; n <= 8 && term.pass; ++n)
        for (int h = 1; h <= n && term.pass; ++h)
            for (int k = 1; k <= n; ++k) {
                Count raw = dyck_peak_term(n, h, k);
                Count patched = dyck_count_first_last(n, h, k);
                bool corner = h == n && k == n;
                if ((corner && (raw != 0 || patched != 1)) || (!corner && raw != patched)) {
                    term.pass = false;
                    term.detail = "n=" + std::to_string(n) + " h=" + std::to_string(h) +
                                  " k=" + std::to_string(k);
                    break;
                }
            }
    out.push_back(std::move(term));
    return out;
}

// --------------------------------------------------------- admissibility ---

// Compares a candidate class predicate against the closure oracle on every
// ordered pair of rank n. Reused with deliberately broken predicates to prove
// the harness actually surfaces counterexamples.
inline CheckResult check_criterion_against_oracle(
    int n, const std::function<bool(int, PathClass, PathClass)>& candidate) {
    CheckResult result{"class criterion matches closure oracle (n=" + std::to_string(n) + ")"};
    const auto& poset = affine_poset_cached(n);
    const auto paths = all_bpaths(n);
    for (const BPath& p : paths) {
        for (const BPath& q : paths) {
            bool oracle = is_admissible({p, q}, poset);
            bool predicted = candidate(n, classify(p), classify(q));
            if (oracle != predicted) {
                result.pass = false;
                result.detail = "n=" + std::to_string(n) + " p=" + p.str() + " q=" + q.str() +
                                " oracle=" + (oracle ? "true" : "false") + " criterion=" +
                                (predicted ? "true" : "false");
                return result;
            }
        }
    }
    return result;
}

inline std::vector<CheckResult> admissibility_checks(const Options& options) {
    std::vector<CheckResult> out;

    const int top_exh = capped(options, 4);
    CheckResult exhaustive{"criterion = closure oracle on all pairs (n=2.." +
                           std::to_string(top_exh) + ")"};
    for (int n = 2; n <= top_exh; ++n) {
        CheckResult one = check_criterion_against_oracle(
            n, [](int rank, PathClass p, PathClass q) { return admissible_classes(rank, p, q); });
        if (!one.pass) {
            exhaustive.pass = false;
            exhaustive.detail = one.detail;
            break;
        }
    }
    out.push_back(std::move(exhaustive));

    if (capped(options, 6) >= 5) {
        const int top_rand = capped(options, 6);
        CheckResult random{"criterion = closure oracle on random pairs (n=5.." +
                           std::to_string(top_rand) + ", " +
                           std::to_string(options.random_pairs) + " each)"};
        std::mt19937_64 rng(options.seed);
        for (int n = 5; n <= top_rand && random.pass; ++n) {
            const auto& poset = affine_poset_cached(n);
            for (std::uint64_t t = 0; t < options.random_pairs; ++t) {
                BPath p = detail::sample_bpath(n, rng);
                BPath q = detail::sample_bpath(n, rng);
                if (is_admissible({p, q}, poset) != is_admissible_criterion({p, q})) {
                    random.pass = false;
                    random.detail = "n=" + std::to_string(n) + " p=" + p.str() + " q=" + q.str();
                    break;
                }
            }
        }
        out.push_back(std::move(random));
    }

    CheckResult halves{"decoded halves are upward-closed within their copies (n=2..4)"};
    for (int n = 2; n <= std::min(4, capped(options, 4)) && halves.pass; ++n) {
        const auto& poset = affine_poset_cached(n);
        const auto paths = all_bpaths(n);
        const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
        for (const BPath& p : paths) {
            for (const BPath& q : paths) {
                AffineMask mask = decode_pair_mask(n, p, q);
                AffineMask lower(mask.size()), upper(mask.size());
                for (size_t i = 0; i < nn; ++i)
                    if (mask.test(i)) lower.set(i);
                for (size_t i = nn; i < mask.size(); ++i)
                    if (mask.test(i)) upper.set(i);
                // closure of a half only involves comparabilities inside it
                AffineMask lower_all = lower;
                for (size_t i = nn; i < mask.size(); ++i) lower_all.set(i);
                AffineMask upper_ok = upper;
                if (!poset.is_upward_closed(lower_all) || !poset.is_upward_closed(upper_ok)) {
                    halves.pass = false;
                    halves.detail = "n=" + std::to_string(n) + " p=" + p.str() + " q=" + q.str();
                    break;
                }
            }
            if (!halves.pass) break;
        }
    }
    out.push_back(std::move(halves));

    const int top_bij = capped(options, 4);
    CheckResult bijection{"admissible pairs decode bijectively onto affine coideals (n=2.." +
                          std::to_string(top_bij) + ")"};
    for (int n = 2; n <= top_bij && bijection.pass; ++n) {
        const auto& poset = affine_poset_cached(n);
        const auto paths = all_bpaths(n);
        std::set<AffineMask> images;
        uint64_t admissible = 0;
        for (const BPath& p : paths)
            for (const BPath& q : paths) {
                AffineMask mask = decode_pair_mask(n, p, q);
                if (poset.is_upward_closed(mask)) {
                    ++admissible;
                    images.insert(mask);
                }
            }
        std::set<AffineMask> coideals;
        for_each_coideal(poset, [&](const AffineMask& mask) { coideals.insert(mask); });
        if (Count(admissible) != count_basic_formula(n) || images != coideals) {
            bijection.pass = false;
            bijection.detail = "n=" + std::to_string(n) + ": " + std::to_string(admissible) +
                               " admissible pairs, " + std::to_string(images.size()) +
                               " distinct images, " + std::to_string(coideals.size()) +
                               " coideals";
        }
    }
    out.push_back(std::move(bijection));

    CheckResult monotone{"admissibility is monotone in the upper coideal (random, n=3..6)"};
    {
        std::mt19937_64 rng(options.seed + 1);
        for (int n = 3; n <= std::min(6, capped(options, 6)) && monotone.pass; ++n) {
            const auto& poset = affine_poset_cached(n);
            for (int t = 0; t < 2000 && monotone.pass; ++t) {
                BPath p = detail::sample_bpath(n, rng);
                BPath q = detail::sample_bpath(n, rng);
                BPath q2 = detail::sample_bpath(n, rng);
                AffineMask uq = detail::upper_half(n, q);
                AffineMask uq2 = detail::upper_half(n, q2);
                if (!uq.is_subset_of(uq2)) continue;
                if (is_admissible({p, q}, poset) && !is_admissible({p, q2}, poset)) {
                    monotone.pass = false;
                    monotone.detail = "n=" + std::to_string(n) + " p=" + p.str() +
                                      " q=" + q.str() + " q'=" + q2.str();
                }
            }
        }
    }
    out.push_back(std::move(monotone));

    if (capped(options, 6) >= 6) {
        CheckResult worked{"rank-6 worked pair: bounds (8, 11) and minimal q"};
        auto p = BPath::parse("rrrrfrrfrffr", 6);
        auto q_good = BPath::parse("rrrrrrrrfrrr", 6);
        auto q_min = BPath::parse("rrrrrrrfrrff", 6);
        auto q_bad = BPath::parse("rrrrrrfrrrrf", 6);
        bool ok = p && q_good && q_min && q_bad;
        if (ok) {
            QAdmissibility info = admissible_q_info(*p);
            ok = classify(*p) == PathClass{5, 8} && info.first_f_min && *info.first_f_min == 8 &&
                 info.second_f_min && *info.second_f_min == 11 && info.minimal_q == *q_min &&
                 is_admissible({*p, *q_good}) && is_admissible({*p, *q_min}) &&
                 classify(*q_bad) == PathClass{7, 12} && !is_admissible({*p, *q_bad});
        }
        if (!ok) {
            worked.pass = false;
            worked.detail = "rank-6 example data disagrees";
        }
        out.push_back(std::move(worked));
    }

    CheckResult minimal{"minimal q is admissible with minimal upper part (n=2..4)"};
    for (int n = 2; n <= std::min(4, capped(options, 4)) && minimal.pass; ++n) {
        const auto& poset = affine_poset_cached(n);
        const auto paths = all_bpaths(n);
        for (const BPath& p2 : paths) {
            BPath qm = admissible_q_info(p2).minimal_q;
            if (!is_admissible({p2, qm}, poset)) {
                minimal.pass = false;
                minimal.detail = "n=" + std::to_string(n) + " p=" + p2.str();
                break;
            }
            AffineMask um = detail::upper_half(n, qm);
            for (const BPath& q2 : paths) {
                if (!is_admissible({p2, q2}, poset)) continue;
                if (!um.is_subset_of(detail::upper_half(n, q2))) {
                    minimal.pass = false;
                    minimal.detail = "n=" + std::to_string(n) + " p=" + p2.str() +
                                     " q=" + q2.str();
                    break;
                }
            }
            if (!minimal.pass) break;
        }
    }
    out.push_back(std::move(minimal));
    return out;
}

// -------------------------------------------------------------- counting ---

inline std::vector<CheckResult> counting_checks(const Options& options) {
    std::vector<CheckResult> out;

    static const char* golden[] = {"24",     "128",    "648",     "3160",   "14984",
                                   "69536",  "317264", "1427912", "6355080"};
    CheckResult gold{"closed form reproduces the published values (n=2..10)"};
    for (int n = 2; n <= 10; ++n)
        if (count_basic_formula(n) != Count(golden[n - 2])) {
            gold.pass = false;
            gold.detail = "n=" + std::to_string(n) + " got " + count_basic_formula(n).str();
            break;
        }
    out.push_back(std::move(gold));

    CheckResult cases{"case sums total the closed form (n=2..12)"};
    for (int n = 2; n <= 12 && cases.pass; ++n)
        if (case_sums(n).total() != count_basic_formula(n)) {
            cases.pass = false;
            cases.detail = "n=" + std::to_string(n);
        }
    out.push_back(std::move(cases));

    CheckResult pairs{"class-pair sums total the closed form (n=2..8)"};
    for (int n = 2; n <= 8 && pairs.pass; ++n)
        if (count_basic_pairs(n) != count_basic_formula(n)) {
            pairs.pass = false;
            pairs.detail = "n=" + std::to_string(n);
        }
    out.push_back(std::move(pairs));

    const int top_brute = capped(options, 7);
    CheckResult brute{"brute-force coideal count equals the closed form (n=2.." +
                      std::to_string(top_brute) + ")"};
    for (int n = 2; n <= top_brute && brute.pass; ++n) {
        BruteforceOptions bopts;
        bopts.threads = options.threads;
        if (count_basic_bruteforce(n, bopts) != count_basic_formula(n)) {
            brute.pass = false;
            brute.detail = "n=" + std::to_string(n);
        }
    }
    out.push_back(std::move(brute));

    const int top_bucket = std::min(3, capped(options, 3));
    CheckResult buckets{"case sums match bucketed brute-force pairs (n=2.." +
                        std::to_string(top_bucket) + ")"};
    for (int n = 2; n <= top_bucket && buckets.pass; ++n) {
        const auto& poset = affine_poset_cached(n);
        const auto paths = all_bpaths(n);
        Count s1 = 0, s2 = 0, s3 = 0, s4 = 0;
        for (const BPath& p : paths)
            for (const BPath& q : paths) {
                if (!is_admissible({p, q}, poset)) continue;
                PathClass pc = classify(p), qc = classify(q);
                const int twon = 2 * n;
                bool q_allr = qc.first_f == twon + 1;
                if (pc.first_f == twon + 1 || (pc.first_f == 2 && pc.second_f == twon + 1) ||
                    q_allr)
                    ++s4;
                else if (pc.first_f >= 3 && pc.second_f <= twon)
                    ++s1;
                else if (pc.first_f >= 3)
                    ++s2;
                else
                    ++s3;
            }
        CaseBreakdown expected = case_sums(n);
        if (s1 != expected.s1 || s2 != expected.s2 || s3 != expected.s3 || s4 != expected.s4) {
            buckets.pass = false;
            buckets.detail = "n=" + std::to_string(n) + " got (" + s1.str() + "," + s2.str() +
                             "," + s3.str() + "," + s4.str() + ")";
        }
    }
    out.push_back(std::move(buckets));

    CheckResult rec{"three-term recurrence residual vanishes (n=4..30)"};
    for (int n = 4; n <= 30 && rec.pass; ++n)
        if (recurrence_residual(n) != 0) {
            rec.pass = false;
            rec.detail = "n=" + std::to_string(n) + " residual " + recurrence_residual(n).str();
        }
    out.push_back(std::move(rec));

    CheckResult bounds{"count sits between C(2n,n) and C(2n,n)^2 (n=2..12)"};
    for (int n = 2; n <= 12 && bounds.pass; ++n) {
        Count paths = binomial(2 * n, n);
        Count value = count_basic_formula(n);
        if (value < paths || value >= paths * paths) {
            bounds.pass = false;
            bounds.detail = "n=" + std::to_string(n);
        }
    }
    out.push_back(std::move(bounds));
    return out;
}

// ------------------------------------------------------------ identities ---

inline std::vector<CheckResult> identity_checks(const Options&) {
    std::vector<CheckResult> out;

    CheckResult binom{"binomials match a product-formula oracle (a<=64)"};
    for (long long a = 0; a <= 64 && binom.pass; ++a)
        for (long long b = 0; b <= a; ++b)
            if (binomial(a, b) != detail::product_binomial(a, b)) {
                binom.pass = false;
                binom.detail = "C(" + std::to_string(a) + "," + std::to_string(b) + ")";
                break;
            }
    if (binom.pass) {
        // exercise the fallback past the memo table through the Pascal step
        if (binomial(300, 7) != binomial(299, 6) + binomial(299, 7)) {
            binom.pass = false;
            binom.detail = "fallback Pascal step at a=300";
        }
    }
    out.push_back(std::move(binom));

    CheckResult linear{"sum k*2^(n-k) closed form (n=0..40)"};
    for (long long n = 0; n <= 40 && linear.pass; ++n)
        if (!sum_k_pow2(n).holds()) {
            linear.pass = false;
            linear.detail = "n=" + std::to_string(n);
        }
    out.push_back(std::move(linear));

    CheckResult square{"sum k^2*2^(n-k) closed form (n=0..40)"};
    for (long long n = 0; n <= 40 && square.pass; ++n)
        if (!sum_k_squared_pow2(n).holds()) {
            square.pass = false;
            square.detail = "n=" + std::to_string(n);
        }
    out.push_back(std::move(square));

    CheckResult hockey{"hockey stick sums (0<=m<=n<=60)"};
    for (long long n = 0; n <= 60 && hockey.pass; ++n)
        for (long long m = 0; m <= n; ++m)
            if (!hockey_stick(m, n).holds()) {
                hockey.pass = false;
                hockey.detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                break;
            }
    out.push_back(std::move(hockey));

    CheckResult transform{"2^l binomial transform (0<=B<=A<=80)"};
    for (long long A = 0; A <= 80 && transform.pass; ++A)
        for (long long B = 0; B <= A; ++B)
            if (!pow2_binomial_transform(A, B).holds()) {
                transform.pass = false;
                transform.detail = "A=" + std::to_string(A) + " B=" + std::to_string(B);
                break;
            }
    out.push_back(std::move(transform));

    CheckResult prefix{"quadratic partial sums (b<=30)"};
    for (long long b = 0; b <= 30 && prefix.pass; ++b)
        if (!quadratic_pow2_prefix(b).holds()) {
            prefix.pass = false;
            prefix.detail = "b=" + std::to_string(b);
        }
    out.push_back(std::move(prefix));

    CheckResult window{"shifted quadratic partial sums (b<=30, n=2..30)"};
    for (long long b = 0; b <= 30 && window.pass; ++b)
        for (long long n = 2; n <= 30; ++n)
            if (!quadratic_pow2_window(b, n).holds()) {
                window.pass = false;
                window.detail = "b=" + std::to_string(b) + " n=" + std::to_string(n);
                break;
            }
    out.push_back(std::move(window));

    CheckResult tail{"combined tail sums (n=2..30)"};
    for (long long n = 2; n <= 30 && tail.pass; ++n)
        if (!combined_tail_sum(n).holds()) {
            tail.pass = false;
            tail.detail = "n=" + std::to_string(n);
        }
    out.push_back(std::move(tail));
    return out;
}

inline std::vector<CheckResult> run_all(const Options& options) {
    std::vector<CheckResult> all;
    for (auto&& group : {order_checks(options), poset_checks(options), coideal_checks(options),
                         bpath_checks(options), admissibility_checks(options),
                         counting_checks(options), identity_checks(options)})
        all.insert(all.end(), group.begin(), group.end());
    return all;
}

}  // namespace bideal::verify
