#include <bideal/basic_ideals.hpp>
#include <bideal/verify.hpp>

#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"

using namespace bideal;

namespace {

BPath path(const char* word, int n) {
    auto p = BPath::parse(word, n);
    REQUIRE(p);
    return *p;
}

}  // namespace

TEST_CASE("pair rank") {
    PathPair ok{path("rrrf", 2), path("rrfr", 2)};
    CHECK(ok.rank() == 2);
    PathPair bad{path("rrrf", 2), path("rrrrrf", 3)};
    CHECK_THROWS_AS(bad.rank(), std::domain_error);
}

TEST_CASE("decoded pair for the worked rank-4 example") {
    const int n = 4;
    auto mask = decode_pair_mask(n, path("rrrfrfrr", 4), path("rrrrrrff", 4));

    const std::vector<Root> lower = {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 4}, {2, 5}, {2, 6}};
    const std::vector<Root> upper_excluded = {{1, 6}, {1, 7}, {2, 6}};
    size_t expected_bits = lower.size() + 16 - upper_excluded.size();
    CHECK(mask.count() == expected_bits);
    for (const Root& a : lower) REQUIRE(mask.test(static_cast<size_t>(lower_index(n, a))));
    for (const Root& a : positive_roots(n)) {
        bool excluded = std::find(upper_excluded.begin(), upper_excluded.end(), a) !=
                        upper_excluded.end();
        REQUIRE(mask.test(static_cast<size_t>(upper_index(n, a))) == !excluded);
    }

    auto nodes = pair_to_affine_coideal({path("rrrfrfrr", 4), path("rrrrrrff", 4)});
    REQUIRE(nodes.size() == expected_bits);
    CHECK(nodes.front() == AffineNode::lower({1, 3}));
    CHECK(nodes.back() == AffineNode::upper({4, 4}));
}

TEST_CASE("admissibility oracle on frozen pairs") {
    CHECK(is_admissible({path("rrrfrfrr", 4), path("rrrrrrff", 4)}));
    CHECK(is_admissible({path("rrrrrrrr", 4), path("rrrrrrrr", 4)}));
    CHECK(is_admissible({path("rfrfrfrf", 4), path("rrrrrrrf", 4)}));
    CHECK_FALSE(is_admissible({path("rfrfrfrf", 4), path("rrrrrrfr", 4)}));
    CHECK_FALSE(is_admissible({path("rrrfrfrr", 4), path("rrrrfrrf", 4)}));
    CHECK(is_admissible({path("rrrrfrrfrffr", 6), path("rrrrrrrrfrrr", 6)}));
    CHECK_FALSE(is_admissible({path("rrrrfrrfrffr", 6), path("rrrrrrfrrrrf", 6)}));
}

TEST_CASE("criterion equals the closure oracle") {
    for (int n = 2; n <= 3; ++n) {
        const auto& poset = affine_poset_cached(n);
        const auto paths = all_bpaths(n);
        for (const BPath& p : paths)
            for (const BPath& q : paths)
                REQUIRE(is_admissible({p, q}, poset) == is_admissible_criterion({p, q}));
    }
}

TEST_CASE("oracle comparison flags a broken predicate") {
    auto check = verify::check_criterion_against_oracle(
        2, [](int, PathClass, PathClass) { return true; });
    CHECK_FALSE(check.pass);
    CHECK_FALSE(check.detail.empty());

    auto good = verify::check_criterion_against_oracle(
        2, [](int n, PathClass p, PathClass q) { return admissible_classes(n, p, q); });
    CHECK(good.pass);
}

TEST_CASE("class criterion spot values") {
    CHECK(admissible_classes(4, {4, 6}, {7, 8}));
    CHECK(admissible_classes(4, {4, 6}, {6, 8}));
    CHECK_FALSE(admissible_classes(4, {4, 6}, {5, 9}));
    CHECK_FALSE(admissible_classes(4, {4, 6}, {6, 7}));
    CHECK(admissible_classes(2, {2, 4}, {4, 5}));
    CHECK_FALSE(admissible_classes(2, {2, 4}, {3, 5}));
    CHECK_FALSE(admissible_classes(2, {2, 4}, {3, 4}));
    CHECK(admissible_classes(2, {2, 5}, {2, 5}));
    CHECK_FALSE(admissible_classes(2, {2, 5}, {2, 4}));
    CHECK(admissible_classes(2, {5, 6}, {2, 3}));
    CHECK(admissible_classes(3, {3, 7}, {5, 7}));
    CHECK_FALSE(admissible_classes(3, {3, 7}, {4, 6}));
}

TEST_CASE("admissible pairs decode onto all affine coideals") {
    for (int n = 2; n <= 3; ++n) {
        const auto& poset = affine_poset_cached(n);
        const auto paths = all_bpaths(n);
        std::set<AffineMask> images;
        Count admissible = 0;
        for (const BPath& p : paths)
            for (const BPath& q : paths)
                if (is_admissible({p, q}, poset)) {
                    ++admissible;
                    images.insert(decode_pair_mask(n, p, q));
                }
        REQUIRE(admissible == count_basic_formula(n));
        REQUIRE(Count(images.size()) == admissible);
        REQUIRE(Count(images.size()) == count_coideals(poset));
    }
}

TEST_CASE("closed form golden values") {
    const Count expected[] = {24,     128,     648,     3160,   14984,
                             69536,  317264,  1427912, 6355080};
    for (int n = 2; n <= 10; ++n) REQUIRE(count_basic_formula(n) == expected[n - 2]);
}

TEST_CASE("case sums") {
    auto c2 = case_sums(2);
    CHECK(c2.s1 == 1);
    CHECK(c2.s2 == 8);
    CHECK(c2.s3 == 1);
    CHECK(c2.s4 == 14);
    CHECK(c2.total() == 24);
    auto c3 = case_sums(3);
    CHECK(c3.s1 == 27);
    CHECK(c3.s2 == 48);
    CHECK(c3.s3 == 9);
    CHECK(c3.s4 == 44);
    CHECK(c3.total() == 128);
    for (int n = 2; n <= 12; ++n) REQUIRE(case_sums(n).total() == count_basic_formula(n));
}

TEST_CASE("class-pair count") {
    for (int n = 2; n <= 10; ++n) REQUIRE(count_basic_pairs(n) == count_basic_formula(n));
}

TEST_CASE("brute force count") {
    CHECK(count_basic_bruteforce(2) == 24);
    CHECK(count_basic_bruteforce(3) == 128);
    CHECK(count_basic_bruteforce(4) == 648);
    BruteforceOptions threaded;
    threaded.threads = 3;
    CHECK(count_basic_bruteforce(4, threaded) == 648);
    BruteforceOptions tight;
    tight.cap = 100;
    CHECK_THROWS_AS(count_basic_bruteforce(3, tight), resource_limit_error);
    CHECK_THROWS_WITH(count_basic_bruteforce(3, tight),
                      Catch::Matchers::ContainsSubstring("exceeds cap 100"));
}

TEST_CASE("recurrence residual") {
    for (int n = 4; n <= 30; ++n) REQUIRE(recurrence_residual(n) == 0);
    CHECK(count_basic_formula(5) - 8 * count_basic_formula(4) + 16 * count_basic_formula(3) ==
          24);
}

TEST_CASE("q admissibility info for the rank-6 example") {
    auto info = admissible_q_info(path("rrrrfrrfrffr", 6));
    CHECK(info.p_class == PathClass{5, 8});
    REQUIRE(info.first_f_min);
    CHECK(*info.first_f_min == 8);
    REQUIRE(info.second_f_min);
    CHECK(*info.second_f_min == 11);
    CHECK_FALSE(info.max_f_count);
    CHECK(info.minimal_q == path("rrrrrrrfrrff", 6));
}

TEST_CASE("q admissibility info in the other regimes") {
    auto allr = admissible_q_info(path("rrrr", 2));
    CHECK(allr.p_class == PathClass{5, 6});
    CHECK_FALSE(allr.first_f_min);
    CHECK_FALSE(allr.second_f_min);
    CHECK_FALSE(allr.max_f_count);
    CHECK(allr.minimal_q == path("rfrf", 2));

    auto full = admissible_q_info(path("rfrfrf", 3));
    CHECK(full.minimal_q == path("rrrrrf", 3));
    REQUIRE(full.max_f_count);
    CHECK(*full.max_f_count == 1);
    REQUIRE(full.first_f_min);
    CHECK(*full.first_f_min == 6);

    auto single = admissible_q_info(path("rrfrrr", 3));
    CHECK(single.p_class == PathClass{3, 7});
    CHECK_FALSE(single.first_f_min);
    REQUIRE(single.second_f_min);
    CHECK(*single.second_f_min == 7);
}

TEST_CASE("minimal q is admissible and below every admissible q") {
    for (int n = 2; n <= 4; ++n) {
        const auto& poset = affine_poset_cached(n);
        const auto paths = all_bpaths(n);
        const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
        const BPath all_r = paths.front();
        auto upper_half = [&](const BPath& q) {
            AffineMask whole = decode_pair_mask(n, all_r, q);
            AffineMask upper(whole.size());
            for (size_t i = nn; i < whole.size(); ++i)
                if (whole.test(i)) upper.set(i);
            return upper;
        };
        for (const BPath& p : paths) {
            BPath qm = admissible_q_info(p).minimal_q;
            REQUIRE(is_admissible({p, qm}, poset));
            auto um = upper_half(qm);
            for (const BPath& q : paths) {
                if (!is_admissible({p, q}, poset)) continue;
                REQUIRE(um.is_subset_of(upper_half(q)));
            }
        }
    }
}

TEST_CASE("criterion in terms of the q info bounds") {
    for (int n = 2; n <= 4; ++n) {
        const auto paths = all_bpaths(n);
        for (const BPath& p : paths) {
            auto info = admissible_q_info(p);
            for (const BPath& q : paths) {
                PathClass qc = classify(q);
                bool by_bounds = true;
                if (info.first_f_min && qc.first_f < *info.first_f_min) by_bounds = false;
                if (info.second_f_min && qc.second_f < *info.second_f_min) by_bounds = false;
                if (info.max_f_count && q.f_count() > *info.max_f_count) by_bounds = false;
                REQUIRE(by_bounds == is_admissible_criterion({p, q}));
            }
        }
    }
}
