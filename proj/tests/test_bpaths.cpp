#include <bideal/bpaths.hpp>

#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "oracles.hpp"

using namespace bideal;

TEST_CASE("parsing accepts dominant words") {
    auto p = BPath::parse("rrfrff", 3);
    REQUIRE(p);
    CHECK(p->rank() == 3);
    CHECK(p->length() == 6);
    CHECK(p->str() == "rrfrff");
    CHECK(p->f_count() == 3);
    CHECK(p->f_positions() == std::vector<int>{3, 5, 6});
    CHECK(p->f_position(1) == 3);
    CHECK(p->f_position(2) == 5);
    CHECK(p->f_position(4) == 0);
    CHECK(p->f_at(3));
    CHECK_FALSE(p->f_at(4));
}

TEST_CASE("parsing rejects bad words") {
    std::string message;
    CHECK_FALSE(BPath::parse("rrr", 2, &message));
    CHECK(message.find("letters") != std::string::npos);
    CHECK_FALSE(BPath::parse("rrxr", 2, &message));
    CHECK(message.find("position 3") != std::string::npos);
    CHECK_FALSE(BPath::parse("frrr", 2, &message));
    CHECK(message.find("prefix \"f\"") != std::string::npos);
    CHECK_FALSE(BPath::parse("rffr", 2));
    CHECK_FALSE(BPath::parse("RRRF", 2));
    CHECK(is_bpath("rrff", 2));
    CHECK_FALSE(is_bpath("rffr", 2));
}

TEST_CASE("bit constructors agree with parsing") {
    auto p = BPath::parse("rrfrff", 3);
    REQUIRE(p);
    CHECK(BPath::from_bits(3, p->f_bits()) == *p);
    CHECK(BPath::from_f_positions(3, {3, 5, 6}) == *p);
    CHECK_THROWS_AS(BPath::from_bits(2, 0b0110), std::domain_error);
    CHECK_THROWS_AS(BPath::from_bits(2, 1ULL << 10), std::domain_error);
    CHECK_THROWS_AS(BPath::from_f_positions(2, {1}), std::domain_error);
}

TEST_CASE("classification") {
    CHECK(classify(*BPath::parse("rrrfrfrr", 4)) == PathClass{4, 6});
    CHECK(classify(*BPath::parse("rrrrrrrr", 4)) == PathClass{9, 10});
    CHECK(classify(*BPath::parse("rfrrrrrr", 4)) == PathClass{2, 9});
    CHECK(classify(*BPath::parse("rrrrfrrfrffr", 6)) == PathClass{5, 8});
}

TEST_CASE("enumeration order and count") {
    std::vector<std::string> words;
    for_each_bpath(2, [&](const BPath& p) { words.push_back(p.str()); });
    const std::vector<std::string> expected = {"rrrr", "rrrf", "rrfr", "rrff", "rfrr", "rfrf"};
    CHECK(words == expected);

    for (int n = 1; n <= 7; ++n) {
        std::set<BPath> seen;
        uint64_t total = 0;
        for_each_bpath(n, [&](const BPath& p) {
            ++total;
            seen.insert(p);
            REQUIRE(is_bpath(p.str(), n));
        });
        REQUIRE(bpath_count(n) == total);
        REQUIRE(seen.size() == total);
        REQUIRE(all_bpaths(n).size() == total);
    }
    CHECK(bpath_count(6) == 924);
}

TEST_CASE("unranking follows enumeration order") {
    uint64_t index = 0;
    for_each_bpath(3, [&](const BPath& p) {
        REQUIRE(unrank_bpath(3, index) == p);
        ++index;
    });
    CHECK_THROWS_AS(unrank_bpath(3, index), std::domain_error);
}

TEST_CASE("first-f class counts") {
    CHECK(count_class_first(2, 1) == 0);
    CHECK(count_class_first(2, 2) == 2);
    CHECK(count_class_first(2, 3) == 2);
    CHECK(count_class_first(2, 4) == 1);
    const Count expected4[] = {0, 20, 20, 14, 8, 4, 2, 1};
    for (int i = 1; i <= 8; ++i) REQUIRE(count_class_first(4, i) == expected4[i - 1]);
    CHECK(count_class_first(1, 2) == 1);
    CHECK(count_class_first_ext(3, 7) == 1);
    CHECK_THROWS_AS(count_class_first(2, 5), std::domain_error);
    CHECK_THROWS_AS(count_class_first(2, 0), std::domain_error);

    for (int n = 2; n <= 7; ++n) {
        std::map<int, uint64_t> buckets;
        for_each_bpath(n, [&](const BPath& p) { ++buckets[classify(p).first_f]; });
        Count total = 1;
        for (int i = 1; i <= 2 * n; ++i) {
            uint64_t seen = buckets.count(i) ? buckets[i] : 0;
            REQUIRE(count_class_first(n, i) == seen);
            total += count_class_first(n, i);
        }
        REQUIRE(total == bpath_count(n));
    }
}

TEST_CASE("pair class counts") {
    CHECK(count_class_pair(2, 2, 3) == 0);
    CHECK(count_class_pair(2, 2, 4) == 1);
    CHECK(count_class_pair(2, 2, 5) == 1);
    CHECK(count_class_pair(4, 4, 6) == 4);
    CHECK_THROWS_AS(count_class_pair(2, 1, 3), std::domain_error);
    CHECK_THROWS_AS(count_class_pair(2, 3, 3), std::domain_error);
    CHECK_THROWS_AS(count_class_pair(2, 2, 6), std::domain_error);

    for (int n = 2; n <= 7; ++n) {
        std::map<std::pair<int, int>, uint64_t> buckets;
        for_each_bpath(n, [&](const BPath& p) {
            PathClass c = classify(p);
            ++buckets[{c.first_f, c.second_f}];
        });
        Count total = 1;
        for (int i = 2; i <= 2 * n; ++i)
            for (int j = i + 1; j <= 2 * n + 1; ++j) {
                auto it = buckets.find({i, j});
                uint64_t seen = it == buckets.end() ? 0 : it->second;
                REQUIRE(count_class_pair(n, i, j) == seen);
                total += seen;
            }
        REQUIRE(total == bpath_count(n));
    }
}

TEST_CASE("path decodes to its coideal") {
    auto p = BPath::parse("rrrfrfrr", 4);
    REQUIRE(p);
    const std::vector<Root> expected = {{1, 3}, {1, 4}, {1, 5}, {1, 6},
                                        {1, 7}, {2, 4}, {2, 5}, {2, 6}};
    CHECK(path_to_coideal(*p) == expected);
    CHECK(path_to_coideal(*BPath::parse("rrrrrrrr", 4)).empty());
    CHECK(path_to_coideal(*BPath::parse("rfrfrfrf", 4)) == positive_roots(4));
}

TEST_CASE("coideal round trip") {
    for (int n = 2; n <= 5; ++n) {
        const auto poset = finite_poset(n);
        std::set<std::vector<Root>> images;
        for_each_bpath(n, [&](const BPath& p) {
            auto roots = path_to_coideal(p);
            Poset<Root>::Mask mask(static_cast<size_t>(poset.size()));
            for (const Root& a : roots) mask.set(static_cast<size_t>(root_index(n, a)));
            REQUIRE(poset.is_upward_closed(mask));
            REQUIRE(coideal_to_path(roots, n) == p);
            images.insert(std::move(roots));
        });
        REQUIRE(Count(images.size()) == bpath_count(n));
        REQUIRE(Count(images.size()) == count_coideals(poset));
    }
}

TEST_CASE("decoding rejects non-coideals") {
    CHECK_THROWS_AS(coideal_to_path({{1, 1}}, 2), std::domain_error);
    CHECK_THROWS_AS(coideal_to_path({{2, 2}}, 2), std::domain_error);
    CHECK_THROWS_AS(coideal_to_path({{1, 2}, {2, 2}}, 2), std::domain_error);
    CHECK_THROWS_AS(coideal_to_path({{0, 1}}, 2), std::domain_error);
    CHECK(coideal_to_path({}, 2) == *BPath::parse("rrrr", 2));
    CHECK(coideal_to_path({{1, 1}, {1, 2}, {1, 3}, {2, 2}}, 2) == *BPath::parse("rfrf", 2));
}

TEST_CASE("Dyck first and last peak counts") {
    CHECK(dyck_count_first_last(3, 1, 1) == 1);
    CHECK(dyck_count_first_last(3, 2, 2) == 1);
    CHECK(dyck_count_first_last(3, 3, 3) == 1);
    CHECK(dyck_count_first_last(3, 1, 3) == 0);
    CHECK(dyck_count_first_last(3, 3, 1) == 0);
    CHECK(dyck_count_first_last(4, 2, 1) == 2);
    CHECK_THROWS_AS(dyck_count_first_last(3, 0, 1), std::domain_error);
    CHECK_THROWS_AS(dyck_count_first_last(3, 1, 4), std::domain_error);

    for (int n = 1; n <= 6; ++n) {
        Count total = 0;
        for (int h = 1; h <= n; ++h)
            for (int k = 1; k <= n; ++k) total += dyck_count_first_last(n, h, k);
        REQUIRE(total == catalan(n));
    }
}

TEST_CASE("weighted peak sums give first-f class counts") {
    for (int n = 2; n <= 8; ++n)
        for (int i = 2; i <= n; ++i) {
            Count sum = 0;
            for (int k = 1; k <= n - 1; ++k)
                sum += pow2(k) * dyck_count_first_last(n, i - 1, k);
            REQUIRE(sum == count_class_first(n, i));
        }
}
