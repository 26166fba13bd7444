#include <doctest.h>

#include "cylschur/common.hpp"
#include "cylschur/partition.hpp"

#include <map>
#include <set>

using namespace cylschur;

TEST_CASE("partition normalization and access") {
    Partition p({3, 2, 2, 0, 0});
    CHECK(p.length() == 3);
    CHECK(p.weight() == 7);
    CHECK(p[0] == 3);
    CHECK(p[2] == 2);
    CHECK(p[5] == 0);
    CHECK(Partition().empty());
    CHECK_THROWS_AS(Partition({1, 2}), input_error);
    CHECK_THROWS_AS(Partition({2, 0, 1}), input_error);
    CHECK_THROWS_AS(Partition({-1}), input_error);
    CHECK(Partition::sorted({1, 3, 0, 2}).parts() == std::vector<int>{3, 2, 1});
    CHECK(Partition::parse("4,4,3,1").str() == "(4,4,3,1)");
    CHECK(Partition::parse("").empty());
}

TEST_CASE("composition validation") {
    Composition a({2, 1, 2});
    CHECK(a.weight() == 5);
    CHECK(a.sort() == Partition({2, 2, 1}));
    CHECK_THROWS_AS(Composition({1, 0}), input_error);
    CHECK_THROWS_AS(Composition::parse("2,-1"), input_error);
}

TEST_CASE("z_of spec values") {
    CHECK(z_of(Partition({5})) == 5);
    CHECK(z_of(Partition({1, 1, 1, 1, 1})) == 120);
    CHECK(z_of(Partition({3, 1, 1})) == 6);
    CHECK(z_of(Partition({5, 3, 2})) == 30);
    CHECK(z_of(Partition()) == 1);
}

TEST_CASE("z_of counts cycle types") {
    // sum over lambda of n!/z_lambda must give n! (permutations by cycle type)
    for (int n = 1; n <= 8; ++n) {
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        long long total = 0;
        for (const Partition& lam : partitions_of(n)) {
            CHECK(fact % z_of(lam) == 0);
            total += fact / z_of(lam);
        }
        CHECK(total == fact);
    }
}

TEST_CASE("rearrangements share one partition and one z") {
    for (int n = 1; n <= 8; ++n) {
        std::map<Partition, int> orbit;
        for (const Composition& a : compositions_of(n)) ++orbit[a.sort()];
        CHECK(orbit.size() == partitions_of(n).size());
        for (const auto& [lam, count] : orbit) CHECK(count >= 1);
    }
}

TEST_CASE("coarsenings_with_pi") {
    auto c1 = coarsenings_with_pi(Composition({2}));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].first == Composition({2}));
    CHECK(c1[0].second == 2);

    auto c2 = coarsenings_with_pi(Composition({1, 1}));
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].first == Composition({1, 1}));
    CHECK(c2[0].second == 1);
    CHECK(c2[1].first == Composition({2}));
    CHECK(c2[1].second == 2);

    auto c3 = coarsenings_with_pi(Composition({1, 1, 1}));
    CHECK(c3.size() == 4);
    std::map<Composition, long long> got;
    for (const auto& [beta, pi] : c3) got[beta] = pi;
    CHECK(got.at(Composition({2, 1})) == 2);
    CHECK(got.at(Composition({3})) == 6);

    for (const Composition& a : compositions_of(5)) {
        auto cs = coarsenings_with_pi(a);
        CHECK(static_cast<int>(cs.size()) == (1 << (a.length() - 1)));
        CHECK(cs[0].first == a);
        long long prod = 1;
        for (int p : a.parts()) prod *= p;
        CHECK(cs[0].second == prod);
    }
}

TEST_CASE("special_vectors") {
    auto [d1, r1] = special_vectors(1);
    CHECK(d1 == IntVec{0});
    CHECK(r1 == IntVec{0});
    auto [d3, r3] = special_vectors(3);
    CHECK(d3 == IntVec({2, 1, 0}));
    auto [d2, r2] = special_vectors(2);
    CHECK(r2 == IntVec({1, -1}));
    CHECK_THROWS_AS(special_vectors(0), input_error);
}

TEST_CASE("enumerators") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_of_bounded(6, 2, 6).size() == 4);
    CHECK(compositions_of(4).size() == 8);
    const auto p7 = partitions_of(7);
    std::set<Partition> uniq(p7.begin(), p7.end());
    CHECK(uniq.size() == p7.size());
}

TEST_CASE("parse_int_list") {
    CHECK(parse_int_list("4,4,3,1") == std::vector<int>({4, 4, 3, 1}));
    CHECK(parse_int_list("-2") == std::vector<int>({-2}));
    CHECK(parse_int_list("").empty());
    CHECK_THROWS_AS(parse_int_list("1,,2"), input_error);
    CHECK_THROWS_AS(parse_int_list("1,a"), input_error);
    CHECK_THROWS_AS(parse_int_list("1 2"), input_error);
}

TEST_CASE("floor_div") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(-6, 2) == -3);
    CHECK(floor_div(6, -4) == -2);
}

TEST_CASE("for_each_permutation") {
    int count = 0;
    int signSum = 0;
    std::vector<int> first;
    for_each_permutation(3, [&](const std::vector<int>& p, int sign) {
        if (count == 0) first = p;
        ++count;
        signSum += sign;
    });
    CHECK(count == 6);
    CHECK(signSum == 0);
    CHECK(first == std::vector<int>({0, 1, 2}));
    CHECK_THROWS_AS(for_each_permutation(config().maxPermSize + 1, [](const std::vector<int>&, int) {}),
                    cost_guard_error);
}
