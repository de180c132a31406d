#include <doctest.h>

#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mahonian/perm.hpp"
#include "support/properties.hpp"

using namespace mahonian;

TEST_CASE("window validation") {
    CHECK_THROWS_AS(Perm(std::vector<int>{}), std::domain_error);
    CHECK_THROWS_AS(Perm({2, 2}), std::domain_error);
    CHECK_THROWS_AS(Perm({0, 1}), std::domain_error);
    CHECK_THROWS_AS(Perm({1, 3}), std::domain_error);
    CHECK_THROWS_AS(Perm({-1, 2}), std::domain_error);
    CHECK_THROWS_AS(Perm::identity(0), std::domain_error);
    CHECK(Perm({1}).size() == 1);
}

TEST_CASE("statistics on fixed windows") {
    const Perm p({2, 4, 1, 3});
    CHECK(inv(p) == 3);
    CHECK(descent_set(p) == std::vector<int>{2});
    CHECK(maj(p) == 2);
    CHECK(last(p) == 2);
    CHECK(sign(p) == -1);

    const Perm id = Perm::identity(4);
    CHECK(inv(id) == 0);
    CHECK(maj(id) == 0);
    CHECK(descent_set(id).empty());
    CHECK(last(id) == 3);
    CHECK(sign(id) == 1);

    const Perm rev({3, 2, 1});
    CHECK(inv(rev) == 3);
    CHECK(maj(rev) == 3);
    CHECK(descent_set(rev) == std::vector<int>{1, 2});
    CHECK(last(rev) == 0);
    CHECK(sign(rev) == -1);

    std::ostringstream os;
    os << p;
    CHECK(os.str() == "(2,4,1,3)");
}

TEST_CASE("lexicographic enumeration") {
    std::vector<std::vector<int>> seen;
    for_each_sn(3, [&](const Perm& p) { seen.push_back(p.window()); });
    const std::vector<std::vector<int>> expected = {
        {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    CHECK(seen == expected);

    for (int n = 1; n <= 7; ++n) {
        std::uint64_t count = 0;
        std::set<std::vector<int>> distinct;
        for_each_sn(n, [&](const Perm& p) {
            ++count;
            distinct.insert(p.window());
        });
        CHECK(count == sn_count(n));
        CHECK(distinct.size() == sn_count(n));
    }

    CHECK_THROWS_AS(for_each_sn(0, [](const Perm&) {}), std::domain_error);
    CHECK_THROWS_AS(for_each_sn(sn_cap() + 1, [](const Perm&) {}), std::domain_error);
}

TEST_CASE("factorial counts") {
    CHECK(sn_count(0) == 1);
    CHECK(sn_count(1) == 1);
    CHECK(sn_count(6) == 720);
    CHECK(sn_count(20) == 2432902008176640000ULL);
    CHECK_THROWS_AS(sn_count(21), std::domain_error);
    CHECK_THROWS_AS(sn_count(-1), std::domain_error);
}

TEST_CASE("unranking") {
    CHECK(unrank_sn(3, 0) == Perm({1, 2, 3}));
    CHECK(unrank_sn(3, 5) == Perm({3, 2, 1}));
    CHECK(unrank_sn(4, 1) == Perm({1, 2, 4, 3}));
    CHECK_THROWS_AS(unrank_sn(3, 6), std::domain_error);
    CHECK_THROWS_AS(unrank_sn(0, 0), std::domain_error);

    for (int n = 1; n <= 6; ++n) {
        std::uint64_t rank = 0;
        for_each_sn(n, [&](const Perm& p) {
            CHECK(unrank_sn(n, rank) == p);
            ++rank;
        });
    }
}

TEST_CASE("rank ranges concatenate to the full enumeration") {
    std::vector<std::vector<int>> full;
    for_each_sn(6, [&](const Perm& p) { full.push_back(p.window()); });

    std::vector<std::vector<int>> pieced;
    const std::uint64_t cuts[] = {0, 200, 500, 720};
    for (int b = 0; b + 1 < 4; ++b)
        for_each_sn_range(6, cuts[b], cuts[b + 1] - cuts[b],
                          [&](const Perm& p) { pieced.push_back(p.window()); });
    CHECK(pieced == full);

    std::vector<std::vector<int>> none;
    for_each_sn_range(6, 0, 0, [&](const Perm& p) { none.push_back(p.window()); });
    CHECK(none.empty());

    CHECK_THROWS_AS(for_each_sn_range(3, 4, 3, [](const Perm&) {}), std::domain_error);
    CHECK_THROWS_AS(for_each_sn_range(3, 0, 7, [](const Perm&) {}), std::domain_error);
}

TEST_CASE("append_digit on fixed windows") {
    CHECK(append_digit(Perm({1}), 1) == Perm({2, 1}));
    CHECK(append_digit(Perm({1}), 2) == Perm({1, 2}));
    CHECK(append_digit(Perm({2, 4, 1, 3}), 3) == Perm({2, 5, 1, 4, 3}));
    CHECK_THROWS_AS(append_digit(Perm({1}), 0), std::domain_error);
    CHECK_THROWS_AS(append_digit(Perm({1}), 3), std::domain_error);
}

TEST_CASE("append_digit laws hold exhaustively") {
    const auto err = prop::check_append_digit(8);
    CHECK_MESSAGE(!err.has_value(), err.value_or(""));
}

TEST_CASE("inv and maj are equidistributed") {
    for (int n = 1; n <= 9; ++n) {
        const int top = n * (n - 1) / 2;
        std::vector<long long> by_inv(top + 1, 0), by_maj(top + 1, 0);
        for_each_sn(n, [&](const Perm& p) {
            ++by_inv[inv(p)];
            ++by_maj[maj(p)];
        });
        CHECK(by_inv == by_maj);
    }
}
