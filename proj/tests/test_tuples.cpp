#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "anmod/tuples.hpp"
#include "anmod/weights.hpp"

using namespace anmod;

TEST_CASE("triangular layout accessors") {
    Tuple t(3);
    REQUIRE(t.a.size() == 6);
    t.set(1, 1, 4);
    t.set(3, 2, 7);
    CHECK(t.get(1, 1) == 4);
    CHECK(t.get(3, 2) == 7);
    CHECK(t.get(2, 2) == 0);
}

TEST_CASE("basis for the rank 2 defining module") {
    Weight w{1, 0};
    auto basis = enumerate_basis(w);
    REQUIRE(basis.size() == 3);
    std::set<std::string> got;
    for (const auto& t : basis) got.insert(format_tuple(t));
    CHECK(got == std::set<std::string>{"0;0,0", "1;0,0", "0;1,1"});
}

TEST_CASE("basis sizes match the dimension formula") {
    for (const Weight& w : {Weight{1, 1}, Weight{2, 0}, Weight{2, 2}}) {
        auto basis = enumerate_basis(w);
        CHECK(Int(static_cast<long>(basis.size())) == weyl_dim(w));
    }
    CHECK(enumerate_basis({1, 1, 1}).size() == 64);
    CHECK(enumerate_basis({0, 1, 0, 0}).size() == 10);
}

TEST_CASE("every enumerated tuple is a member, rows are standard") {
    Weight w{2, 1};
    for (const auto& t : enumerate_basis(w)) {
        CHECK(is_member(w, t));
        for (int j = 1; j <= t.n; ++j)
            for (int i = 1; i < j; ++i) CHECK(t.get(j, i) <= t.get(j, i + 1));
    }
}

TEST_CASE("membership rejects out-of-bound entries") {
    Weight w{1, 0};
    Tuple t(2);
    t.set(1, 1, 2);  // exceeds the first coroot value
    CHECK_FALSE(is_member(w, t));
    Tuple s(2);
    s.set(2, 2, 1);  // second row without the supporting first column
    s.set(2, 1, 0);
    CHECK_FALSE(is_member(w, s));
}

TEST_CASE("expanded bound agrees with the recursive partial weight") {
    Weight w{2, 1, 1};
    for (const auto& t : enumerate_basis(w))
        for (int j = 1; j <= 3; ++j)
            for (int i = 1; i <= j; ++i) {
                Weight pw = partial_weight(w, t, j, i - 1);
                CHECK(expanded_bound(w, t, j, i) == pw[static_cast<size_t>(i - 1)]);
            }
}

TEST_CASE("tuple weights are constant along no proper subset") {
    // multiset of tuple weights is symmetric under the full orbit count
    Weight w{1, 1};
    std::map<Weight, int> mult;
    for (const auto& t : enumerate_basis(w)) mult[tuple_weight(w, t)]++;
    CHECK(mult.at(Weight{1, 1}) == 1);
    CHECK(mult.at(Weight{0, 0}) == 2);
    CHECK(mult.at(Weight{-1, -1}) == 1);
    CHECK(mult.size() == 7);
}

TEST_CASE("formatting and parsing round-trip") {
    Weight w{2, 1, 1};
    for (const auto& t : enumerate_basis(w)) {
        Tuple back = parse_tuple(3, format_tuple(t));
        CHECK(back == t);
    }
    CHECK_THROWS_AS(parse_tuple(2, "1;2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple(2, "a;0,0"), std::invalid_argument);
}

TEST_CASE("index map is injective and complete") {
    auto basis = enumerate_basis({1, 1});
    auto idx = index_tuples(basis);
    CHECK(idx.size() == basis.size());
    for (size_t k = 0; k < basis.size(); ++k)
        CHECK(idx.at(basis[k].a) == static_cast<long long>(k));
}
