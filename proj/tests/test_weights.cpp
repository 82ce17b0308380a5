#include <catch2/catch_amalgamated.hpp>

#include "anmod/weights.hpp"

using namespace anmod;

TEST_CASE("cartan matrix entries") {
    CHECK(cartan_entry(1, 1) == 2);
    CHECK(cartan_entry(1, 2) == -1);
    CHECK(cartan_entry(1, 3) == 0);
    auto c = cartan_matrix(3);
    CHECK(c[0] == Weight{2, -1, 0});
    CHECK(c[1] == Weight{-1, 2, -1});
    CHECK(c[2] == Weight{0, -1, 2});
}

TEST_CASE("dominance and subtraction") {
    CHECK(is_dominant({1, 0, 2}));
    CHECK_FALSE(is_dominant({1, -1}));
    CHECK(is_zero_weight({0, 0}));
    Weight w{1, 1};
    subtract_root(w, 1, 1);
    CHECK(w == Weight{-1, 2});
    subtract_root(w, 2, 1);
    CHECK(w == Weight{0, 0});
}

TEST_CASE("simple reflections") {
    CHECK(reflect({1, 0}, 1) == Weight{-1, 1});
    CHECK(reflect({1, 1}, 2) == Weight{2, -1});
    CHECK(reflect(reflect({2, 1}, 1), 1) == Weight{2, 1});
}

TEST_CASE("dimension formula, rank 1 and 2") {
    CHECK(weyl_dim({0}) == 1);
    CHECK(weyl_dim({3}) == 4);
    CHECK(weyl_dim({1, 0}) == 3);
    CHECK(weyl_dim({0, 1}) == 3);
    CHECK(weyl_dim({1, 1}) == 8);
    CHECK(weyl_dim({2, 0}) == 6);
    CHECK(weyl_dim({2, 1}) == 15);
    CHECK(weyl_dim({2, 2}) == 27);
}

TEST_CASE("dimension formula, rank 3") {
    CHECK(weyl_dim({1, 1, 1}) == 64);
    CHECK(weyl_dim({2, 2, 2}) == 729);
    CHECK(weyl_dim({2, 2, 1}) == 360);
    CHECK(weyl_dim({1, 2, 1}) == 175);
    CHECK(weyl_dim({2, 1, 2}) == 300);
    CHECK(weyl_dim({2, 2, 0}) == 126);
    CHECK(weyl_dim({0, 1, 1}) == 20);
    CHECK(weyl_dim({1, 0, 1}) == 15);
}

TEST_CASE("dimension formula, rank 4") {
    CHECK(weyl_dim({0, 1, 0, 0}) == 10);
    CHECK(weyl_dim({0, 0, 1, 0}) == 10);
    CHECK(weyl_dim({2, 2, 0, 0}) == 420);
    CHECK(weyl_dim({0, 0, 2, 2}) == 420);
    CHECK(weyl_dim({1, 1, 1, 1}) == 1024);
    CHECK(weyl_dim({0, 2, 2, 0}) == 1176);
    CHECK(weyl_dim({2, 2, 1, 0}) == 2430);
}

TEST_CASE("dimension formula survives non-integer intermediate factors") {
    // the (1,2) factor for weight (1,0) is 3/2 before the final product
    CHECK(weyl_dim({1, 0}) == 3);
    CHECK(weyl_dim({0, 0, 1}) == 4);
}

TEST_CASE("dominant grid enumeration") {
    auto g1 = dominant_grid(1, 2, true);
    REQUIRE(g1.size() == 3);
    CHECK(g1[0] == Weight{0});
    CHECK(g1[2] == Weight{2});
    auto g2 = dominant_grid(2, 1, true);
    CHECK(g2.size() == 4);
    auto g2x = dominant_grid(2, 2, false);
    CHECK(g2x.size() == 8);
    for (const auto& w : g2x) CHECK_FALSE(is_zero_weight(w));
}

TEST_CASE("weight formatting") {
    CHECK(weight_str({1, 0, 2}) == "1,0,2");
    CHECK(weight_str({5}) == "5");
}
