#include <doctest.h>

#include "staircase/orders.hpp"

using namespace stair;

TEST_CASE("deglex compares degree first, then the larger variable") {
    MonomialOrder o = MonomialOrder::deglex(2);
    CHECK(o.less(Exponent({1, 0}), Exponent({0, 1})));
    CHECK(o.less(Exponent({0, 1}), Exponent({2, 0}))); // degree dominates
    CHECK(o.cmp(Exponent({1, 1}), Exponent({1, 1})) == 0);
}

TEST_CASE("lex keeps every power of the small variable below the next one") {
    MonomialOrder o = MonomialOrder::lex(2);
    for (int k = 0; k <= 9; ++k)
        CHECK(o.less(Exponent({k, 0}), Exponent({0, 1})));
}

TEST_CASE("order specs round-trip") {
    MonomialOrder o = MonomialOrder::parse("deglex:x2<x1");
    CHECK(o.str() == "deglex:x2<x1");
    // with x2 the small variable, (0,1) comes before (1,0)
    CHECK(o.less(Exponent({0, 1}), Exponent({1, 0})));
    CHECK_THROWS_AS(MonomialOrder::parse("weird:x1<x2"), std::invalid_argument);
    CHECK_THROWS_AS(MonomialOrder::parse("lex:x1<x1"), std::invalid_argument);
}

TEST_CASE("ascending exponents under deglex, cap (1,1)") {
    auto s = ascending_exponents(MonomialOrder::deglex(2), Exponent({1, 1}));
    std::vector<Exponent> want = {Exponent({0, 0}), Exponent({1, 0}), Exponent({0, 1}),
                                  Exponent({1, 1})};
    CHECK(s == want);
}

TEST_CASE("ascending exponents under lex, cap (2,1)") {
    auto s = ascending_exponents(MonomialOrder::lex(2), Exponent({2, 1}));
    std::vector<Exponent> want = {Exponent({0, 0}), Exponent({1, 0}), Exponent({2, 0}),
                                  Exponent({0, 1}), Exponent({1, 1}), Exponent({2, 1})};
    CHECK(s == want);
}

TEST_CASE("cap (0,0) yields only the origin") {
    auto s = ascending_exponents(MonomialOrder::deglex(2), Exponent({0, 0}));
    CHECK(s == std::vector<Exponent>{Exponent({0, 0})});
}

TEST_CASE("q_count closed form") {
    MonomialOrder o = MonomialOrder::deglex(2);
    CHECK(q_count(o, Exponent({0, 0})) == 0);
    CHECK(q_count(o, Exponent({2, 1})) == 7);
    CHECK(q_count(o, Exponent({0, 2})) == 5);
    CHECK_THROWS_AS(q_count(MonomialOrder::lex(2), Exponent({1, 0})), std::invalid_argument);
}

TEST_CASE("lower set recognition") {
    CHECK(is_lower_set({Exponent({0, 0}), Exponent({1, 0}), Exponent({0, 1})}));
    CHECK_FALSE(is_lower_set({Exponent({1, 0})}));
    CHECK(is_lower_set(std::vector<Exponent>{}));
}
