#include <doctest.h>

#include "staircase/linalg.hpp"

using namespace stair;

namespace {

RatMatrix mat(std::size_t r, std::size_t c, std::vector<long> entries) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.a[i] = Rat(entries[i]);
    return m;
}

} // namespace

TEST_CASE("rref of the identity is the identity") {
    RatMatrix m = mat(2, 2, {1, 0, 0, 1});
    RrefResult rr = rref(m);
    CHECK(rr.rank == 2);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
    CHECK(rr.reduced.a == m.a);
}

TEST_CASE("rref collapses dependent rows") {
    RrefResult rr = rref(mat(2, 2, {1, 2, 2, 4}));
    CHECK(rr.rank == 1);
    CHECK(rr.reduced.at(0, 0) == 1);
    CHECK(rr.reduced.at(0, 1) == 2);
    CHECK(rr.reduced.at(1, 0) == 0);
    CHECK(rr.reduced.at(1, 1) == 0);
}

TEST_CASE("rref orders pivots by elimination") {
    RrefResult rr = rref(mat(2, 2, {0, 1, 1, 0}));
    CHECK(rr.rank == 2);
    CHECK(rr.reduced.at(0, 0) == 1);
    CHECK(rr.reduced.at(0, 1) == 0);
    CHECK(rr.reduced.at(1, 0) == 0);
    CHECK(rr.reduced.at(1, 1) == 1);
}

TEST_CASE("kernel of the identity is empty") {
    CHECK(kernel_basis(mat(2, 2, {1, 0, 0, 1})).empty());
}

TEST_CASE("kernel of a rank-one row") {
    auto ker = kernel_basis(mat(1, 2, {1, 1}));
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == 1);
    CHECK(ker[0][1] == -1);
}

TEST_CASE("kernel vectors annihilate a wide matrix") {
    RatMatrix m = mat(1, 3, {1, 2, 3});
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        Rat dot(0);
        for (std::size_t j = 0; j < 3; ++j)
            dot += m.at(0, j) * v[j];
        CHECK(dot == 0);
    }
}

TEST_CASE("independence oracle basics") {
    RowIndependenceOracle o;
    CHECK(o.feed({Rat(1), Rat(0)}));
    CHECK_FALSE(o.feed({Rat(2), Rat(0)}));
    CHECK(o.feed({Rat(0), Rat(1)}));
    CHECK(o.rank() == 2);
}

TEST_CASE("independence oracle rejects zero and mismatched width") {
    RowIndependenceOracle o;
    CHECK_FALSE(o.feed({Rat(0), Rat(0)}));
    CHECK(o.feed({Rat(1), Rat(2)}));
    CHECK_THROWS_AS(o.feed({Rat(1)}), std::invalid_argument);
}

TEST_CASE("independence oracle accepts all rows of an invertible matrix") {
    RowIndependenceOracle o;
    CHECK(o.feed({Rat(2), Rat(0), Rat(1)}));
    CHECK(o.feed({Rat(1), Rat(1), Rat(0)}));
    CHECK(o.feed({Rat(0), Rat(3), Rat(7)}));
    RrefResult rr = rref(mat(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 7}));
    CHECK(rr.rank == 3);
}
