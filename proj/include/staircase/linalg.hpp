#pragma once

#include <cstddef>
#include <vector>

#include "staircase/rational.hpp"

namespace stair {

// Dense rational matrix, row major. Immutable in spirit: operations return
// new values instead of mutating their input.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct RrefResult {
    RatMatrix reduced;
    std::vector<std::size_t> pivots; // pivot column per pivot row
    std::size_t rank = 0;
};

RrefResult rref(const RatMatrix& m);

// Basis of the right null space. Empty iff the matrix has full column rank.
// Each vector is normalized so its first nonzero coordinate is 1.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

// Incremental row-rank tracker. feed() accepts a vector iff it is linearly
// independent of everything accepted so far; accepted rows are retained in
// fully reduced (Gauss-Jordan) form so later feeds stay cheap.
class RowIndependenceOracle {
public:
    // returns true iff v was independent (and is now part of the basis)
    bool feed(const std::vector<Rat>& v);

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

private:
    std::size_t width_ = 0;
    bool width_set_ = false;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> pivot_cols_;
};

} // namespace stair
