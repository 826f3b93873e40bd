#include "staircase/linalg.hpp"

#include <stdexcept>

namespace stair {

RrefResult rref(const RatMatrix& m) {
    RrefResult res;
    res.reduced = m;
    RatMatrix& r = res.reduced;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols && lead < r.rows; ++col) {
        std::size_t piv = lead;
        while (piv < r.rows && r.at(piv, col) == 0)
            ++piv;
        if (piv == r.rows)
            continue;
        if (piv != lead)
            for (std::size_t j = 0; j < r.cols; ++j)
                std::swap(r.at(piv, j), r.at(lead, j));
        Rat inv = r.at(lead, col);
        for (std::size_t j = col; j < r.cols; ++j)
            r.at(lead, j) /= inv;
        for (std::size_t i = 0; i < r.rows; ++i) {
            if (i == lead || r.at(i, col) == 0)
                continue;
            Rat f = r.at(i, col);
            for (std::size_t j = col; j < r.cols; ++j)
                r.at(i, j) -= f * r.at(lead, j);
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = res.pivots.size();
    return res;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : rr.pivots)
        is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[free] = 1;
        for (std::size_t pr = 0; pr < rr.rank; ++pr)
            v[rr.pivots[pr]] = -rr.reduced.at(pr, free);
        // first nonzero coordinate -> 1
        for (auto& x : v) {
            if (x != 0) {
                Rat lead = x;
                for (auto& y : v)
                    y /= lead;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RowIndependenceOracle::feed(const std::vector<Rat>& v) {
    if (!width_set_) {
        width_ = v.size();
        width_set_ = true;
    } else if (v.size() != width_) {
        throw std::invalid_argument("RowIndependenceOracle: dimension mismatch");
    }

    std::vector<Rat> w = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rat& c = w[pivot_cols_[k]];
        if (c == 0)
            continue;
        Rat f = c;
        const std::vector<Rat>& row = rows_[k];
        for (std::size_t j = 0; j < width_; ++j)
            if (row[j] != 0)
                w[j] -= f * row[j];
    }

    std::size_t piv = width_;
    for (std::size_t j = 0; j < width_; ++j) {
        if (w[j] != 0) {
            piv = j;
            break;
        }
    }
    if (piv == width_)
        return false;

    Rat lead = w[piv];
    for (std::size_t j = 0; j < width_; ++j)
        if (w[j] != 0)
            w[j] /= lead;

    // eliminate the new pivot column from the stored rows
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Rat f = rows_[k][piv];
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < width_; ++j)
            if (w[j] != 0)
                rows_[k][j] -= f * w[j];
    }
    rows_.push_back(std::move(w));
    pivot_cols_.push_back(piv);
    return true;
}

} // namespace stair
