#pragma once

#include <vector>

#include "bss/algebra.hpp"

namespace bss {

using Vec = std::vector<Coef>;

bool is_zero(const Vec& v);
int leading_index(const Vec& v); /* -1 for zero */

/* Fully reduced row echelon form; pivot = last nonzero entry, normalized to 1.
 * Rows are kept sorted by pivot. */
class Echelon
{
public:
    Echelon() = default;
    Echelon(int p, std::size_t width) : p_(p), width_(width) {}

    std::size_t width() const
    {
        return width_;
    }
    std::size_t rank() const
    {
        return rows_.size();
    }
    const std::vector<Vec>& rows() const
    {
        return rows_;
    }
    const std::vector<int>& pivots() const
    {
        return pivots_;
    }

    /* v <- v - Σ v[pivot_i] row_i; the subtracted coefficients are returned */
    std::vector<Coef> reduce(Vec& v) const;
    bool insert(Vec v); /* false if dependent */

private:
    int p_ = 2;
    std::size_t width_ = 0;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

/* columns given as vectors of length `height`; returns a basis of the null space in F_p^{cols} */
std::vector<Vec> kernel(const std::vector<Vec>& columns, std::size_t height, int p);
int rank_of(const std::vector<Vec>& columns, std::size_t height, int p);

/* (rows x k) * (k x cols) with matrices stored as column lists */
std::vector<Vec> compose(const std::vector<Vec>& second, const std::vector<Vec>& first, std::size_t height, int p);

}  // namespace bss
