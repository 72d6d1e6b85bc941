#include "bss/linalg.hpp"

#include <algorithm>

#include "bss/error.hpp"

namespace bss {

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](Coef c) { return c == 0; });
}

int leading_index(const Vec& v)
{
    for (int i = int(v.size()) - 1; i >= 0; --i)
        if (v[i] != 0)
            return i;
    return -1;
}

std::vector<Coef> Echelon::reduce(Vec& v) const
{
    if (v.size() != width_)
        throw Error(Errc::internal, "vector width does not match the echelon basis");
    std::vector<Coef> coeffs(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Coef c = v[pivots_[i]];
        coeffs[i] = c;
        if (c == 0)
            continue;
        Coef neg = fp_neg(c, p_);
        auto& row = rows_[i];
        for (std::size_t j = 0; j < width_; ++j)
            if (row[j])
                v[j] = fp_add(v[j], fp_mul(neg, row[j], p_), p_);
    }
    return coeffs;
}

bool Echelon::insert(Vec v)
{
    reduce(v);
    int piv = leading_index(v);
    if (piv < 0)
        return false;
    Coef inv = fp_inv(v[piv], p_);
    for (auto& x : v)
        x = fp_mul(x, inv, p_);
    for (auto& row : rows_) {
        Coef c = row[piv];
        if (c == 0)
            continue;
        Coef neg = fp_neg(c, p_);
        for (std::size_t j = 0; j < width_; ++j)
            if (v[j])
                row[j] = fp_add(row[j], fp_mul(neg, v[j], p_), p_);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

namespace {

/* row-reduce the (height x cols) matrix; returns pivot column per pivot row */
std::vector<int> rref(std::vector<Vec>& rows, std::size_t cols, int p)
{
    std::vector<int> pivcols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        Coef inv = fp_inv(rows[r][c], p);
        for (auto& x : rows[r])
            x = fp_mul(x, inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Coef neg = fp_neg(rows[i][c], p);
            for (std::size_t j = 0; j < cols; ++j)
                if (rows[r][j])
                    rows[i][j] = fp_add(rows[i][j], fp_mul(neg, rows[r][j], p), p);
        }
        pivcols.push_back(int(c));
        ++r;
    }
    return pivcols;
}

std::vector<Vec> to_rows(const std::vector<Vec>& columns, std::size_t height)
{
    std::vector<Vec> rows(height, Vec(columns.size(), 0));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t i = 0; i < height; ++i)
            rows[i][c] = columns[c][i];
    return rows;
}

}  // namespace

std::vector<Vec> kernel(const std::vector<Vec>& columns, std::size_t height, int p)
{
    std::size_t cols = columns.size();
    auto rows = to_rows(columns, height);
    auto piv = rref(rows, cols, p);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv)
        is_piv[c] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f])
            continue;
        Vec k(cols, 0);
        k[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            k[piv[i]] = fp_neg(rows[i][f], p);
        out.push_back(std::move(k));
    }
    return out;
}

int rank_of(const std::vector<Vec>& columns, std::size_t height, int p)
{
    auto rows = to_rows(columns, height);
    return int(rref(rows, columns.size(), p).size());
}

std::vector<Vec> compose(const std::vector<Vec>& second, const std::vector<Vec>& first, std::size_t height, int p)
{
    std::vector<Vec> out;
    out.reserve(first.size());
    for (auto& col : first) {
        Vec r(height, 0);
        for (std::size_t k = 0; k < col.size(); ++k) {
            if (col[k] == 0)
                continue;
            for (std::size_t i = 0; i < height; ++i)
                if (second[k][i])
                    r[i] = fp_add(r[i], fp_mul(col[k], second[k][i], p), p);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace bss
