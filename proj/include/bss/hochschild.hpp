#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bss/algebra.hpp"

namespace bss {

using DimSeries = std::vector<std::int64_t>; /* index = degree, 0..D */

struct HHResult
{
    Algebra algebra;
    int characteristic = 0;
    std::vector<std::string> sigma_generators; /* names before divided-power expansion */
};

/* HKR for a free graded-commutative algebra:
 *   polynomial x -> exterior σx
 *   exterior x   -> divided power σx in char p, polynomial σx in char 0
 * |σx| = |x| + 1. Divided powers are expanded through degree_bound. */
HHResult hh_free(const Algebra& A, int characteristic, std::int64_t degree_bound = 256);

DimSeries hh_dims(const HHResult& res, std::int64_t max_degree);
DimSeries sigma_dims(const HHResult& res, std::int64_t max_degree);

/* graded dimensions of A from the generating functions of its generator kinds */
DimSeries series_dims(const Algebra& A, std::int64_t max_degree);
DimSeries convolve(const DimSeries& a, const DimSeries& b, std::int64_t max_degree);

}  // namespace bss
