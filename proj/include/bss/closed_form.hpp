#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bss/algebra.hpp"
#include "bss/profile.hpp"

namespace bss {

/* E(λ_1..λ_{n+1}) ⊗ P(μ_{n+1}), |λ_i| = 2p^i - 1, |μ_{n+1}| = 2p^{n+1} */
Algebra thh_mod_p_algebra(int p, int n);

using GradedDims = std::map<std::int64_t, std::int64_t>; /* nonzero entries only */

/* E(σv_1..σv_n), |σv_i| = 2p^i - 1 */
GradedDims rational_thh_dims(int p, int n, std::int64_t max_degree);

struct TorsionGenerator
{
    std::string name;
    std::int64_t degree = 0;
    std::int64_t length = 1;
    Monomial projection;
};

struct TorsionPresentation
{
    Algebra algebra;
    std::vector<Monomial> free_part;
    std::vector<TorsionGenerator> torsion;

    TowerProfile profile() const;
};

/* all presentations are truncated to degree <= max_degree */
TorsionPresentation t0n_presentation(int p, int n, std::int64_t max_degree);
TorsionPresentation t12_presentation(int p, std::int64_t max_degree);
TorsionPresentation t22_presentation(int p, std::int64_t max_degree);
TorsionPresentation tmn_presentation(int p, int n, int m, std::int64_t max_degree);

TowerProfile t0n_profile(int p, int n, std::int64_t max_degree);
TowerProfile t12_profile(int p, std::int64_t max_degree);
TowerProfile t22_profile(int p, std::int64_t max_degree);
TowerProfile tmn_profile(int p, int n, int m, std::int64_t max_degree);

enum class LocalizedCase { v1, v2 };
/* dimensions of one Laurent filtration slice of the localized E_∞ */
GradedDims localized_expected(LocalizedCase c, int p, std::int64_t max_degree);

}  // namespace bss
