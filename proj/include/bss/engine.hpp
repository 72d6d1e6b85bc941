#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bss/algebra.hpp"
#include "bss/closed_form.hpp"
#include "bss/formulas.hpp"
#include "bss/linalg.hpp"
#include "bss/profile.hpp"

namespace bss {

/* Computation happens on degrees 0..max_degree+buffer, results are reported on 0..max_degree.
 * filtration_cap < 0 means "derived from the window". */
struct Window
{
    std::int64_t max_degree = 0;
    std::int64_t buffer = 1;
    std::int64_t filtration_cap = -1;
};

/* source: monomial of A (inside A ⊗ v, no v factor); target: element of A ⊗ v with v^r */
struct ScheduleRule
{
    Monomial source;
    Element target;
};

struct DifferentialSchedule
{
    Algebra algebra; /* A ⊗ P(v), v last */
    GeneratorSpec v;
    std::map<int, std::vector<ScheduleRule>> rules;
    int max_page = 0;
    bool conjectural = false;
};

/* A ⊗ P(v), or A ⊗ P(v^{±1}) when localized */
Algebra e1_algebra(const Algebra& A, const GeneratorSpec& v, bool localized);

struct Bidegree
{
    std::int64_t t = 0; /* topological degree including s·|v| */
    std::int64_t s = 0; /* v-filtration */
    auto operator<=>(const Bidegree&) const = default;
};

struct E1Context
{
    Algebra base;
    Algebra e1;
    GeneratorSpec v;
    bool localized = false;
    Window window;
    std::int64_t vdeg = 0;
    std::int64_t max_internal = 0; /* largest A-degree in the box */
    std::int64_t t_max = 0;        /* unlocalized box: t <= t_max */
    std::int64_t s_cap = -1;       /* |s| <= s_cap when >= 0 */
    std::vector<std::vector<Monomial>> basis;
    std::vector<std::map<Monomial, int>> index;

    std::int64_t internal(Bidegree b) const
    {
        return b.t - b.s * vdeg;
    }
    bool in_box(Bidegree b) const;
    std::size_t dim_internal(std::int64_t a) const;
    bool known_zero(Bidegree b) const; /* E_1 vanishes there */
    Element element(Bidegree b, const Vec& coords) const;
    Vec coords(const Element& x_in_A, std::int64_t a) const;
};

struct Block
{
    std::int64_t internal = 0;
    Echelon reps;       /* E_r basis, rows in the monomial basis of A_internal, reduced against the boundaries */
    Echelon boundaries; /* accumulated images of earlier differentials */
    bool determinate = true;
    /* d_r out of this bidegree, one column per rep, coordinates in the target's reps */
    bool has_differential = false;
    bool differential_known = true;
    std::vector<Vec> differential;
};

/* coordinates of a cycle in the block's reps; nullopt if z is not a cycle */
std::optional<Vec> cycle_coordinates(const Block& blk, Vec z);

struct PageData
{
    int r = 1;
    std::shared_ptr<const E1Context> ctx;
    std::map<Bidegree, Block> blocks;

    const Block* find(Bidegree b) const;
    std::size_t dim(Bidegree b) const;
    bool determinate(Bidegree b) const;
    std::vector<Element> representatives(Bidegree b) const;
    int differential_rank(Bidegree b) const;
    Bidegree differential_target(Bidegree b) const
    {
        return {b.t - 1, b.s + r};
    }
};

PageData build_e1(const Algebra& A, const GeneratorSpec& v, const Window& w, bool localized,
                  std::vector<std::string>* warnings = nullptr);

struct PageTransition
{
    PageData current; /* input page with d_r recorded */
    PageData next;    /* E_{r+1} */
};

PageTransition apply_page(PageData page, const std::vector<ScheduleRule>& rules);
PageData apply_page(const PageData& page, const std::vector<ScheduleRule>& rules, const Algebra& A);

struct RunResult
{
    std::vector<PageData> pages; /* E_{r_1}, ..., E_{r_k} with their differentials, then the final page */
    TowerProfile towers;
    std::vector<std::string> warnings;
    int relevant_max_page = 0;
};

RunResult run(const Algebra& A, const DifferentialSchedule& sched, const Window& w, bool localized);

/* rule statistics of a schedule relative to reported degree D */
struct ScheduleFootprint
{
    int relevant_pages = 0;
    int max_relevant_page = 0;
    std::int64_t sum_relevant_pages = 0;
};
ScheduleFootprint footprint(const DifferentialSchedule& sched, std::int64_t max_degree);
Window fit_window(std::int64_t max_degree, const DifferentialSchedule& sched, bool localized);

TowerProfile extract_towers(const PageData& final_page, int max_relevant_page);

struct LocalizedSummary
{
    GradedDims dims; /* slice s = 0, internal degree -> dimension */
    std::vector<Element> generators;
    bool determinate = true;
};
LocalizedSummary localized_summary(const PageData& final_page);

/* Checks that E_r(unlocalized) -> E_r(localized) is injective on determinate bidegrees with s >= threshold.
 * Returns descriptions of failures. */
std::vector<std::string> localization_injectivity(const PageData& unlocalized, const PageData& localized, std::int64_t threshold);

/* schedules */
DifferentialSchedule schedule_v0(int p, int n, const Window& w);
DifferentialSchedule schedule_v1(int p, const Window& w, std::optional<V1Variant> variant = std::nullopt);
DifferentialSchedule schedule_v2(int p, const Window& w);
DifferentialSchedule schedule_conj(int p, int n, int m, const Window& w, std::optional<V1Variant> variant = std::nullopt);

DifferentialSchedule rescale_targets(const DifferentialSchedule& sched, Coef c);

}  // namespace bss
