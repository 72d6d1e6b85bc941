#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bss/engine.hpp"

namespace bss {

enum class NameStyle { utf8, ascii };

/* "λ1·μ3^2·v0^3"; the unit monomial is "1" */
std::string format_monomial(const Monomial& m, const Algebra& A, NameStyle style = NameStyle::utf8);
/* terms "c·monomial" joined by " + ", coefficient 1 omitted; zero is "0" */
std::string format_element(const Element& x, const Algebra& A, NameStyle style = NameStyle::utf8);
std::string to_ascii(std::string_view utf8);
Monomial parse_monomial(std::string_view text, const Algebra& A);
Element parse_element(std::string_view text, const Algebra& A);

struct ClassSummary
{
    Bidegree at;
    std::vector<Element> reps; /* over A ⊗ v */
    bool determinate = true;
    bool operator==(const ClassSummary&) const = default;
};

struct DifferentialSummary
{
    Bidegree from;
    Bidegree to;
    int rank = 0;
    bool operator==(const DifferentialSummary&) const = default;
};

/* what a page looks like from the outside: classes, differential ranks, v-multiplication ranks */
struct PageSummary
{
    int r = 1;
    std::vector<ClassSummary> classes;
    std::vector<DifferentialSummary> differentials;
    std::vector<DifferentialSummary> v_products; /* not serialized */
};

/* classes with 0 <= t <= D (|t| <= D when localized) and nonzero dimension */
PageSummary summarize(const PageData& page);

struct RunMeta
{
    std::string case_name;
    int p = 2;
    int n = 0;
    int m = 0;
    std::int64_t max_degree = 0;
    bool localized = false;
    std::string variant;
    bool conjectural = false;
    bool operator==(const RunMeta&) const = default;
};

inline constexpr const char* kToolVersion = "bss 1.0.0";

nlohmann::ordered_json emit_json(const RunMeta& meta, const std::vector<PageSummary>& pages, const TowerProfile& towers,
                                 const Algebra& e1, NameStyle style = NameStyle::utf8);

struct JsonDocument
{
    RunMeta meta;
    std::vector<PageSummary> pages;
    TowerProfile towers;
};
JsonDocument parse_json(const nlohmann::ordered_json& doc, const Algebra& e1);

struct ChartStyle
{
    std::int64_t vdeg = 0;        /* slant of v-towers: one step right per filtration is vdeg */
    std::int64_t max_degree = 0;  /* x range 0..max_degree */
    double unit = 14.0;           /* pixels per degree / filtration step */
    std::int64_t tick_step = 10;
    NameStyle names = NameStyle::utf8;
};

std::string emit_svg(const std::vector<PageSummary>& pages, const ChartStyle& style);

}  // namespace bss
