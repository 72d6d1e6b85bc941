#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bss/engine.hpp"

namespace bss {

enum class CaseKind { v0, v1, v2, conj };

struct CaseSpec
{
    CaseKind kind = CaseKind::v0;
    int p = 2;
    int n = 2; /* v0 and conj; v1, v2 always use n = 2 */
    int m = 1; /* conj only */
    std::int64_t max_degree = 0;
    bool localized = false;
    std::optional<V1Variant> variant;
};

CaseKind parse_case(const std::string& name);
std::string case_name(CaseKind k);
std::optional<V1Variant> parse_variant(const std::string& name); /* "" -> nullopt */
std::string variant_name(std::optional<V1Variant> v);

struct PreparedCase
{
    Algebra base;
    DifferentialSchedule schedule;
    Window window;
};

/* builds the schedule twice: once to learn which pages matter, once on the fitted window */
PreparedCase prepare_case(const CaseSpec& c);
DifferentialSchedule build_schedule(const CaseSpec& c, const Window& w);

/* closed-form tower profile for the case; throws unsupported_case where none exists */
TowerProfile oracle_profile(const CaseSpec& c);

}  // namespace bss
