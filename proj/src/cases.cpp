#include "bss/cases.hpp"

#include "bss/error.hpp"

namespace bss {

CaseKind parse_case(const std::string& name)
{
    if (name == "v0")
        return CaseKind::v0;
    if (name == "v1")
        return CaseKind::v1;
    if (name == "v2")
        return CaseKind::v2;
    if (name == "conj")
        return CaseKind::conj;
    throw Error(Errc::invalid_argument, "unknown case '" + name + "' (v0, v1, v2, conj)");
}

std::string case_name(CaseKind k)
{
    switch (k) {
    case CaseKind::v0:
        return "v0";
    case CaseKind::v1:
        return "v1";
    case CaseKind::v2:
        return "v2";
    case CaseKind::conj:
        return "conj";
    }
    return "?";
}

std::optional<V1Variant> parse_variant(const std::string& name)
{
    if (name.empty())
        return std::nullopt;
    if (name == "lambda-cycle")
        return V1Variant::lambda_cycle;
    if (name == "lambda-diff")
        return V1Variant::lambda_diff;
    throw Error(Errc::invalid_argument, "unknown variant '" + name + "' (lambda-cycle, lambda-diff)");
}

std::string variant_name(std::optional<V1Variant> v)
{
    if (!v)
        return "";
    return *v == V1Variant::lambda_cycle ? "lambda-cycle" : "lambda-diff";
}

DifferentialSchedule build_schedule(const CaseSpec& c, const Window& w)
{
    if (!is_prime(c.p))
        throw Error(Errc::invalid_argument, "p must be prime");
    switch (c.kind) {
    case CaseKind::v0:
        if (c.n < 0)
            throw Error(Errc::invalid_argument, "n must be >= 0");
        return schedule_v0(c.p, c.n, w);
    case CaseKind::v1:
        return schedule_v1(c.p, w, c.variant);
    case CaseKind::v2:
        return schedule_v2(c.p, w);
    case CaseKind::conj:
        return schedule_conj(c.p, c.n, c.m, w, c.variant);
    }
    throw Error(Errc::internal, "unreachable case");
}

PreparedCase prepare_case(const CaseSpec& c)
{
    if (c.max_degree < 0)
        throw Error(Errc::invalid_argument, "max degree must be >= 0");
    auto first = build_schedule(c, Window{c.max_degree, 1});
    Window w = fit_window(c.max_degree, first, c.localized);
    auto sched = build_schedule(c, w);
    int n = (c.kind == CaseKind::v1 || c.kind == CaseKind::v2) ? 2 : c.n;
    return {thh_mod_p_algebra(c.p, n), std::move(sched), w};
}

TowerProfile oracle_profile(const CaseSpec& c)
{
    if (c.localized)
        throw Error(Errc::unsupported_case, "no tower oracle for localized runs");
    switch (c.kind) {
    case CaseKind::v0:
        return t0n_profile(c.p, c.n, c.max_degree);
    case CaseKind::v1:
        if (!v1_pattern_settled(c.p))
            throw Error(Errc::unsupported_case, "no closed form for v1 at p = 2");
        return t12_profile(c.p, c.max_degree);
    case CaseKind::v2:
        return t22_profile(c.p, c.max_degree);
    case CaseKind::conj:
        return tmn_profile(c.p, c.n, c.m, c.max_degree);
    }
    throw Error(Errc::internal, "unreachable case");
}

}  // namespace bss
