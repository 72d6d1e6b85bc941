#include <doctest.h>

#include "bss/closed_form.hpp"
#include "bss/engine.hpp"
#include "bss/error.hpp"

using namespace bss;

namespace {

TowerProfile profile_of(std::initializer_list<std::pair<std::int64_t, std::vector<TowerLength>>> cols)
{
    TowerProfile t;
    for (auto& [deg, lens] : cols)
        for (auto& l : lens)
            t.add(deg, l);
    return t;
}

const TowerLength inf = TowerLength::infinite();
TowerLength len(std::int64_t k)
{
    return TowerLength::finite(k);
}

std::vector<std::int64_t> degrees_of(const Algebra& A)
{
    std::vector<std::int64_t> d;
    for (auto& g : A.generators())
        d.push_back(g.degree);
    return d;
}

/* columns whose multiset contains ∞, with multiplicity */
GradedDims free_part(const TowerProfile& t)
{
    GradedDims out;
    for (auto& [deg, col] : t.columns())
        for (auto& l : col)
            if (l.kind == TowerLength::Kind::infinite)
                ++out[deg];
    return out;
}

}  // namespace

TEST_SUITE("closed-form")
{
    TEST_CASE("mod p THH algebras")
    {
        CHECK(degrees_of(thh_mod_p_algebra(2, 2)) == std::vector<std::int64_t>{3, 7, 15, 16});
        CHECK(degrees_of(thh_mod_p_algebra(3, 2)) == std::vector<std::int64_t>{5, 17, 53, 54});
        CHECK(degrees_of(thh_mod_p_algebra(5, 0)) == std::vector<std::int64_t>{9, 10});
        auto A = thh_mod_p_algebra(2, 2);
        CHECK(A.generator(3).name == "μ3");
        CHECK(A.generator(0).kind == GenKind::exterior);
        CHECK(A.generator(3).kind == GenKind::polynomial);
    }

    TEST_CASE("rational THH")
    {
        CHECK(rational_thh_dims(3, 2, 30) == GradedDims{{0, 1}, {5, 1}, {17, 1}, {22, 1}});
        CHECK(rational_thh_dims(2, 2, 12) == GradedDims{{0, 1}, {3, 1}, {7, 1}, {10, 1}});
        CHECK(rational_thh_dims(7, 0, 500) == GradedDims{{0, 1}});
    }

    TEST_CASE("v0 torsion profile")
    {
        auto t = t0n_profile(2, 2, 58);
        auto expect = profile_of({{0, {inf}}, {3, {inf}}, {7, {inf}}, {10, {inf}},
                                  {15, {len(1)}}, {18, {len(1)}}, {22, {len(1)}}, {25, {len(1)}},
                                  {31, {len(2)}}, {34, {len(2)}}, {38, {len(2)}}, {41, {len(2)}},
                                  {47, {len(1)}}, {50, {len(1)}}, {54, {len(1)}}, {57, {len(1)}}});
        CHECK(t == expect);

        // n = 0: ∞ at 0, then length ν_p(i)+1 at 2ip - 1
        for (int p : {2, 3, 5}) {
            auto b = t0n_profile(p, 0, 400);
            TowerProfile e;
            e.add(0, inf);
            for (std::int64_t i = 1; 2 * i * p - 1 <= 400; ++i) {
                std::int64_t k = i, v = 0;
                while (k % p == 0) {
                    k /= p;
                    ++v;
                }
                e.add(2 * i * p - 1, len(v + 1));
            }
            CHECK(b == e);
        }
    }

    TEST_CASE("free parts agree with rational THH")
    {
        for (int p : {2, 3})
            for (int n = 0; n <= 3; ++n) {
                std::int64_t D = p == 2 ? 200 : 400;
                CHECK(free_part(t0n_profile(p, n, D)) == rational_thh_dims(p, n, D));
            }
    }

    TEST_CASE("v1 torsion profile")
    {
        auto t10 = t12_profile(3, 10);
        CHECK(t10 == profile_of({{0, {inf}}, {5, {inf}}}));
        auto t = t12_profile(3, 400);
        for (std::int64_t d : {17, 22, 70, 75})
            CHECK(t.at(d) == std::vector<TowerLength>{len(9)});
        for (std::int64_t d : {53, 58, 178, 183})
            CHECK(t.at(d) == std::vector<TowerLength>{len(27)});
        for (std::int64_t d : {125, 130})
            CHECK(t.at(d) == std::vector<TowerLength>{len(90)});
        CHECK(free_part(t) == GradedDims{{0, 1}, {5, 1}});
        try {
            t12_profile(2, 100);
            FAIL("expected an error");
        }
        catch (const Error& e) {
            CHECK(e.code() == Errc::unsupported_case);
        }
    }

    TEST_CASE("v2 torsion profile")
    {
        CHECK(t22_profile(2, 4) == profile_of({{0, {inf}}, {3, {len(2)}}}));
        CHECK(t22_profile(3, 6) == profile_of({{0, {inf}}, {5, {len(3)}}}));
        auto t = t22_profile(2, 20);
        for (std::int64_t d : {3, 10, 18})
            CHECK(t.at(d) == std::vector<TowerLength>{len(2)});
    }

    TEST_CASE("conjectural profile specializes")
    {
        for (int p : {3, 5}) {
            CHECK(tmn_profile(p, 2, 1, 400) == t12_profile(p, 400));
            CHECK(tmn_profile(p, 2, 2, 300) == t22_profile(p, 300));
        }
        CHECK_THROWS_AS(tmn_profile(3, 2, 3, 100), Error);
    }

    TEST_CASE("profiles are finite and within the window")
    {
        for (auto t : {t0n_profile(3, 2, 300), t12_profile(3, 400), t22_profile(2, 160), tmn_profile(3, 3, 1, 200)}) {
            CHECK(t.total() < 10000);
            for (auto& [deg, col] : t.columns()) {
                CHECK(deg >= 0);
                for (auto& l : col)
                    CHECK((l.kind == TowerLength::Kind::infinite || l.length >= 1));
            }
        }
    }

    TEST_CASE("presentation bookkeeping")
    {
        auto pres = t12_presentation(3, 200);
        for (auto& g : pres.torsion) {
            CHECK(g.degree == g.projection.degree);
            CHECK(g.length >= 1);
        }
        CHECK(pres.profile() == t12_profile(3, 200));
    }

    TEST_CASE("localized answers")
    {
        CHECK(localized_expected(LocalizedCase::v1, 3, 120) == GradedDims{{0, 1}, {5, 1}});
        CHECK(localized_expected(LocalizedCase::v2, 2, 120) == GradedDims{{0, 1}});
        CHECK(localized_expected(LocalizedCase::v2, 3, 120) == GradedDims{{0, 1}});
    }

    TEST_CASE("compare")
    {
        Window w{100};
        auto a = profile_of({{0, {inf}}, {17, {len(9)}}});
        CHECK(compare(a, a, w).mismatches.empty());
        CHECK(compare(a, a, w).unverified.empty());

        auto b = profile_of({{0, {inf}}, {17, {len(27)}}});
        auto rep = compare(a, b, w);
        REQUIRE(rep.mismatches.size() == 1);
        CHECK(rep.mismatches[0].t == 17);
        CHECK(rep.mismatches[0].engine == std::vector<TowerLength>{len(9)});
        CHECK(rep.mismatches[0].oracle == std::vector<TowerLength>{len(27)});
        CHECK(format_report(rep).find("t=17") != std::string::npos);

        auto u = profile_of({{0, {inf}}, {17, {TowerLength::unknown()}}});
        auto rep2 = compare(u, a, w);
        CHECK(rep2.ok());
        CHECK(rep2.unverified.size() == 1);

        // a known entry that the oracle lacks is still a mismatch
        auto u2 = profile_of({{0, {inf}}, {17, {len(3), TowerLength::unknown()}}});
        CHECK_FALSE(compare(u2, a, w).ok());

        // beyond the window nothing is compared
        auto far = profile_of({{0, {inf}}, {17, {len(9)}}, {150, {len(1)}}});
        CHECK(compare(far, a, w).ok());
    }
}
