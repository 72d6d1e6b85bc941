#include "bss/closed_form.hpp"

#include <functional>

#include "bss/error.hpp"
#include "bss/formulas.hpp"

namespace bss {

namespace {

std::string lam(std::int64_t i)
{
    return "λ" + std::to_string(i);
}

/* subsets of {1..k} as (mask, degree, monomial exponents on λ_1..λ_k) */
struct Subset
{
    std::int64_t degree;
    std::vector<std::int64_t> indices;
};

std::vector<Subset> exterior_subsets(int p, std::int64_t k, std::int64_t max_degree)
{
    std::vector<Subset> out{{0, {}}};
    for (std::int64_t i = 1; i <= k; ++i) {
        BigInt d = deg_lambda(p, i);
        if (d > max_degree)
            break;
        std::size_t sz = out.size();
        for (std::size_t j = 0; j < sz; ++j) {
            Subset s = out[j];
            s.degree += to_i64(d);
            if (s.degree > max_degree)
                continue;
            s.indices.push_back(i);
            out.push_back(s);
        }
    }
    return out;
}

std::string subset_name(const Subset& s)
{
    std::string r;
    for (auto i : s.indices)
        r += lam(i);
    return r;
}

/* λ-exponents and μ exponent -> monomial of thh_mod_p_algebra(p, n) */
Monomial projection(const Algebra& A, int n, const std::vector<std::int64_t>& lambdas, std::int64_t mu_exp)
{
    std::vector<std::int32_t> e(A.size(), 0);
    for (auto i : lambdas) {
        if (i < 1 || i > n + 1 || e[i - 1] != 0)
            throw Error(Errc::internal, "projection monomial is not a basis element");
        e[i - 1] = 1;
    }
    e[n + 1] = std::int32_t(mu_exp);
    return A.make_monomial(std::move(e));
}

/* λ-family products: sum of expansions, distinct bases required */
struct Expanded
{
    std::vector<std::int64_t> bases;
    BigInt mu_exp = 0;
    BigInt degree = 0;
};

Expanded expand_product(const LambdaFamily& fam, const std::vector<std::int64_t>& indices)
{
    Expanded r;
    for (auto s : indices) {
        auto e = lambda_expand(fam, s);
        r.bases.push_back(e.base);
        r.mu_exp += e.mu_exponent;
        r.degree += lambda_degree(fam, s);
    }
    return r;
}

}  // namespace

Algebra thh_mod_p_algebra(int p, int n)
{
    if (n < 0)
        throw Error(Errc::invalid_argument, "n must be >= 0");
    std::vector<GeneratorSpec> gens;
    for (int i = 1; i <= n + 1; ++i)
        gens.push_back(GeneratorSpec::exterior(lam(i), to_i64(deg_lambda(p, i))));
    gens.push_back(GeneratorSpec::polynomial("μ" + std::to_string(n + 1), to_i64(deg_mu(p, n))));
    return Algebra(p, std::move(gens));
}

GradedDims rational_thh_dims(int p, int n, std::int64_t max_degree)
{
    if (n < 0)
        throw Error(Errc::invalid_argument, "n must be >= 0");
    GradedDims out;
    for (auto& s : exterior_subsets(p, n, max_degree))
        ++out[s.degree];
    return out;
}

TowerProfile TorsionPresentation::profile() const
{
    TowerProfile prof;
    for (auto& m : free_part)
        prof.add(m.degree, TowerLength::infinite());
    for (auto& g : torsion)
        prof.add(g.degree, TowerLength::finite(g.length));
    return prof;
}

TorsionPresentation t0n_presentation(int p, int n, std::int64_t max_degree)
{
    TorsionPresentation pres{thh_mod_p_algebra(p, n), {}, {}};
    auto& A = pres.algebra;
    auto subsets = exterior_subsets(p, n, max_degree);
    for (auto& s : subsets)
        pres.free_part.push_back(projection(A, n, s.indices, 0));
    BigInt mu = deg_mu(p, n);
    for (std::int64_t i = 1; mu * i - 1 <= max_degree; ++i) {
        std::int64_t base = to_i64(mu * i - 1);
        for (auto& s : subsets) {
            std::int64_t d = base + s.degree;
            if (d > max_degree)
                continue;
            auto idx = s.indices;
            idx.push_back(n + 1);
            pres.torsion.push_back({subset_name(s) + lam(n + 1) + "(" + std::to_string(i) + ")", d, nu_p(p, i) + 1,
                                    projection(A, n, idx, i - 1)});
        }
    }
    return pres;
}

namespace {

/* common shape of the v_1, v_2 and conjectural answers:
 * free part E(λ_1..λ_f); torsion of length len(s) on
 * (λ' product over 1..f) × λ_{head(s)} × optional tails, μ^{ℓ p^{s-1}}, ℓ ≢ p-1 */
struct Family
{
    std::string name;
    std::vector<std::int64_t> lambdas; /* indices in the λ-family */
};

TorsionPresentation families_presentation(int p, int n, const LambdaFamily& fam, std::int64_t free_rank, bool free_prefix,
                                          std::int64_t max_degree,
                                          const std::function<std::vector<Family>(std::int64_t)>& families_of,
                                          const std::function<BigInt(std::int64_t)>& length_of,
                                          const std::function<std::int64_t(std::int64_t)>& head_of)
{
    TorsionPresentation pres{thh_mod_p_algebra(p, n), {}, {}};
    auto& A = pres.algebra;
    auto prefixes = exterior_subsets(p, free_rank, max_degree);
    for (auto& s : prefixes)
        pres.free_part.push_back(projection(A, n, s.indices, 0));
    if (!free_prefix)
        prefixes = {Subset{0, {}}};
    BigInt mu = deg_mu(p, n);
    for (std::int64_t s = 1; lambda_degree(fam, head_of(s)) <= max_degree; ++s) {
        BigInt step = ipow(p, s - 1) * mu;
        std::int64_t len = to_i64(length_of(s));
        for (auto& f : families_of(s)) {
            auto e = expand_product(fam, f.lambdas);
            for (std::int64_t l = 0; e.degree + step * l <= max_degree; ++l) {
                if (l % p == p - 1)
                    continue;
                std::int64_t deg = to_i64(e.degree + step * l);
                BigInt mu_exp = e.mu_exp + ipow(p, s - 1) * l;
                for (auto& pre : prefixes) {
                    if (deg + pre.degree > max_degree)
                        continue;
                    auto idx = pre.indices;
                    idx.insert(idx.end(), e.bases.begin(), e.bases.end());
                    std::string name = subset_name(pre) + f.name + "_{" + std::to_string(s) + "," + std::to_string(l) + "}";
                    pres.torsion.push_back({name, deg + pre.degree, len, projection(A, n, idx, to_i64(mu_exp))});
                }
            }
        }
    }
    return pres;
}

}  // namespace

TorsionPresentation t12_presentation(int p, std::int64_t max_degree)
{
    if (p == 2)
        throw Error(Errc::unsupported_case, "the v1 closed form assumes p >= 3");
    auto fam = LambdaFamily::v1(p);
    return families_presentation(
        p, 2, fam, 1, true, max_degree,
        [](std::int64_t s) { return std::vector<Family>{{"z", {s + 1}}, {"z'", {s + 1, s + 2}}}; },
        [p](std::int64_t s) { return r_len(p, s, 1); }, [](std::int64_t s) { return s + 1; });
}

TorsionPresentation t22_presentation(int p, std::int64_t max_degree)
{
    auto fam = LambdaFamily::v2(p);
    return families_presentation(
        p, 2, fam, 0, false, max_degree,
        [](std::int64_t s) {
            return std::vector<Family>{
                {"y", {s}}, {"y'", {s, s + 1}}, {"y''", {s, s + 2}}, {"y'''", {s, s + 1, s + 2}}};
        },
        [p](std::int64_t s) { return r_len(p, s, 2); }, [](std::int64_t s) { return s; });
}

TorsionPresentation tmn_presentation(int p, int n, int m, std::int64_t max_degree)
{
    if (m < 1 || m > n)
        throw Error(Errc::invalid_argument, "tmn needs 1 <= m <= n");
    auto fam = LambdaFamily::conj(p, n, m);
    return families_presentation(
        p, n, fam, n - m, true, max_degree,
        [n, m](std::int64_t s) {
            std::vector<Family> out;
            for (std::int64_t mask = 0; mask < (std::int64_t(1) << m); ++mask) {
                Family f{"a", {n - m + s}};
                std::string k;
                for (std::int64_t i = 1; i <= m; ++i) {
                    bool on = (mask >> (i - 1)) & 1;
                    k += on ? "1" : "0";
                    if (on)
                        f.lambdas.push_back(n - m + s + i);
                }
                f.name += "^(" + k + ")";
                out.push_back(std::move(f));
            }
            return out;
        },
        [p, n, m](std::int64_t s) { return r_conj(p, n, m, s); }, [n, m](std::int64_t s) { return n - m + s; });
}

TowerProfile t0n_profile(int p, int n, std::int64_t max_degree)
{
    return t0n_presentation(p, n, max_degree).profile();
}

TowerProfile t12_profile(int p, std::int64_t max_degree)
{
    return t12_presentation(p, max_degree).profile();
}

TowerProfile t22_profile(int p, std::int64_t max_degree)
{
    return t22_presentation(p, max_degree).profile();
}

TowerProfile tmn_profile(int p, int n, int m, std::int64_t max_degree)
{
    return tmn_presentation(p, n, m, max_degree).profile();
}

GradedDims localized_expected(LocalizedCase c, int p, std::int64_t max_degree)
{
    GradedDims out;
    if (max_degree < 0)
        return out;
    out[0] = 1;
    if (c == LocalizedCase::v1) {
        if (p == 2)
            throw Error(Errc::unsupported_case, "the localized v1 answer assumes p >= 3");
        if (2 * p - 1 <= max_degree)
            out[2 * p - 1] = 1;
    }
    return out;
}

}  // namespace bss
