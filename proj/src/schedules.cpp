#include <limits>

#include "bss/engine.hpp"
#include "bss/error.hpp"

namespace bss {

namespace {

struct Builder
{
    int p;
    int n; /* A = thh_mod_p_algebra(p, n) */
    Algebra A;
    GeneratorSpec v;
    DifferentialSchedule sched;

    Builder(int p_, int n_, GeneratorSpec v_)
        : p(p_), n(n_), A(thh_mod_p_algebra(p_, n_)), v(v_), sched{e1_algebra(A, v_, false), v_, {}, 0, false}
    {
    }

    std::size_t mu() const
    {
        return std::size_t(n + 1);
    }
    std::size_t vslot() const
    {
        return std::size_t(n + 2);
    }

    /* λ-indices (as bases of the λ-family) times μ^e times v^k, over A ⊗ v */
    Monomial mono(const std::vector<std::int64_t>& lambdas, const BigInt& mu_exp, std::int64_t vexp) const
    {
        std::vector<std::int32_t> e(sched.algebra.size(), 0);
        for (auto i : lambdas) {
            if (e[std::size_t(i - 1)] != 0)
                return Monomial{}; /* exterior square */
            e[std::size_t(i - 1)] = 1;
        }
        if (mu_exp > std::numeric_limits<std::int32_t>::max())
            throw Error(Errc::invalid_argument, "μ exponent exceeds the supported range");
        e[mu()] = mu_exp.convert_to<std::int32_t>();
        e[vslot()] = std::int32_t(vexp);
        return sched.algebra.make_monomial(std::move(e));
    }

    void add(const BigInt& page, Monomial source, Monomial target)
    {
        if (page > std::numeric_limits<int>::max())
            throw Error(Errc::invalid_argument, "page index exceeds the supported range");
        int r = page.convert_to<int>();
        if (target.exps.empty())
            throw Error(Errc::internal, "rule target vanishes");
        sched.rules[r].push_back({std::move(source), Element::from(target, 1, p)});
        sched.max_page = std::max(sched.max_page, r);
    }
};

std::int64_t box_degree(const Window& w)
{
    return w.max_degree + w.buffer;
}

GeneratorSpec v_generator(int p, int m)
{
    return GeneratorSpec::polynomial("v" + std::to_string(m), to_i64(deg_v(p, m)));
}

/* d_{r(s)}(μ^{p^{s-1}}) = v^{r(s)} λ_{head(s)}, emitted while the source or the target is inside the box */
template <class Len, class Head>
void mu_power_rules(Builder& b, const LambdaFamily& fam, const Window& w, Len length_of, Head head_of,
                    std::int64_t last_s = std::numeric_limits<std::int64_t>::max())
{
    std::int64_t E = box_degree(w);
    BigInt mu = deg_mu(b.p, b.n);
    for (std::int64_t s = 1; s <= last_s; ++s) {
        BigInt q = ipow(b.p, s - 1);
        BigInt src = q * mu;
        std::int64_t h = head_of(s);
        BigInt tgt = lambda_degree(fam, h);
        if (src > E && tgt > E)
            break;
        BigInt r = length_of(s);
        auto ex = lambda_expand(fam, h);
        b.add(r, b.mono({}, q, 0), b.mono({ex.base}, ex.mu_exponent, to_i64(r)));
    }
}

/* Once λ_5 supports d_{r(2,1)+2}, the next μ-power differential would have to hit λ_5, so the
 * pattern is only pinned down below |λ_5|. Past that point we refuse rather than guess. */
std::int64_t lambda_diff_limit(const LambdaFamily& fam)
{
    return to_i64(lambda_degree(fam, 5));
}

void lambda_diff_rules(Builder& b, const LambdaFamily& fam, const Window& w)
{
    if (w.max_degree >= lambda_diff_limit(fam))
        throw Error(Errc::unsupported_case, "the lambda-diff pattern is only determined below degree " +
                                                std::to_string(lambda_diff_limit(fam)));
    /* d_{r(2,1)+2}(λ_5) = v^{r(2,1)+2} λ_1 λ_4 */
    BigInt r = r_len(b.p, 2, 1) + 2;
    auto es = lambda_expand(fam, 5);
    auto et = lambda_expand(fam, 4);
    b.add(r, b.mono({es.base}, es.mu_exponent, 0), b.mono({1, et.base}, et.mu_exponent, to_i64(r)));
}

}  // namespace

DifferentialSchedule schedule_v0(int p, int n, const Window& w)
{
    Builder b(p, n, GeneratorSpec::polynomial("v0", 0));
    std::int64_t E = box_degree(w);
    BigInt mu = deg_mu(p, n);
    for (std::int64_t k = 1; mu * k - 1 <= E; ++k) {
        int r = nu_p(p, k) + 1;
        b.add(r, b.mono({}, k, 0), b.mono({n + 1}, k - 1, r));
    }
    return std::move(b.sched);
}

DifferentialSchedule schedule_v1(int p, const Window& w, std::optional<V1Variant> variant)
{
    if (!v1_pattern_settled(p) && !variant)
        throw Error(Errc::ambiguous_pattern,
                    "ambiguous pattern: at p = 2 two v1 differential patterns are possible; choose a variant "
                    "(lambda-cycle or lambda-diff)");
    Builder b(p, 2, v_generator(p, 1));
    auto fam = LambdaFamily::v1(p);
    bool diff = variant == V1Variant::lambda_diff;
    if (diff)
        lambda_diff_rules(b, fam, w);
    mu_power_rules(
        b, fam, w, [p](std::int64_t s) { return r_len(p, s, 1); }, [](std::int64_t s) { return s + 1; },
        diff ? 3 : std::numeric_limits<std::int64_t>::max());
    return std::move(b.sched);
}

DifferentialSchedule schedule_v2(int p, const Window& w)
{
    Builder b(p, 2, v_generator(p, 2));
    auto fam = LambdaFamily::v2(p);
    mu_power_rules(b, fam, w, [p](std::int64_t s) { return r_len(p, s, 2); }, [](std::int64_t s) { return s; });
    return std::move(b.sched);
}

DifferentialSchedule schedule_conj(int p, int n, int m, const Window& w, std::optional<V1Variant> variant)
{
    if (m < 1 || m > n)
        throw Error(Errc::invalid_argument, "conjectural schedule needs 1 <= m <= n");
    if (m == 1 && !v1_pattern_settled(p)) {
        if (!variant)
            throw Error(Errc::ambiguous_pattern,
                        "ambiguous pattern: at p = 2 two v1 differential patterns are possible; choose a variant "
                        "(lambda-cycle or lambda-diff)");
        if (variant == V1Variant::lambda_diff && n != 2)
            throw Error(Errc::unsupported_case, "the lambda-diff variant is only defined for n = 2");
    }
    Builder b(p, n, v_generator(p, m));
    auto fam = LambdaFamily::conj(p, n, m);
    bool diff = m == 1 && variant == V1Variant::lambda_diff;
    if (diff)
        lambda_diff_rules(b, fam, w);
    mu_power_rules(
        b, fam, w, [=](std::int64_t s) { return r_conj(p, n, m, s); }, [=](std::int64_t s) { return n - m + s; },
        diff ? 3 : std::numeric_limits<std::int64_t>::max());
    b.sched.conjectural = true;
    return std::move(b.sched);
}

DifferentialSchedule rescale_targets(const DifferentialSchedule& sched, Coef c)
{
    int p = sched.algebra.prime();
    if (c % Coef(p) == 0)
        throw Error(Errc::invalid_argument, "rescaling by zero");
    DifferentialSchedule out = sched;
    for (auto& [r, rules] : out.rules)
        for (auto& rule : rules)
            rule.target = scale(rule.target, c, p);
    return out;
}

}  // namespace bss
