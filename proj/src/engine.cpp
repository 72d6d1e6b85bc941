#include "bss/engine.hpp"

#include <algorithm>
#include <limits>

#include "bss/error.hpp"

namespace bss {

namespace {

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

std::string show(Bidegree b)
{
    return "(" + std::to_string(b.t) + "," + std::to_string(b.s) + ")";
}

/* drop the trailing v slot */
Monomial strip_v(const Monomial& m, const Algebra& A)
{
    Monomial r{std::vector<std::int32_t>(m.exps.begin(), m.exps.end() - 1), 0};
    for (std::size_t i = 0; i < r.exps.size(); ++i)
        r.degree += r.exps[i] * A.generator(i).degree;
    return r;
}

}  // namespace

Algebra e1_algebra(const Algebra& A, const GeneratorSpec& v, bool localized)
{
    if (A.find(v.name))
        throw Error(Errc::invalid_argument, "v = " + v.name + " is already a generator of the algebra");
    std::vector<GeneratorSpec> gens(A.generators().begin(), A.generators().end());
    gens.push_back(localized ? GeneratorSpec::laurent(v.name, v.degree) : GeneratorSpec::polynomial(v.name, v.degree));
    return Algebra(A.prime(), std::move(gens));
}

bool E1Context::in_box(Bidegree b) const
{
    std::int64_t a = internal(b);
    if (a < 0)
        return false;
    if (localized)
        return a <= max_internal && b.s <= s_cap && b.s >= -s_cap;
    if (b.s < 0 || b.t > t_max)
        return false;
    return s_cap < 0 || b.s <= s_cap;
}

std::size_t E1Context::dim_internal(std::int64_t a) const
{
    if (a < 0)
        return 0;
    if (a <= max_internal)
        return basis[std::size_t(a)].size();
    return basis_in_degree(base, a).size();
}

bool E1Context::known_zero(Bidegree b) const
{
    if (!localized && b.s < 0)
        return true;
    return dim_internal(internal(b)) == 0;
}

Element E1Context::element(Bidegree b, const Vec& coords) const
{
    std::int64_t a = internal(b);
    Element x;
    auto& mons = basis.at(std::size_t(a));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0)
            continue;
        Monomial m{mons[i].exps, b.t};
        m.exps.push_back(std::int32_t(b.s));
        x.add_term(m, coords[i], base.prime());
    }
    return x;
}

Vec E1Context::coords(const Element& x, std::int64_t a) const
{
    if (a < 0 || a > max_internal) {
        if (x.is_zero())
            return {};
        throw Error(Errc::internal, "element outside the computed degrees");
    }
    Vec v(basis[std::size_t(a)].size(), 0);
    auto& idx = index[std::size_t(a)];
    for (auto& [m, c] : x.terms()) {
        auto it = idx.find(m);
        if (it == idx.end())
            throw Error(Errc::internal, "monomial of unexpected degree in a differential");
        v[std::size_t(it->second)] = c;
    }
    return v;
}

std::optional<Vec> cycle_coordinates(const Block& blk, Vec z)
{
    blk.boundaries.reduce(z);
    auto c = blk.reps.reduce(z);
    if (!is_zero(z))
        return std::nullopt;
    return c;
}

const Block* PageData::find(Bidegree b) const
{
    auto it = blocks.find(b);
    return it == blocks.end() ? nullptr : &it->second;
}

std::size_t PageData::dim(Bidegree b) const
{
    auto blk = find(b);
    return blk ? blk->reps.rank() : 0;
}

bool PageData::determinate(Bidegree b) const
{
    if (auto blk = find(b))
        return blk->determinate;
    return ctx->in_box(b) || ctx->known_zero(b);
}

std::vector<Element> PageData::representatives(Bidegree b) const
{
    std::vector<Element> out;
    if (auto blk = find(b))
        for (auto& row : blk->reps.rows())
            out.push_back(ctx->element(b, row));
    return out;
}

int PageData::differential_rank(Bidegree b) const
{
    auto blk = find(b);
    if (!blk || !blk->has_differential || blk->differential.empty())
        return 0;
    return rank_of(blk->differential, dim(differential_target(b)), ctx->base.prime());
}

PageData build_e1(const Algebra& A, const GeneratorSpec& v, const Window& w, bool localized, std::vector<std::string>* warnings)
{
    if (v.degree < 0)
        throw Error(Errc::invalid_argument, "v must have degree >= 0");
    if (localized && v.degree == 0)
        throw Error(Errc::invalid_argument, "localized mode needs |v| > 0");
    if (w.buffer < 1)
        throw Error(Errc::invalid_argument, "window buffer must be >= 1");
    auto ctx = std::make_shared<E1Context>(E1Context{A, e1_algebra(A, v, localized), v, localized, w, 0, 0, 0, -1, {}, {}});
    ctx->vdeg = v.degree;
    std::int64_t E = std::max<std::int64_t>(w.max_degree + w.buffer, 0);
    ctx->max_internal = E;
    ctx->t_max = E;
    if (localized)
        ctx->s_cap = w.filtration_cap >= 0 ? w.filtration_cap : E / v.degree;
    else if (v.degree == 0)
        ctx->s_cap = w.filtration_cap >= 0 ? w.filtration_cap : E + 1;
    else
        ctx->s_cap = w.filtration_cap;
    for (std::int64_t a = 0; a <= E; ++a) {
        ctx->basis.push_back(basis_in_degree(A, a));
        std::map<Monomial, int> idx;
        for (std::size_t i = 0; i < ctx->basis.back().size(); ++i)
            idx.emplace(ctx->basis.back()[i], int(i));
        ctx->index.push_back(std::move(idx));
    }
    if (warnings && w.max_degree < 0)
        warnings->push_back("empty window");

    PageData page;
    page.r = 1;
    page.ctx = ctx;
    int p = A.prime();
    for (std::int64_t a = 0; a <= E; ++a) {
        std::size_t d = ctx->basis[std::size_t(a)].size();
        if (d == 0)
            continue;
        std::int64_t s_lo = localized ? -ctx->s_cap : 0;
        for (std::int64_t s = s_lo;; ++s) {
            Bidegree b{a + s * v.degree, s};
            if (!ctx->in_box(b))
                break;
            Block blk;
            blk.internal = a;
            blk.reps = Echelon(p, d);
            blk.boundaries = Echelon(p, d);
            for (std::size_t i = 0; i < d; ++i) {
                Vec e(d, 0);
                e[i] = 1;
                blk.reps.insert(std::move(e));
            }
            page.blocks.emplace(b, std::move(blk));
        }
    }
    return page;
}

namespace {

struct CompositeRule
{
    Monomial source; /* λ · μ^c in A */
    Element target;  /* in A */
    std::size_t ext, poly;
    std::int32_t c, q;
};

struct PreparedRules
{
    std::vector<DerivationRule> generator_rules; /* over A */
    std::vector<CompositeRule> composites;
    std::vector<std::pair<Monomial, Element>> all; /* (S_A, T_A) */
    std::int64_t min_source = kNone;
    std::int64_t min_target = kNone;
};

bool unit_multiple(const Element& d, const Element& t, int p)
{
    if (t.is_zero() || d.is_zero())
        return false;
    auto& [m0, c0] = *t.terms().begin();
    Coef c = fp_mul(d.coefficient(m0), fp_inv(c0, p), p);
    return c != 0 && scale(t, c, p) == d;
}

PreparedRules prepare(const E1Context& ctx, int r, const std::vector<ScheduleRule>& rules)
{
    const Algebra& A = ctx.base;
    int p = A.prime();
    std::size_t vi = A.size();
    PreparedRules out;
    for (auto& rule : rules) {
        ctx.e1.validate(rule.source);
        ctx.e1.validate(rule.target);
        if (rule.source.exps[vi] != 0)
            throw Error(Errc::malformed_rule, "malformed rule: source contains v");
        auto deg = rule.target.degree();
        if (!deg || *deg != rule.source.degree - 1)
            throw Error(Errc::malformed_rule, "malformed rule: target degree is not source degree - 1 on page " + std::to_string(r));
        Element tA;
        for (auto& [m, c] : rule.target.terms()) {
            if (m.exps[vi] != r)
                throw Error(Errc::malformed_rule, "malformed rule: target filtration differs from the page " + std::to_string(r));
            tA.add_term(strip_v(m, A), c, p);
        }
        Monomial sA = strip_v(rule.source, A);
        out.min_source = std::min(out.min_source, sA.degree);
        out.min_target = std::min(out.min_target, sA.degree - 1 - r * ctx.vdeg);
        out.all.emplace_back(sA, tA);
    }
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < out.all.size(); ++i) {
        try {
            rule_generator(out.all[i].first, A);
        }
        catch (const Error&) {
            others.push_back(i);
            continue;
        }
        out.generator_rules.push_back({out.all[i].first, out.all[i].second});
    }
    for (auto i : others) {
        auto& [sA, tA] = out.all[i];
        Element d = derivation_on_monomial(out.generator_rules, sA, A);
        if (unit_multiple(d, tA, p))
            continue; /* already a consequence of the generator rules */
        std::vector<std::size_t> support;
        for (std::size_t g = 0; g < sA.exps.size(); ++g)
            if (sA.exps[g] != 0)
                support.push_back(g);
        bool composite = d.is_zero() && support.size() == 2;
        std::size_t ext = 0, poly = 0;
        if (composite) {
            ext = support[0];
            poly = support[1];
            if (A.generator(ext).kind != GenKind::exterior)
                std::swap(ext, poly);
            composite = A.generator(ext).kind == GenKind::exterior && A.generator(poly).kind == GenKind::polynomial;
        }
        if (!composite)
            throw Error(Errc::inconsistent_rule, "inconsistent rule on page " + std::to_string(r) +
                                                     ": source is not a generator and the generator rules disagree");
        std::int32_t c = sA.exps[poly];
        std::int32_t q = 1;
        while (q <= c)
            q *= p;
        out.composites.push_back({sA, tA, ext, poly, c, q});
    }
    return out;
}

Element page_derivation(const PreparedRules& rules, const Monomial& m, const Algebra& A)
{
    Element d = derivation_on_monomial(rules.generator_rules, m, A);
    int p = A.prime();
    for (auto& cr : rules.composites) {
        if (m.exps[cr.ext] != 1 || m.exps[cr.poly] < cr.c || m.exps[cr.poly] % cr.q != cr.c)
            continue;
        Monomial w = m;
        w.exps[cr.ext] = 0;
        w.exps[cr.poly] -= cr.c;
        w.degree -= cr.source.degree;
        auto sw = multiply_monomials(cr.source, w, A);
        if (!sw || sw->first != m)
            throw Error(Errc::internal, "composite rule factorization failed");
        for (auto& [tm, tc] : cr.target.terms()) {
            auto tw = multiply_monomials(tm, w, A);
            if (tw)
                d.add_term(tw->first, fp_mul(fp_mul(tc, tw->second, p), sw->second, p), p);
        }
    }
    return d;
}

void check_alive(const PageData& page, const PreparedRules& rules, int r)
{
    auto& ctx = *page.ctx;
    for (auto& [sA, tA] : rules.all) {
        Bidegree src{sA.degree, 0};
        if (auto blk = page.find(src); blk && blk->determinate) {
            Vec z = ctx.coords(Element::from(sA, 1, ctx.base.prime()), sA.degree);
            Vec zb = z;
            blk->boundaries.reduce(zb);
            if (is_zero(zb))
                throw Error(Errc::dead_source, "dead source: rule source in degree " + std::to_string(sA.degree) +
                                                   " is a boundary on page " + std::to_string(r));
            if (!cycle_coordinates(*blk, z))
                throw Error(Errc::dead_source, "dead source: rule source in degree " + std::to_string(sA.degree) +
                                                   " is not a cycle on page " + std::to_string(r));
        }
        Bidegree tgt{sA.degree - 1, r};
        if (auto blk = page.find(tgt); blk && blk->determinate) {
            std::int64_t a = sA.degree - 1 - r * ctx.vdeg;
            Vec z = ctx.coords(tA, a);
            Vec zb = z;
            blk->boundaries.reduce(zb);
            if (is_zero(zb) || !cycle_coordinates(*blk, z))
                throw Error(Errc::dead_target, "dead target: rule target in degree " + std::to_string(a) +
                                                   " does not survive to page " + std::to_string(r));
        }
    }
}

}  // namespace

PageTransition apply_page(PageData page, const std::vector<ScheduleRule>& rules)
{
    auto& ctx = *page.ctx;
    const Algebra& A = ctx.base;
    int p = A.prime();
    int r = page.r;
    if (r < 1)
        throw Error(Errc::malformed_rule, "malformed rule: page index must be >= 1");
    auto prepared = prepare(ctx, r, rules);
    check_alive(page, prepared, r);

    /* d_r on monomials of A, memoized by (internal degree, basis index) */
    std::map<std::pair<std::int64_t, int>, Vec> memo;
    auto d_monomial = [&](std::int64_t a, int i) -> const Vec& {
        auto key = std::make_pair(a, i);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        Element d = page_derivation(prepared, ctx.basis[std::size_t(a)][std::size_t(i)], A);
        return memo.emplace(key, ctx.coords(d, a - 1 - r * ctx.vdeg)).first->second;
    };

    for (auto& [b, blk] : page.blocks) {
        Bidegree tb{b.t - 1, b.s + r};
        blk.has_differential = true;
        blk.differential_known = true;
        blk.differential.clear();
        const Block* target = page.find(tb);
        std::size_t height = target ? target->reps.rank() : 0;
        if (blk.internal < prepared.min_source || blk.reps.rank() == 0) {
            blk.differential.assign(blk.reps.rank(), Vec(height, 0));
            continue;
        }
        if (!ctx.in_box(tb) && !ctx.known_zero(tb)) {
            blk.differential_known = false;
            blk.differential.assign(blk.reps.rank(), Vec{});
            continue;
        }
        std::int64_t a2 = blk.internal - 1 - r * ctx.vdeg;
        std::size_t width2 = a2 >= 0 && a2 <= ctx.max_internal ? ctx.basis[std::size_t(a2)].size() : 0;
        for (auto& row : blk.reps.rows()) {
            Vec w(width2, 0);
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (row[i] == 0)
                    continue;
                auto& d = d_monomial(blk.internal, int(i));
                for (std::size_t j = 0; j < d.size(); ++j)
                    if (d[j])
                        w[j] = fp_add(w[j], fp_mul(row[i], d[j], p), p);
            }
            if (!target) {
                if (!is_zero(w))
                    throw Error(Errc::internal, "d_" + std::to_string(r) + " leaves the window at " + show(b));
                blk.differential.push_back(Vec{});
                continue;
            }
            auto c = cycle_coordinates(*target, std::move(w));
            if (!c)
                throw Error(Errc::internal, "d_" + std::to_string(r) + " from " + show(b) + " does not land in the cycles of " + show(tb));
            blk.differential.push_back(std::move(*c));
        }
    }

    /* d_r ∘ d_r = 0 */
    for (auto& [b, blk] : page.blocks) {
        if (!blk.differential_known || blk.differential.empty())
            continue;
        const Block* y = page.find({b.t - 1, b.s + r});
        if (!y || !y->differential_known || y->differential.empty())
            continue;
        std::size_t hz = page.dim({b.t - 2, b.s + 2 * r});
        if (hz == 0)
            continue;
        for (auto& col : compose(y->differential, blk.differential, hz, p))
            if (!is_zero(col))
                throw Error(Errc::internal, "d_" + std::to_string(r) + " ∘ d_" + std::to_string(r) + " != 0 at " + show(b));
    }

    PageData next;
    next.r = r + 1;
    next.ctx = page.ctx;
    for (auto& [b, blk] : page.blocks) {
        Block nb;
        nb.internal = blk.internal;
        std::size_t width = blk.reps.width();
        nb.boundaries = blk.boundaries;
        nb.reps = Echelon(p, width);
        std::size_t k = blk.reps.rank();
        std::vector<Vec> ker;
        if (blk.differential_known && !blk.differential.empty() && !blk.differential.front().empty())
            ker = kernel(blk.differential, blk.differential.front().size(), p);
        else
            for (std::size_t i = 0; i < k; ++i) {
                Vec e(k, 0);
                e[i] = 1;
                ker.push_back(std::move(e));
            }
        auto lift = [&](const Vec& c) {
            Vec z(width, 0);
            for (std::size_t j = 0; j < c.size(); ++j)
                if (c[j])
                    for (std::size_t i = 0; i < width; ++i)
                        if (blk.reps.rows()[j][i])
                            z[i] = fp_add(z[i], fp_mul(c[j], blk.reps.rows()[j][i], p), p);
            return z;
        };
        Bidegree src{b.t + 1, b.s - r};
        const Block* w = page.find(src);
        std::size_t image_rank = 0;
        if (w && w->differential_known)
            for (auto& col : w->differential)
                if (!col.empty() && nb.boundaries.insert(lift(col)))
                    ++image_rank;
        for (auto& kv : ker) {
            Vec z = lift(kv);
            nb.boundaries.reduce(z);
            nb.reps.insert(std::move(z));
        }
        if (nb.reps.rank() + image_rank != ker.size())
            throw Error(Errc::internal, "dimension bookkeeping fails at " + show(b) + " on page " + std::to_string(r));

        bool det = blk.determinate;
        auto neighbour_ok = [&](Bidegree x) {
            if (ctx.in_box(x)) {
                auto nbk = page.find(x);
                return !nbk || nbk->determinate;
            }
            return ctx.known_zero(x);
        };
        if (blk.internal >= prepared.min_source)
            det = det && neighbour_ok({b.t - 1, b.s + r});
        if (blk.internal >= prepared.min_target)
            det = det && neighbour_ok(src) && (!w || w->differential_known);
        if (!blk.differential_known)
            det = false;
        nb.determinate = det;
        next.blocks.emplace(b, std::move(nb));
    }
    return {std::move(page), std::move(next)};
}

PageData apply_page(const PageData& page, const std::vector<ScheduleRule>& rules, const Algebra& A)
{
    if (!(A.generators().size() == page.ctx->base.size() &&
          std::equal(A.generators().begin(), A.generators().end(), page.ctx->base.generators().begin())))
        throw Error(Errc::foreign_generator, "foreign generator: page built over another algebra");
    return apply_page(PageData(page), rules).next;
}

ScheduleFootprint footprint(const DifferentialSchedule& sched, std::int64_t max_degree)
{
    ScheduleFootprint fp;
    for (auto& [r, rules] : sched.rules) {
        bool relevant = false;
        for (auto& rule : rules)
            relevant = relevant || rule.source.degree - 1 - r * sched.v.degree <= max_degree;
        if (!relevant)
            continue;
        ++fp.relevant_pages;
        fp.max_relevant_page = std::max(fp.max_relevant_page, r);
        fp.sum_relevant_pages += r;
    }
    return fp;
}

Window fit_window(std::int64_t max_degree, const DifferentialSchedule& sched, bool localized)
{
    auto fp = footprint(sched, max_degree);
    std::int64_t vd = sched.v.degree;
    Window w{max_degree, 1, -1};
    if (localized) {
        w.buffer = fp.relevant_pages + 1 + (fp.sum_relevant_pages + 1) * vd;
        w.filtration_cap = vd > 0 ? (max_degree + w.buffer) / vd : -1;
    }
    else {
        w.buffer = fp.relevant_pages + 1 + (fp.max_relevant_page + 1) * vd;
        if (vd == 0)
            w.filtration_cap = fp.max_relevant_page + 1 + fp.sum_relevant_pages + 1;
    }
    return w;
}

RunResult run(const Algebra& A, const DifferentialSchedule& sched, const Window& w, bool localized)
{
    RunResult res;
    if (sched.algebra.size() != A.size() + 1 ||
        !std::equal(A.generators().begin(), A.generators().end(), sched.algebra.generators().begin()))
        throw Error(Errc::foreign_generator, "foreign generator: schedule is over another algebra");
    PageData page = build_e1(A, sched.v, w, localized, &res.warnings);
    bool any_source = false;
    for (auto& [r, rules] : sched.rules)
        for (auto& rule : rules)
            any_source = any_source || rule.source.degree <= page.ctx->max_internal;
    if (!any_source)
        res.warnings.push_back("window too small to contain any rule source");
    for (auto& [r, rules] : sched.rules) {
        if (r < page.r)
            throw Error(Errc::malformed_rule, "malformed rule: schedule pages must increase");
        page.r = r;
        auto tr = apply_page(std::move(page), rules);
        res.pages.push_back(std::move(tr.current));
        page = std::move(tr.next);
    }
    res.pages.push_back(std::move(page));
    res.relevant_max_page = footprint(sched, w.max_degree).max_relevant_page;
    if (!localized)
        res.towers = extract_towers(res.pages.back(), res.relevant_max_page);
    return res;
}

TowerProfile extract_towers(const PageData& fin, int L)
{
    auto& ctx = *fin.ctx;
    int p = ctx.base.prime();
    std::int64_t D = ctx.window.max_degree;
    TowerProfile prof;
    for (std::int64_t a = 0; a <= std::min(D, ctx.max_internal); ++a) {
        if (ctx.dim_internal(a) == 0)
            continue;
        std::vector<const Block*> chain;
        for (std::int64_t s = 0;; ++s) {
            Bidegree b{a + s * ctx.vdeg, s};
            if (!ctx.in_box(b))
                break;
            auto blk = fin.find(b);
            if (!blk || !blk->determinate)
                break;
            chain.push_back(blk);
        }
        if (chain.empty()) {
            prof.add(a, TowerLength::unknown());
            continue;
        }
        std::int64_t top = std::int64_t(chain.size()) - 1;
        /* elder rule along v-multiplication: (image vector in current coordinates, birth) */
        std::vector<std::pair<Vec, std::int64_t>> alive;
        auto report = [&](std::int64_t birth, TowerLength len) {
            std::int64_t t = a + birth * ctx.vdeg;
            if (t <= D)
                prof.add(t, len);
        };
        for (std::int64_t s = 0; s <= top; ++s) {
            auto& blk = *chain[std::size_t(s)];
            std::size_t d = blk.reps.rank();
            if (s > 0) {
                /* push forward from s-1: coordinates of the previous reps here */
                auto& prev = *chain[std::size_t(s - 1)];
                std::vector<Vec> vmap;
                for (auto& row : prev.reps.rows()) {
                    auto c = cycle_coordinates(blk, row);
                    if (!c)
                        throw Error(Errc::internal, "v-multiplication leaves the cycles at internal degree " + std::to_string(a));
                    vmap.push_back(std::move(*c));
                }
                std::vector<std::pair<Vec, std::int64_t>> moved;
                Echelon seen(p, d);
                for (auto& [x, birth] : alive) {
                    Vec y = compose(vmap, {x}, d, p).front();
                    if (seen.insert(y))
                        moved.emplace_back(std::move(y), birth);
                    else
                        report(birth, TowerLength::finite(s - birth));
                }
                alive = std::move(moved);
            }
            Echelon span(p, d);
            for (auto& [x, birth] : alive)
                span.insert(x);
            for (std::size_t i = 0; i < d; ++i) {
                Vec e(d, 0);
                e[i] = 1;
                if (span.insert(e))
                    alive.emplace_back(std::move(e), s);
            }
        }
        for (auto& [x, birth] : alive)
            report(birth, top - birth + 1 > L ? TowerLength::infinite() : TowerLength::unknown());
    }
    return prof;
}

LocalizedSummary localized_summary(const PageData& fin)
{
    auto& ctx = *fin.ctx;
    LocalizedSummary out;
    for (std::int64_t a = 0; a <= std::min(ctx.window.max_degree, ctx.max_internal); ++a) {
        Bidegree b{a, 0};
        auto blk = fin.find(b);
        if (!blk)
            continue;
        out.determinate = out.determinate && blk->determinate;
        if (blk->reps.rank() == 0)
            continue;
        out.dims[a] = std::int64_t(blk->reps.rank());
        for (auto& e : fin.representatives(b))
            out.generators.push_back(e);
    }
    return out;
}

std::vector<std::string> localization_injectivity(const PageData& unloc, const PageData& loc, std::int64_t threshold)
{
    std::vector<std::string> failures;
    int p = unloc.ctx->base.prime();
    for (auto& [b, blk] : unloc.blocks) {
        if (b.s < threshold || !blk.determinate || blk.reps.rank() == 0)
            continue;
        auto lb = loc.find(b);
        if (!lb || !lb->determinate)
            continue;
        std::vector<Vec> cols;
        for (auto& row : blk.reps.rows()) {
            auto c = cycle_coordinates(*lb, row);
            if (!c) {
                failures.push_back("class at " + show(b) + " is not a cycle after localization");
                break;
            }
            cols.push_back(std::move(*c));
        }
        if (cols.size() != blk.reps.rank())
            continue;
        if (rank_of(cols, lb->reps.rank(), p) != int(cols.size()))
            failures.push_back("localization is not injective at " + show(b) + " on page " + std::to_string(unloc.r));
    }
    return failures;
}

}  // namespace bss
