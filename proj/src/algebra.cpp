#include "bss/algebra.hpp"

#include <algorithm>

#include "bss/error.hpp"

namespace bss {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Coef fp_reduce(std::int64_t c, int p)
{
    std::int64_t r = c % p;
    return Coef(r < 0 ? r + p : r);
}

Coef fp_inv(Coef c, int p)
{
    if (c % p == 0)
        throw Error(Errc::internal, "inverse of zero in F_p");
    /* p is small; Fermat */
    std::uint64_t base = c % p, result = 1;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return Coef(result);
}

GeneratorSpec GeneratorSpec::exterior(std::string name, std::int64_t degree)
{
    return {std::move(name), degree, GenKind::exterior, 0};
}
GeneratorSpec GeneratorSpec::polynomial(std::string name, std::int64_t degree)
{
    return {std::move(name), degree, GenKind::polynomial, 0};
}
GeneratorSpec GeneratorSpec::truncated(std::string name, std::int64_t degree, int height)
{
    return {std::move(name), degree, GenKind::truncated, height};
}
GeneratorSpec GeneratorSpec::divided_power(std::string name, std::int64_t degree)
{
    return {std::move(name), degree, GenKind::divided_power, 0};
}
GeneratorSpec GeneratorSpec::laurent(std::string name, std::int64_t degree)
{
    return {std::move(name), degree, GenKind::laurent, 0};
}

bool GeneratorSpec::admits(std::int64_t e) const
{
    switch (kind) {
    case GenKind::exterior:
        return e == 0 || e == 1;
    case GenKind::polynomial:
    case GenKind::divided_power:
        return e >= 0;
    case GenKind::truncated:
        return e >= 0 && e < height;
    case GenKind::laurent:
        return true;
    }
    return false;
}

bool Monomial::is_unit() const
{
    return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

Element Element::from(const Monomial& m, Coef c, int p)
{
    Element x;
    x.add_term(m, c, p);
    return x;
}

std::optional<std::int64_t> Element::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    auto d = terms_.begin()->first.degree;
    for (auto& [m, c] : terms_)
        if (m.degree != d)
            return std::nullopt;
    return d;
}

Coef Element::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void Element::add_term(const Monomial& m, Coef c, int p)
{
    c %= Coef(p);
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second = fp_add(it->second, c, p);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Algebra::Algebra(int p, std::vector<GeneratorSpec> generators, std::int64_t divided_power_bound) : p_(p)
{
    if (!is_prime(p))
        throw Error(Errc::invalid_argument, "p = " + std::to_string(p) + " is not prime");
    for (auto& g : generators) {
        if (g.degree < 0)
            throw Error(Errc::invalid_argument, "generator " + g.name + " has negative degree");
        if (g.kind == GenKind::truncated && g.height < 2)
            throw Error(Errc::invalid_argument, "truncated generator " + g.name + " needs height >= 2");
        if (p != 2 && g.kind == GenKind::exterior && g.degree % 2 == 0)
            throw Error(Errc::invalid_argument, "exterior generator " + g.name + " has even degree at odd p");
        if (p != 2 && g.kind != GenKind::exterior && g.degree % 2 != 0)
            throw Error(Errc::invalid_argument, "generator " + g.name + " of odd degree must be exterior at odd p");
        if (g.kind != GenKind::divided_power) {
            gens_.push_back(g);
            continue;
        }
        if (g.degree == 0)
            throw Error(Errc::invalid_argument, "divided-power generator " + g.name + " of degree 0");
        if (divided_power_bound < 0)
            throw Error(Errc::infinite_basis, "divided-power generator " + g.name + " needs a degree bound");
        DividedFamily fam{g.name, g.degree, {}};
        for (std::int64_t q = 1; q * g.degree <= divided_power_bound; q *= p) {
            fam.factors.push_back(gens_.size());
            gens_.push_back(GeneratorSpec::truncated("γ" + std::to_string(q) + "(" + g.name + ")", q * g.degree, p));
        }
        divided_.push_back(std::move(fam));
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gens_[i].name == gens_[j].name)
                throw Error(Errc::invalid_argument, "duplicate generator name " + gens_[i].name);
}

std::optional<std::size_t> Algebra::find(std::string_view name) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

std::size_t Algebra::index(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw Error(Errc::foreign_generator, "foreign generator " + std::string(name));
}

Monomial Algebra::unit() const
{
    return Monomial{std::vector<std::int32_t>(gens_.size(), 0), 0};
}

Monomial Algebra::make_monomial(std::vector<std::int32_t> exps) const
{
    Monomial m{std::move(exps), 0};
    if (m.exps.size() != gens_.size())
        throw Error(Errc::foreign_generator, "foreign generator: exponent vector does not match the algebra");
    for (std::size_t i = 0; i < gens_.size(); ++i)
        m.degree += m.exps[i] * gens_[i].degree;
    validate(m);
    return m;
}

Monomial Algebra::monomial(std::initializer_list<std::pair<std::string_view, std::int32_t>> powers) const
{
    std::vector<std::int32_t> e(gens_.size(), 0);
    for (auto& [name, k] : powers)
        e[index(name)] += k;
    return make_monomial(std::move(e));
}

Monomial Algebra::generator_monomial(std::size_t i, std::int32_t e) const
{
    std::vector<std::int32_t> v(gens_.size(), 0);
    v.at(i) = e;
    return make_monomial(std::move(v));
}

Element Algebra::element(const Monomial& m, Coef c) const
{
    validate(m);
    return Element::from(m, c, p_);
}

Element Algebra::divided_power(std::string_view name, std::int64_t k) const
{
    auto fam = std::find_if(divided_.begin(), divided_.end(), [&](auto& f) { return f.name == name; });
    if (fam == divided_.end())
        throw Error(Errc::foreign_generator, "foreign generator " + std::string(name));
    if (k < 0)
        return {};
    /* γ_k = Π γ_{p^i}^{k_i} / k_i! over the base-p digits of k */
    std::vector<std::int32_t> e(gens_.size(), 0);
    Coef denom = 1;
    std::int64_t rest = k;
    for (std::size_t i = 0; rest > 0; ++i, rest /= p_) {
        std::int32_t digit = std::int32_t(rest % p_);
        if (digit == 0)
            continue;
        if (i >= fam->factors.size())
            throw Error(Errc::infinite_basis, "divided power beyond the expansion bound");
        e[fam->factors[i]] = digit;
        for (int j = 2; j <= digit; ++j)
            denom = fp_mul(denom, Coef(j), p_);
    }
    return Element::from(make_monomial(std::move(e)), fp_inv(denom, p_), p_);
}

void Algebra::validate(const Monomial& m) const
{
    if (m.exps.size() != gens_.size())
        throw Error(Errc::foreign_generator, "foreign generator: monomial from another algebra");
    std::int64_t d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!gens_[i].admits(m.exps[i]))
            throw Error(Errc::foreign_generator, "foreign generator: exponent not allowed for " + gens_[i].name);
        d += m.exps[i] * gens_[i].degree;
    }
    if (d != m.degree)
        throw Error(Errc::foreign_generator, "foreign generator: stored degree does not match the algebra");
}

void Algebra::validate(const Element& x) const
{
    for (auto& [m, c] : x.terms()) {
        validate(m);
        if (c == 0 || c >= Coef(p_))
            throw Error(Errc::foreign_generator, "foreign generator: coefficient outside F_p");
    }
}

bool Algebra::has_laurent() const
{
    return std::any_of(gens_.begin(), gens_.end(), [](auto& g) { return g.kind == GenKind::laurent; });
}

Element add(const Element& a, const Element& b, int p)
{
    Element r = a;
    for (auto& [m, c] : b.terms())
        r.add_term(m, c, p);
    return r;
}

Element scale(const Element& a, Coef c, int p)
{
    Element r;
    for (auto& [m, k] : a.terms())
        r.add_term(m, fp_mul(k, c % Coef(p), p), p);
    return r;
}

std::optional<std::pair<Monomial, Coef>> multiply_monomials(const Monomial& a, const Monomial& b, const Algebra& A)
{
    auto gens = A.generators();
    std::size_t n = gens.size();
    if (a.exps.size() != n || b.exps.size() != n)
        throw Error(Errc::foreign_generator, "foreign generator: monomial from another algebra");
    Monomial r{std::vector<std::int32_t>(n), a.degree + b.degree};
    /* moving b's factor j left past a's factors i > j costs (-1)^{|a_i||b_j|} */
    int sign = 0, odd_tail = 0;
    for (std::size_t k = n; k-- > 0;) {
        bool odd = gens[k].degree % 2 != 0;
        if (odd && (b.exps[k] & 1))
            sign ^= odd_tail;
        if (odd && (a.exps[k] & 1))
            odd_tail ^= 1;
        std::int64_t e = std::int64_t(a.exps[k]) + b.exps[k];
        if (!gens[k].admits(e))
            return std::nullopt;
        r.exps[k] = std::int32_t(e);
    }
    Coef c = sign && A.prime() != 2 ? Coef(A.prime() - 1) : 1;
    return std::make_pair(std::move(r), c);
}

Element multiply(const Element& a, const Element& b, const Algebra& A)
{
    A.validate(a);
    A.validate(b);
    int p = A.prime();
    Element r;
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms())
            if (auto prod = multiply_monomials(ma, mb, A))
                r.add_term(prod->first, fp_mul(fp_mul(ca, cb, p), prod->second, p), p);
    return r;
}

namespace {

void enumerate(const Algebra& A, std::size_t i, std::int64_t rem, std::int32_t cap, std::vector<std::int32_t>& cur,
               std::vector<Monomial>& out, const std::vector<std::int64_t>& max_rest, const std::vector<std::int64_t>& min_rest)
{
    auto gens = A.generators();
    if (i == gens.size()) {
        if (rem == 0)
            out.push_back(Monomial{cur, 0});
        return;
    }
    if (rem > max_rest[i] || rem < min_rest[i])
        return;
    auto& g = gens[i];
    std::int64_t lo = 0, hi = 0;
    switch (g.kind) {
    case GenKind::exterior:
        hi = 1;
        break;
    case GenKind::truncated:
        hi = g.height - 1;
        break;
    case GenKind::polynomial:
    case GenKind::divided_power:
        hi = g.degree == 0 ? cap : (rem - min_rest[i + 1]) / g.degree;
        break;
    case GenKind::laurent:
        lo = -cap;
        hi = cap;
        break;
    }
    for (std::int64_t e = lo; e <= hi; ++e) {
        if (e * g.degree > rem - min_rest[i + 1])
            break;
        cur[i] = std::int32_t(e);
        enumerate(A, i + 1, rem - e * g.degree, cap, cur, out, max_rest, min_rest);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Monomial> basis_in_degree(const Algebra& A, std::int64_t d, std::optional<std::int64_t> filtration_cap)
{
    auto gens = A.generators();
    bool unbounded = false;
    for (auto& g : gens)
        if (g.kind == GenKind::laurent || ((g.kind == GenKind::polynomial) && g.degree == 0))
            unbounded = true;
    if (unbounded && !filtration_cap)
        throw Error(Errc::infinite_basis, "infinite basis: unbounded generator without a filtration cap");
    if (d < 0 && !A.has_laurent())
        return {};
    std::int32_t cap = filtration_cap ? std::int32_t(std::max<std::int64_t>(*filtration_cap, 0)) : 0;
    /* degree reachable by generators i.. ; max is "infinite" for unbounded polynomials */
    std::size_t n = gens.size();
    const std::int64_t inf = std::int64_t(1) << 60;
    std::vector<std::int64_t> max_rest(n + 1, 0), min_rest(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        auto& g = gens[i];
        std::int64_t hi = 0, lo = 0;
        switch (g.kind) {
        case GenKind::exterior:
            hi = g.degree;
            break;
        case GenKind::truncated:
            hi = g.degree * (g.height - 1);
            break;
        case GenKind::polynomial:
        case GenKind::divided_power:
            hi = g.degree == 0 ? 0 : inf;
            break;
        case GenKind::laurent:
            hi = g.degree * cap;
            lo = -g.degree * cap;
            break;
        }
        max_rest[i] = std::min(inf, max_rest[i + 1] + hi);
        min_rest[i] = min_rest[i + 1] + lo;
    }
    std::vector<Monomial> out;
    std::vector<std::int32_t> cur(n, 0);
    enumerate(A, 0, d, cap, cur, out, max_rest, min_rest);
    for (auto& m : out)
        m.degree = d;
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::size_t, std::int32_t> rule_generator(const Monomial& source, const Algebra& A)
{
    A.validate(source);
    std::optional<std::size_t> gi;
    for (std::size_t i = 0; i < source.exps.size(); ++i) {
        if (source.exps[i] == 0)
            continue;
        if (gi)
            throw Error(Errc::malformed_rule, "rule on a non-generator: source has several factors");
        gi = i;
    }
    if (!gi)
        throw Error(Errc::malformed_rule, "rule on a non-generator: source is the unit");
    std::int64_t q = source.exps[*gi];
    std::int64_t x = q;
    while (x % A.prime() == 0)
        x /= A.prime();
    if (x != 1)
        throw Error(Errc::malformed_rule, "rule on a non-generator: exponent is not a power of p");
    return {*gi, std::int32_t(q)};
}

Element derivation_on_monomial(std::span<const DerivationRule> rules, const Monomial& m, const Algebra& A)
{
    int p = A.prime();
    auto gens = A.generators();
    Element out;
    for (auto& rule : rules) {
        auto [g, q] = rule_generator(rule.source, A);
        std::int64_t e = m.exps[g];
        std::int64_t digit;
        if (gens[g].kind == GenKind::laurent) {
            if (q != 1)
                throw Error(Errc::malformed_rule, "rule on a power of a Laurent generator");
            digit = e;
        }
        else {
            if (e < q)
                continue;
            digit = e / q;
        }
        Coef c = fp_reduce(digit, p);
        if (c == 0)
            continue;
        /* m = prefix · g^e · suffix; D passes the prefix with sign (-1)^{|prefix|} */
        Monomial prefix = A.unit(), rest = A.unit();
        for (std::size_t i = 0; i < g; ++i) {
            prefix.exps[i] = m.exps[i];
            prefix.degree += m.exps[i] * gens[i].degree;
        }
        rest.exps[g] = std::int32_t(e - q);
        rest.degree = (e - q) * gens[g].degree;
        Monomial suffix = A.unit();
        for (std::size_t i = g + 1; i < m.exps.size(); ++i) {
            suffix.exps[i] = m.exps[i];
            suffix.degree += m.exps[i] * gens[i].degree;
        }
        if (prefix.degree % 2 != 0)
            c = fp_neg(c, p);
        /* prefix·g^{e-q} · T · suffix */
        auto left = multiply_monomials(prefix, rest, A);
        if (!left)
            continue;
        for (auto& [tm, tc] : rule.target.terms()) {
            auto lt = multiply_monomials(left->first, tm, A);
            if (!lt)
                continue;
            auto lts = multiply_monomials(lt->first, suffix, A);
            if (!lts)
                continue;
            Coef k = fp_mul(fp_mul(fp_mul(c, left->second, p), lt->second, p), fp_mul(tc, lts->second, p), p);
            out.add_term(lts->first, k, p);
        }
    }
    return out;
}

Element derivation_extend(std::span<const DerivationRule> rules, const Element& x, const Algebra& A)
{
    A.validate(x);
    for (auto& rule : rules) {
        rule_generator(rule.source, A);
        A.validate(rule.target);
        for (auto& [tm, tc] : rule.target.terms())
            if (tm.degree != rule.source.degree - 1)
                throw Error(Errc::malformed_rule, "malformed rule: target degree is not source degree - 1");
    }
    int p = A.prime();
    Element out;
    for (auto& [m, c] : x.terms()) {
        Element d = derivation_on_monomial(rules, m, A);
        for (auto& [dm, dc] : d.terms())
            out.add_term(dm, fp_mul(c, dc, p), p);
    }
    return out;
}

}  // namespace bss
