#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bss {

using Coef = std::uint32_t;

bool is_prime(std::int64_t n);
Coef fp_reduce(std::int64_t c, int p);
Coef fp_inv(Coef c, int p);
inline Coef fp_neg(Coef c, int p)
{
    return c == 0 ? 0 : Coef(p) - c;
}
inline Coef fp_mul(Coef a, Coef b, int p)
{
    return Coef((std::uint64_t(a) * b) % Coef(p));
}
inline Coef fp_add(Coef a, Coef b, int p)
{
    Coef s = a + b;
    return s >= Coef(p) ? s - Coef(p) : s;
}

enum class GenKind { exterior, polynomial, truncated, divided_power, laurent };

struct GeneratorSpec
{
    std::string name;
    std::int64_t degree = 0;
    GenKind kind = GenKind::polynomial;
    int height = 0; /* truncated only: x^height = 0 */

    static GeneratorSpec exterior(std::string name, std::int64_t degree);
    static GeneratorSpec polynomial(std::string name, std::int64_t degree);
    static GeneratorSpec truncated(std::string name, std::int64_t degree, int height);
    static GeneratorSpec divided_power(std::string name, std::int64_t degree);
    static GeneratorSpec laurent(std::string name, std::int64_t degree);

    bool admits(std::int64_t e) const;
    bool operator==(const GeneratorSpec&) const = default;
};

/* Dense exponent vector, one slot per (expanded) generator of the owning algebra.
 * Order: degree first, then exponents lexicographically by generator index. */
struct Monomial
{
    std::vector<std::int32_t> exps;
    std::int64_t degree = 0;

    bool is_unit() const;
    bool operator==(const Monomial&) const = default;
    std::strong_ordering operator<=>(const Monomial& o) const
    {
        if (auto c = degree <=> o.degree; c != 0)
            return c;
        return exps <=> o.exps;
    }
};

class Element
{
public:
    using Terms = std::map<Monomial, Coef>;

    Element() = default;
    static Element from(const Monomial& m, Coef c, int p);

    const Terms& terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    std::optional<std::int64_t> degree() const; /* nullopt for zero or inhomogeneous */
    Coef coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, Coef c, int p);
    bool operator==(const Element&) const = default;

private:
    Terms terms_;
};

class Algebra
{
public:
    /* Divided-power generators expand into truncated(p) factors γ_{p^i} with
     * p^i·|x| <= divided_power_bound. */
    Algebra(int p, std::vector<GeneratorSpec> generators, std::int64_t divided_power_bound = -1);

    int prime() const noexcept
    {
        return p_;
    }
    std::size_t size() const noexcept
    {
        return gens_.size();
    }
    std::span<const GeneratorSpec> generators() const noexcept
    {
        return gens_;
    }
    const GeneratorSpec& generator(std::size_t i) const
    {
        return gens_.at(i);
    }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index(std::string_view name) const; /* throws foreign generator */

    Monomial unit() const;
    Monomial make_monomial(std::vector<std::int32_t> exps) const;
    Monomial monomial(std::initializer_list<std::pair<std::string_view, std::int32_t>> powers) const;
    Monomial generator_monomial(std::size_t i, std::int32_t e = 1) const;
    Element element(const Monomial& m, Coef c = 1) const;

    /* γ_k(x) for a divided-power generator x given at construction */
    Element divided_power(std::string_view name, std::int64_t k) const;

    void validate(const Monomial& m) const;
    void validate(const Element& x) const;
    bool has_laurent() const;

private:
    struct DividedFamily
    {
        std::string name;
        std::int64_t degree;
        std::vector<std::size_t> factors; /* index of γ_{p^i} */
    };
    int p_;
    std::vector<GeneratorSpec> gens_;
    std::vector<DividedFamily> divided_;
};

Element add(const Element& a, const Element& b, int p);
Element scale(const Element& a, Coef c, int p);

/* product of two monomials as (monomial, ±1 or 0) */
std::optional<std::pair<Monomial, Coef>> multiply_monomials(const Monomial& a, const Monomial& b, const Algebra& A);
Element multiply(const Element& a, const Element& b, const Algebra& A);

std::vector<Monomial> basis_in_degree(const Algebra& A, std::int64_t d, std::optional<std::int64_t> filtration_cap = {});

struct DerivationRule
{
    Monomial source; /* g^{p^k} for a generator g */
    Element target;
};

/* d(g^e) = (floor(e/q) mod p) g^{e-q} d(g^q) for a rule on g^q, extended with Koszul signs.
 * With q = 1 this is the ordinary derivation generated by the rules. */
Element derivation_extend(std::span<const DerivationRule> rules, const Element& x, const Algebra& A);

/* as above without the degree check, on one monomial; used by the engine */
Element derivation_on_monomial(std::span<const DerivationRule> rules, const Monomial& m, const Algebra& A);

/* (generator index, q) of a rule source, throws on non-generators */
std::pair<std::size_t, std::int32_t> rule_generator(const Monomial& source, const Algebra& A);

}  // namespace bss
