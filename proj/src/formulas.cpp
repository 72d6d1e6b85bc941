#include "bss/formulas.hpp"

#include <limits>
#include <string>

#include "bss/error.hpp"

namespace bss {

BigInt ipow(std::int64_t p, std::int64_t e)
{
    if (e < 0)
        throw Error(Errc::invalid_argument, "negative exponent");
    BigInt r = 1;
    for (std::int64_t i = 0; i < e; ++i)
        r *= p;
    return r;
}

std::int64_t to_i64(const BigInt& x)
{
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw Error(Errc::invalid_argument, "value exceeds 64-bit range: " + x.str());
    return x.convert_to<std::int64_t>();
}

int nu_p(std::int64_t p, std::int64_t k)
{
    if (k <= 0)
        throw Error(Errc::invalid_argument, "nu_p needs k >= 1, got " + std::to_string(k));
    int e = 0;
    while (k % p == 0) {
        k /= p;
        ++e;
    }
    return e;
}

BigInt deg_lambda(std::int64_t p, std::int64_t i)
{
    if (i < 1)
        throw Error(Errc::invalid_argument, "λ index must be >= 1");
    return 2 * ipow(p, i) - 1;
}

BigInt deg_mu(std::int64_t p, std::int64_t n)
{
    if (n < 0)
        throw Error(Errc::invalid_argument, "μ index must be >= 1");
    return 2 * ipow(p, n + 1);
}

BigInt deg_v(std::int64_t p, std::int64_t m)
{
    return 2 * ipow(p, m) - 2;
}

static void check_case(std::int64_t n, int m)
{
    if (n < 1)
        throw Error(Errc::invalid_argument, "n must be >= 1");
    if (m != 1 && m != 2)
        throw Error(Errc::invalid_argument, "m must be 1 or 2");
}

BigInt d_deg_recursive(std::int64_t p, std::int64_t n, int m)
{
    check_case(n, m);
    if (n <= 3)
        return 2 * ipow(p, n) - 1;
    if (m == 1)
        return 2 * ipow(p, n) - 2 * ipow(p, n - 1) + d_deg_recursive(p, n - 2, 1);
    return 2 * ipow(p, 3) * (ipow(p, n - 3) - ipow(p, n - 4)) + d_deg_recursive(p, n - 3, 2);
}

BigInt d_deg_explicit(std::int64_t p, std::int64_t n, int m)
{
    check_case(n, m);
    /* 2p^n - 2p^{n-1} + 2p^{n-m-1} - 2p^{n-m-2} + ... + 2p^j - 1, j = n mod (m+1) in the top range */
    std::int64_t step = m + 1;
    std::int64_t j = n;
    if (n > 3)
        j = m == 1 ? (n % 2 == 0 ? 2 : 3) : ((n - 1) % 3) + 1;
    BigInt r = 2 * ipow(p, j) - 1;
    for (std::int64_t e = n; e > j; e -= step)
        r += 2 * ipow(p, e) - 2 * ipow(p, e - 1);
    return r;
}

BigInt d_deg(std::int64_t p, std::int64_t n, int m)
{
    return d_deg_recursive(p, n, m);
}

BigInt r_len(std::int64_t p, std::int64_t n, int m)
{
    check_case(n, m);
    BigInt r = 0;
    if (m == 1) {
        /* p^{n+1} + p^{n-1} + ... down to p^2 (n odd) or p^3 (n even) */
        for (std::int64_t e = n + 1; e >= 2; e -= 2)
            r += ipow(p, e);
    }
    else {
        /* p^n + p^{n-3} + ... down to p^j, j in {1,2,3} */
        for (std::int64_t e = n; e >= 1; e -= 3)
            r += ipow(p, e);
    }
    return r;
}

BigInt r_conj(std::int64_t p, std::int64_t n, std::int64_t m, std::int64_t s)
{
    if (m < 1 || m > n)
        throw Error(Errc::invalid_argument, "r_conj needs 1 <= m <= n");
    if (s < 1)
        throw Error(Errc::invalid_argument, "r_conj needs s >= 1");
    std::int64_t j = ((s - 1) % (m + 1)) + 1;
    BigInt r = 0;
    for (std::int64_t e = n - m + s; e >= n + j - m; e -= m + 1)
        r += ipow(p, e);
    return r;
}

bool v1_pattern_settled(std::int64_t p)
{
    return p != 2;
}

LambdaFamily LambdaFamily::conj(std::int64_t p, std::int64_t n, std::int64_t m)
{
    if (m < 1 || m > n)
        throw Error(Errc::invalid_argument, "conjectural family needs 1 <= m <= n");
    return {Case::conj, p, n, m};
}

namespace {

/* (period, first recursive index, offset of the μ exponent p-power) */
struct Recursion
{
    std::int64_t period, last_base, shift;
};

Recursion recursion_of(const LambdaFamily& fam)
{
    switch (fam.kind) {
    case LambdaFamily::Case::v1:
        return {2, 3, 4};
    case LambdaFamily::Case::v2:
        return {3, 3, 4};
    case LambdaFamily::Case::conj:
        return {fam.m + 1, fam.n + 1, fam.n + 2};
    }
    return {};
}

}  // namespace

LambdaMonomial lambda_expand(const LambdaFamily& fam, std::int64_t s)
{
    if (s < 1)
        throw Error(Errc::invalid_argument, "λ index must be >= 1");
    auto rec = recursion_of(fam);
    LambdaMonomial out{s, 0};
    while (out.base > rec.last_base) {
        out.mu_exponent += ipow(fam.p, out.base - rec.shift) * (fam.p - 1);
        out.base -= rec.period;
    }
    return out;
}

BigInt lambda_degree(const LambdaFamily& fam, std::int64_t s)
{
    auto e = lambda_expand(fam, s);
    return deg_lambda(fam.p, e.base) + e.mu_exponent * deg_mu(fam.p, fam.mu_index() - 1);
}

BigInt lambda_degree_recursive(const LambdaFamily& fam, std::int64_t s)
{
    auto rec = recursion_of(fam);
    if (s <= rec.last_base)
        return deg_lambda(fam.p, s);
    return lambda_degree_recursive(fam, s - rec.period) +
           ipow(fam.p, s - rec.shift) * (fam.p - 1) * deg_mu(fam.p, fam.mu_index() - 1);
}

}  // namespace bss
