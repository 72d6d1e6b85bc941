#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace bss {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(std::int64_t p, std::int64_t e);
std::int64_t to_i64(const BigInt& x); /* throws when out of range */

int nu_p(std::int64_t p, std::int64_t k);

BigInt deg_lambda(std::int64_t p, std::int64_t i);
BigInt deg_mu(std::int64_t p, std::int64_t n); /* |μ_{n+1}| = 2p^{n+1} */
BigInt deg_v(std::int64_t p, std::int64_t m);  /* 2p^m - 2 */

/* degree of the recursively defined λ_n of the v_m case, m = 1, 2 */
BigInt d_deg(std::int64_t p, std::int64_t n, int m);
BigInt d_deg_recursive(std::int64_t p, std::int64_t n, int m);
BigInt d_deg_explicit(std::int64_t p, std::int64_t n, int m);

/* length r(n, m) of the differential hitting the n-th λ, m = 1, 2 */
BigInt r_len(std::int64_t p, std::int64_t n, int m);
BigInt r_conj(std::int64_t p, std::int64_t n, std::int64_t m, std::int64_t s);

bool v1_pattern_settled(std::int64_t p); /* false at p = 2 */

struct LambdaFamily
{
    enum class Case { v1, v2, conj };
    Case kind = Case::v1;
    std::int64_t p = 3;
    std::int64_t n = 2; /* conj only */
    std::int64_t m = 1; /* conj only */

    static LambdaFamily v1(std::int64_t p)
    {
        return {Case::v1, p, 2, 1};
    }
    static LambdaFamily v2(std::int64_t p)
    {
        return {Case::v2, p, 2, 2};
    }
    static LambdaFamily conj(std::int64_t p, std::int64_t n, std::int64_t m);

    std::int64_t mu_index() const
    {
        return n + 1;
    }
};

/* λ_s = λ_base · μ^mu_exponent */
struct LambdaMonomial
{
    std::int64_t base = 1;
    BigInt mu_exponent = 0;
    bool operator==(const LambdaMonomial&) const = default;
};

LambdaMonomial lambda_expand(const LambdaFamily& fam, std::int64_t s);
BigInt lambda_degree(const LambdaFamily& fam, std::int64_t s);           /* via the expansion */
BigInt lambda_degree_recursive(const LambdaFamily& fam, std::int64_t s); /* via the degree recursion */

/* The two differential patterns left open for v_1 at p = 2. */
enum class V1Variant {
    lambda_cycle, /* λ_{n+3} survive, same rules as for odd p */
    lambda_diff,  /* additionally d_{r(n,1)+2}(λ_{n+3}) = v^{r(n,1)+2} λ_1 λ_{n+2}, n even >= 2 */
};

}  // namespace bss
