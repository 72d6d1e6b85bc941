#include "bss/hochschild.hpp"

#include "bss/error.hpp"

namespace bss {

HHResult hh_free(const Algebra& A, int characteristic, std::int64_t degree_bound)
{
    if (characteristic != 0 && characteristic != A.prime())
        throw Error(Errc::invalid_argument, "characteristic must be 0 or the prime of the algebra");
    std::vector<GeneratorSpec> gens(A.generators().begin(), A.generators().end());
    std::vector<std::string> sigma;
    for (auto& g : A.generators()) {
        std::string name = "σ" + g.name;
        std::int64_t d = g.degree + 1;
        switch (g.kind) {
        case GenKind::polynomial:
            gens.push_back(GeneratorSpec::exterior(name, d));
            break;
        case GenKind::exterior:
            if (characteristic == 0)
                gens.push_back(GeneratorSpec::polynomial(name, d));
            else
                gens.push_back(GeneratorSpec::divided_power(name, d));
            break;
        default:
            throw Error(Errc::not_free, "not free: generator " + g.name + " is not polynomial or exterior");
        }
        sigma.push_back(std::move(name));
    }
    return {Algebra(A.prime(), std::move(gens), degree_bound), characteristic, std::move(sigma)};
}

DimSeries convolve(const DimSeries& a, const DimSeries& b, std::int64_t max_degree)
{
    DimSeries r(std::size_t(max_degree + 1), 0);
    for (std::size_t i = 0; i < a.size() && std::int64_t(i) <= max_degree; ++i)
        for (std::size_t j = 0; j < b.size() && std::int64_t(i + j) <= max_degree; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

namespace {

DimSeries factor_series(const GeneratorSpec& g, std::int64_t D)
{
    DimSeries s(std::size_t(D + 1), 0);
    s[0] = 1;
    auto put = [&](std::int64_t e) {
        if (e * g.degree <= D)
            s[std::size_t(e * g.degree)] += 1;
    };
    switch (g.kind) {
    case GenKind::exterior:
        put(1);
        break;
    case GenKind::truncated:
        for (std::int64_t e = 1; e < g.height; ++e)
            put(e);
        break;
    case GenKind::polynomial:
    case GenKind::divided_power:
        if (g.degree == 0)
            throw Error(Errc::infinite_basis, "infinite basis: degree-0 polynomial generator " + g.name);
        for (std::int64_t e = 1; e * g.degree <= D; ++e)
            put(e);
        break;
    case GenKind::laurent:
        throw Error(Errc::infinite_basis, "infinite basis: Laurent generator " + g.name);
    }
    return s;
}

}  // namespace

DimSeries series_dims(const Algebra& A, std::int64_t max_degree)
{
    DimSeries r(std::size_t(max_degree + 1), 0);
    r[0] = 1;
    for (auto& g : A.generators())
        r = convolve(r, factor_series(g, max_degree), max_degree);
    return r;
}

DimSeries hh_dims(const HHResult& res, std::int64_t max_degree)
{
    return series_dims(res.algebra, max_degree);
}

DimSeries sigma_dims(const HHResult& res, std::int64_t max_degree)
{
    DimSeries r(std::size_t(max_degree + 1), 0);
    r[0] = 1;
    for (auto& g : res.algebra.generators()) {
        bool is_sigma = false;
        for (auto& s : res.sigma_generators)
            is_sigma = is_sigma || g.name == s || g.name.ends_with("(" + s + ")");
        if (is_sigma)
            r = convolve(r, factor_series(g, max_degree), max_degree);
    }
    return r;
}

}  // namespace bss
