#include "bss/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>

#include "bss/error.hpp"

namespace bss {

namespace {

const std::pair<std::string_view, std::string_view> kAscii[] = {
    {"λ", "lambda"}, {"μ", "mu"}, {"σ", "sigma"}, {"γ", "gamma"}, {"·", "*"},
};

std::string replace_all(std::string s, std::string_view from, std::string_view to)
{
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
        s.replace(pos, from.size(), to);
    return s;
}

std::string from_ascii(std::string_view text)
{
    std::string s(text);
    s = replace_all(std::move(s), "*", "·");
    for (auto& [u, a] : kAscii)
        if (a != "*")
            s = replace_all(std::move(s), a, u);
    return s;
}

std::vector<std::string> split(std::string_view s, std::string_view sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t pos; (pos = s.find(sep, start)) != std::string_view::npos; start = pos + sep.size())
        out.emplace_back(s.substr(start, pos - start));
    out.emplace_back(s.substr(start));
    return out;
}

std::int64_t parse_int(std::string_view s)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(Errc::invalid_argument, "not an integer: " + std::string(s));
    return v;
}

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::string to_ascii(std::string_view utf8)
{
    std::string s(utf8);
    for (auto& [u, a] : kAscii)
        s = replace_all(std::move(s), u, a);
    return s;
}

std::string format_monomial(const Monomial& m, const Algebra& A, NameStyle style)
{
    A.validate(m);
    std::string out;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0)
            continue;
        if (!out.empty())
            out += "·";
        out += A.generator(i).name;
        if (m.exps[i] != 1)
            out += "^" + std::to_string(m.exps[i]);
    }
    if (out.empty())
        out = "1";
    return style == NameStyle::ascii ? to_ascii(out) : out;
}

std::string format_element(const Element& x, const Algebra& A, NameStyle style)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (auto& [m, c] : x.terms()) {
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += std::to_string(c) + "·";
        out += format_monomial(m, A, NameStyle::utf8);
    }
    return style == NameStyle::ascii ? to_ascii(out) : out;
}

Monomial parse_monomial(std::string_view text, const Algebra& A)
{
    std::string s = from_ascii(text);
    std::vector<std::int32_t> e(A.size(), 0);
    if (s != "1")
        for (auto& factor : split(s, "·")) {
            auto caret = factor.find('^');
            std::string name = factor.substr(0, caret);
            std::int64_t k = caret == std::string::npos ? 1 : parse_int(std::string_view(factor).substr(caret + 1));
            e[A.index(name)] += std::int32_t(k);
        }
    return A.make_monomial(std::move(e));
}

Element parse_element(std::string_view text, const Algebra& A)
{
    std::string s = from_ascii(text);
    Element x;
    if (s == "0")
        return x;
    for (auto& term : split(s, " + ")) {
        Coef c = 1;
        std::string_view rest = term;
        auto dot = rest.find("·");
        if (dot != std::string_view::npos && all_digits(rest.substr(0, dot))) {
            c = fp_reduce(parse_int(rest.substr(0, dot)), A.prime());
            rest = rest.substr(dot + std::string_view("·").size());
        }
        else if (all_digits(rest) && rest != "1") {
            c = fp_reduce(parse_int(rest), A.prime());
            rest = "1";
        }
        x.add_term(parse_monomial(rest, A), c, A.prime());
    }
    return x;
}

PageSummary summarize(const PageData& page)
{
    auto& ctx = *page.ctx;
    std::int64_t D = ctx.window.max_degree;
    int p = ctx.base.prime();
    PageSummary out;
    out.r = page.r;
    for (auto& [b, blk] : page.blocks) {
        if (b.t > D || b.t < (ctx.localized ? -D : 0))
            continue;
        if (blk.reps.rank() > 0)
            out.classes.push_back({b, page.representatives(b), blk.determinate});
        if (int rk = page.differential_rank(b); rk > 0)
            out.differentials.push_back({b, page.differential_target(b), rk});
        Bidegree up{b.t + ctx.vdeg, b.s + 1};
        auto ub = page.find(up);
        if (!ub || blk.reps.rank() == 0 || ub->reps.rank() == 0)
            continue;
        std::vector<Vec> cols;
        for (auto& row : blk.reps.rows())
            if (auto c = cycle_coordinates(*ub, row))
                cols.push_back(std::move(*c));
        if (int rk = rank_of(cols, ub->reps.rank(), p); rk > 0)
            out.v_products.push_back({b, up, rk});
    }
    return out;
}

namespace {

nlohmann::ordered_json bidegree_json(Bidegree b)
{
    return {{"t", b.t}, {"s", b.s}};
}

Bidegree bidegree_from(const nlohmann::ordered_json& j)
{
    return {j.at("t").get<std::int64_t>(), j.at("s").get<std::int64_t>()};
}

}  // namespace

nlohmann::ordered_json emit_json(const RunMeta& meta, const std::vector<PageSummary>& pages, const TowerProfile& towers,
                                 const Algebra& e1, NameStyle style)
{
    nlohmann::ordered_json doc;
    doc["meta"] = {{"case", meta.case_name},   {"p", meta.p},
                   {"n", meta.n},              {"m", meta.m},
                   {"D", meta.max_degree},     {"localized", meta.localized},
                   {"variant", meta.variant},  {"conjectural", meta.conjectural},
                   {"tool_version", kToolVersion}};
    doc["pages"] = nlohmann::ordered_json::array();
    for (auto& pg : pages) {
        nlohmann::ordered_json jp;
        jp["r"] = pg.r;
        jp["classes"] = nlohmann::ordered_json::array();
        for (auto& c : pg.classes) {
            nlohmann::ordered_json jc{{"t", c.at.t}, {"s", c.at.s}, {"dim", c.reps.size()}};
            jc["reps"] = nlohmann::ordered_json::array();
            for (auto& x : c.reps)
                jc["reps"].push_back(format_element(x, e1, style));
            if (!c.determinate)
                jc["determinate"] = false;
            jp["classes"].push_back(std::move(jc));
        }
        jp["differentials"] = nlohmann::ordered_json::array();
        for (auto& d : pg.differentials)
            jp["differentials"].push_back({{"from", bidegree_json(d.from)}, {"to", bidegree_json(d.to)}, {"rank", d.rank}});
        doc["pages"].push_back(std::move(jp));
    }
    doc["towers"] = nlohmann::ordered_json::array();
    for (auto& [t, col] : towers.columns()) {
        nlohmann::ordered_json lens = nlohmann::ordered_json::array();
        for (auto& l : col) {
            if (l.is_finite())
                lens.push_back(l.length);
            else
                lens.push_back(to_string(l));
        }
        doc["towers"].push_back({{"t", t}, {"lengths", std::move(lens)}});
    }
    return doc;
}

JsonDocument parse_json(const nlohmann::ordered_json& doc, const Algebra& e1)
{
    JsonDocument out;
    auto& m = doc.at("meta");
    out.meta.case_name = m.at("case").get<std::string>();
    out.meta.p = m.at("p").get<int>();
    out.meta.n = m.at("n").get<int>();
    out.meta.m = m.at("m").get<int>();
    out.meta.max_degree = m.at("D").get<std::int64_t>();
    out.meta.localized = m.at("localized").get<bool>();
    out.meta.variant = m.at("variant").get<std::string>();
    out.meta.conjectural = m.at("conjectural").get<bool>();
    for (auto& jp : doc.at("pages")) {
        PageSummary pg;
        pg.r = jp.at("r").get<int>();
        for (auto& jc : jp.at("classes")) {
            ClassSummary c;
            c.at = bidegree_from(jc);
            for (auto& rep : jc.at("reps"))
                c.reps.push_back(parse_element(rep.get<std::string>(), e1));
            if (c.reps.size() != jc.at("dim").get<std::size_t>())
                throw Error(Errc::invalid_argument, "class dimension does not match its representatives");
            c.determinate = jc.value("determinate", true);
            pg.classes.push_back(std::move(c));
        }
        for (auto& jd : jp.at("differentials"))
            pg.differentials.push_back({bidegree_from(jd.at("from")), bidegree_from(jd.at("to")), jd.at("rank").get<int>()});
        out.pages.push_back(std::move(pg));
    }
    for (auto& jt : doc.at("towers")) {
        std::int64_t t = jt.at("t").get<std::int64_t>();
        for (auto& l : jt.at("lengths")) {
            if (l.is_number_integer())
                out.towers.add(t, TowerLength::finite(l.get<std::int64_t>()));
            else if (l.get<std::string>() == "inf")
                out.towers.add(t, TowerLength::infinite());
            else if (l.get<std::string>() == "unknown")
                out.towers.add(t, TowerLength::unknown());
            else
                throw Error(Errc::invalid_argument, "bad tower length " + l.dump());
        }
    }
    return out;
}

std::string emit_svg(const std::vector<PageSummary>& pages, const ChartStyle& style)
{
    const double u = style.unit, margin = 3 * style.unit;
    double width = 2 * margin + double(style.max_degree + 1) * u;
    struct Panel
    {
        std::int64_t s_lo, s_hi;
        double top;
    };
    std::vector<Panel> panels;
    double y = 0;
    for (auto& pg : pages) {
        std::int64_t lo = 0, hi = 1;
        for (auto& c : pg.classes) {
            lo = std::min(lo, c.at.s);
            hi = std::max(hi, c.at.s);
        }
        panels.push_back({lo, hi, y});
        y += double(hi - lo + 1) * u + 3 * margin;
    }
    std::string svg = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" font-family=\"sans-serif\" "
        "font-size=\"{:.0f}\">\n",
        width, std::max(y, u), u * 0.8);
    svg += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
           "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
    for (std::size_t k = 0; k < pages.size(); ++k) {
        auto& pg = pages[k];
        auto& pn = panels[k];
        double base = pn.top + margin + double(pn.s_hi - pn.s_lo) * u;
        auto X = [&](std::int64_t t) { return margin + double(t) * u; };
        auto Y = [&](std::int64_t s) { return base - double(s - pn.s_lo) * u; };
        svg += fmt::format("<g class=\"page\" data-r=\"{}\">\n", pg.r);
        svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">E_{}</text>\n", margin, pn.top + margin * 0.6, pg.r);
        svg += fmt::format("<line class=\"axis\" x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"#888\"/>\n",
                           X(0), base + u * 0.5, X(style.max_degree), base + u * 0.5);
        for (std::int64_t t = 0; t <= style.max_degree; t += std::max<std::int64_t>(style.tick_step, 1))
            svg += fmt::format("<line class=\"tick\" x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" "
                               "stroke=\"#888\"/><text x=\"{0:.1f}\" y=\"{3:.1f}\" text-anchor=\"middle\">{4}</text>\n",
                               X(t), base + u * 0.5, base + u * 0.9, base + u * 1.8, t);
        for (auto& v : pg.v_products)
            svg += fmt::format("<line class=\"product\" x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" "
                               "stroke=\"#999\"/>\n",
                               X(v.from.t), Y(v.from.s), X(v.to.t), Y(v.to.s));
        for (auto& d : pg.differentials) {
            double x1 = X(d.from.t), y1 = Y(d.from.s), x2 = X(d.to.t), y2 = Y(d.to.s);
            svg += fmt::format("<line class=\"differential\" x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" "
                               "stroke=\"#c00\" marker-end=\"url(#arrow)\"/>\n",
                               x1, y1, x2, y2);
            svg += fmt::format("<text class=\"page-label\" x=\"{:.1f}\" y=\"{:.1f}\" fill=\"#c00\">{}</text>\n",
                               (x1 + x2) / 2 + 2, (y1 + y2) / 2, pg.r);
        }
        for (auto& c : pg.classes) {
            std::size_t dim = c.reps.size();
            for (std::size_t i = 0; i < dim; ++i) {
                double dx = (double(i) - double(dim - 1) / 2) * u * 0.3;
                svg += fmt::format("<circle class=\"class\" data-t=\"{}\" data-s=\"{}\" cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"{:.1f}\" "
                                   "fill=\"{}\"/>\n",
                                   c.at.t, c.at.s, X(c.at.t) + dx, Y(c.at.s), u * 0.18, c.determinate ? "#000" : "#e80");
            }
        }
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace bss
