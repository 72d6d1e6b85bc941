#include <CLI11.hpp>
#include <fmt/format.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "bss/cases.hpp"
#include "bss/error.hpp"
#include "bss/io.hpp"

using namespace bss;

namespace {

enum Exit { ok = 0, mismatch = 1, usage = 2, internal = 3 };

/* BSS_COLOR=always|never|auto; NO_COLOR disables auto */
bool use_color()
{
    const char* c = std::getenv("BSS_COLOR");
    std::string mode = c ? c : "auto";
    if (mode == "always")
        return true;
    if (mode == "never")
        return false;
    return !std::getenv("NO_COLOR") && isatty(fileno(stdout));
}

std::string paint(const std::string& s, int code)
{
    static const bool on = use_color();
    return on ? fmt::format("\x1b[{}m{}\x1b[0m", code, s) : s;
}

struct Options
{
    std::string case_name = "v0";
    int p = 2;
    int n = 2;
    int m = 1;
    std::int64_t max_degree = 0;
    int page_cap = -1;
    bool localized = false;
    std::string variant;
    std::string json_path;
    std::string svg_path;
    bool ascii = false;
};

CaseSpec to_spec(const Options& o)
{
    CaseSpec c;
    c.kind = parse_case(o.case_name);
    c.p = o.p;
    c.n = (c.kind == CaseKind::v1 || c.kind == CaseKind::v2) ? 2 : o.n;
    c.m = o.m;
    c.max_degree = o.max_degree;
    c.localized = o.localized;
    c.variant = parse_variant(o.variant);
    return c;
}

void add_case_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("--case", o.case_name, "v0, v1, v2 or conj")->required();
    cmd->add_option("--p", o.p, "prime")->required();
    cmd->add_option("--n", o.n, "height of the base (v0, conj)");
    cmd->add_option("--m", o.m, "index of v_m (conj)");
    cmd->add_option("--max-degree", o.max_degree, "largest reported degree");
    cmd->add_flag("--localized", o.localized, "invert v");
    cmd->add_option("--variant", o.variant, "p = 2 v1 pattern: lambda-cycle or lambda-diff");
}

std::string towers_table(const TowerProfile& t)
{
    std::string out = fmt::format("{:>8}  lengths\n", "t");
    for (auto& [deg, col] : t.columns()) {
        std::string row;
        for (auto& l : col)
            row += (row.empty() ? "" : " ") + to_string(l);
        out += fmt::format("{:>8}  {}\n", deg, row);
    }
    return out;
}

std::string laurent_span(const LocalizedSummary& s, const Algebra& e1, NameStyle style)
{
    std::string out = "E_∞ = Laurent span {";
    for (std::size_t i = 0; i < s.generators.size(); ++i)
        out += (i ? ", " : "") + format_element(s.generators[i], e1, style);
    out += "}";
    return style == NameStyle::ascii ? to_ascii(out) : out;
}

void write_file(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw Error(Errc::invalid_argument, "cannot write " + path);
}

int cmd_run(const Options& o)
{
    if (o.json_path == "-" && o.svg_path == "-")
        throw Error(Errc::invalid_argument, "only one of --json and --svg can go to stdout");
    CaseSpec spec = to_spec(o);
    auto prep = prepare_case(spec);
    auto res = run(prep.base, prep.schedule, prep.window, spec.localized);
    auto style = o.ascii ? NameStyle::ascii : NameStyle::utf8;
    auto& e1 = res.pages.back().ctx->e1;

    // the summary moves to stderr when a document is written to stdout
    std::ostream& out = o.json_path == "-" || o.svg_path == "-" ? std::cerr : std::cout;

    for (auto& w : res.warnings)
        std::cerr << paint("warning: ", 33) << w << "\n";
    out << fmt::format("case {} p={} n={}{} D={}{}{}\n", case_name(spec.kind), spec.p, spec.n,
                             spec.kind == CaseKind::conj ? fmt::format(" m={}", spec.m) : "", spec.max_degree,
                             spec.localized ? " localized" : "", prep.schedule.conjectural ? " [conjectural]" : "");
    if (spec.localized) {
        auto s = localized_summary(res.pages.back());
        out << laurent_span(s, e1, style) << (s.determinate ? "" : " (indeterminate)") << "\n";
    }
    else {
        out << towers_table(res.towers);
    }

    if (!o.json_path.empty() || !o.svg_path.empty()) {
        std::vector<PageSummary> pages;
        for (auto& pg : res.pages)
            if (o.page_cap < 0 || pg.r <= o.page_cap)
                pages.push_back(summarize(pg));
        if (!o.json_path.empty()) {
            RunMeta meta{case_name(spec.kind), spec.p,        spec.n,
                         spec.kind == CaseKind::conj ? spec.m : 0,
                         spec.max_degree,     spec.localized, variant_name(spec.variant),
                         prep.schedule.conjectural};
            write_file(o.json_path, emit_json(meta, pages, res.towers, e1, style).dump(2) + "\n");
        }
        if (!o.svg_path.empty()) {
            ChartStyle cs;
            cs.vdeg = prep.schedule.v.degree;
            cs.max_degree = spec.max_degree;
            cs.names = style;
            write_file(o.svg_path, emit_svg(pages, cs));
        }
    }
    return ok;
}

int cmd_verify(const Options& o)
{
    CaseSpec spec = to_spec(o);
    auto prep = prepare_case(spec);
    auto res = run(prep.base, prep.schedule, prep.window, spec.localized);
    std::string tag = prep.schedule.conjectural ? " [conjectural]" : "";

    if (spec.localized) {
        if (spec.kind != CaseKind::v1 && spec.kind != CaseKind::v2)
            throw Error(Errc::unsupported_case, "localized verification covers v1 and v2 only");
        auto s = localized_summary(res.pages.back());
        auto expect = localized_expected(spec.kind == CaseKind::v1 ? LocalizedCase::v1 : LocalizedCase::v2, spec.p,
                                         spec.max_degree);
        bool good = s.determinate && s.dims == expect;
        std::cout << laurent_span(s, res.pages.back().ctx->e1, o.ascii ? NameStyle::ascii : NameStyle::utf8) << "\n";
        std::cout << (good ? paint("verified", 32) : paint("MISMATCH", 31)) << tag << "\n";
        return good ? ok : mismatch;
    }

    auto oracle = oracle_profile(spec);
    auto rep = compare(res.towers, oracle, prep.window);
    std::string text = format_report(rep);
    std::cout << text;
    if (!rep.ok()) {
        std::cout << paint("MISMATCH", 31) << tag << "\n";
        return mismatch;
    }
    std::cout << (rep.unverified.empty() ? paint("verified", 32) : paint("verified where determinate", 33)) << tag
              << "\n";
    return ok;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s)
{
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            auto v = std::stoll(s);
            return {v, v};
        }
        return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
    }
    catch (const std::logic_error&) {
        throw Error(Errc::invalid_argument, "bad range '" + s + "' (use a or a..b)");
    }
}

int cmd_formulas(int p, const std::string& series, const std::string& range, int big_n, int m)
{
    if (!is_prime(p))
        throw Error(Errc::invalid_argument, "p must be prime");
    auto [lo, hi] = parse_range(range);
    if (lo > hi)
        throw Error(Errc::invalid_argument, "empty range");
    for (auto n = lo; n <= hi; ++n) {
        BigInt v;
        if (series == "nu")
            v = nu_p(p, n);
        else if (series == "dlambda")
            v = deg_lambda(p, n);
        else if (series == "dmu")
            v = deg_mu(p, n);
        else if (series == "d1")
            v = d_deg(p, n, 1);
        else if (series == "d2")
            v = d_deg(p, n, 2);
        else if (series == "r1")
            v = r_len(p, n, 1);
        else if (series == "r2")
            v = r_len(p, n, 2);
        else if (series == "rconj")
            v = r_conj(p, big_n, m, n);
        else
            throw Error(Errc::invalid_argument, "unknown series '" + series + "' (nu dlambda dmu d1 d2 r1 r2 rconj)");
        std::cout << n << "\t" << v << "\n";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bockstein spectral sequences for THH of BP<n>"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    Options run_opt;
    auto* run_cmd = app.add_subcommand("run", "compute the spectral sequence");
    add_case_options(run_cmd, run_opt);
    run_cmd->add_option("--page-cap", run_opt.page_cap, "only export pages r <= cap");
    run_cmd->add_option("--json", run_opt.json_path, "write pages and towers as JSON ('-' for stdout)");
    run_cmd->add_option("--svg", run_opt.svg_path, "write a chart");
    run_cmd->add_flag("--ascii", run_opt.ascii, "ASCII generator names");

    Options ver_opt;
    auto* ver_cmd = app.add_subcommand("verify", "compare against the closed form");
    add_case_options(ver_cmd, ver_opt);
    ver_cmd->add_flag("--ascii", ver_opt.ascii, "ASCII generator names");

    int fp = 2, big_n = 2, fm = 1;
    std::string series, range = "1";
    auto* form_cmd = app.add_subcommand("formulas", "print degree and length formulas");
    form_cmd->add_option("--p", fp, "prime")->required();
    form_cmd->add_option("--series", series, "nu dlambda dmu d1 d2 r1 r2 rconj")->required();
    form_cmd->add_option("--n", range, "index or range a..b");
    form_cmd->add_option("--N", big_n, "height for rconj");
    form_cmd->add_option("--m", fm, "v-index for rconj");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*run_cmd)
            return cmd_run(run_opt);
        if (*ver_cmd)
            return cmd_verify(ver_opt);
        return cmd_formulas(fp, series, range, big_n, fm);
    }
    catch (const Error& e) {
        std::cerr << paint("error: ", 31) << e.what() << "\n";
        return e.code() == Errc::internal ? internal : usage;
    }
    catch (const std::exception& e) {
        std::cerr << paint("internal error: ", 31) << e.what() << "\n";
        return internal;
    }
}
