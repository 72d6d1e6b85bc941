#include "bss/profile.hpp"

#include <algorithm>
#include <set>

#include "bss/engine.hpp"

namespace bss {

std::string to_string(const TowerLength& len)
{
    switch (len.kind) {
    case TowerLength::Kind::finite:
        return std::to_string(len.length);
    case TowerLength::Kind::infinite:
        return "inf";
    case TowerLength::Kind::unknown:
        return "unknown";
    }
    return "?";
}

void TowerProfile::add(std::int64_t t, TowerLength len)
{
    auto& col = cols_[t];
    col.insert(std::upper_bound(col.begin(), col.end(), len), len);
}

std::vector<TowerLength> TowerProfile::at(std::int64_t t) const
{
    auto it = cols_.find(t);
    return it == cols_.end() ? std::vector<TowerLength>{} : it->second;
}

TowerProfile TowerProfile::restricted(std::int64_t max_degree) const
{
    TowerProfile out;
    for (auto& [t, col] : cols_)
        if (t <= max_degree)
            out.cols_[t] = col;
    return out;
}

std::size_t TowerProfile::total() const
{
    std::size_t n = 0;
    for (auto& [t, col] : cols_)
        n += col.size();
    return n;
}

DiffReport compare(const TowerProfile& engine, const TowerProfile& oracle, const Window& w)
{
    DiffReport rep;
    std::set<std::int64_t> degrees;
    for (auto& [t, col] : engine.columns())
        degrees.insert(t);
    for (auto& [t, col] : oracle.columns())
        degrees.insert(t);
    for (auto t : degrees) {
        if (t > w.max_degree)
            continue;
        DiffEntry e{t, engine.at(t), oracle.at(t)};
        bool unknown = std::any_of(e.engine.begin(), e.engine.end(), [](auto& l) { return l.kind == TowerLength::Kind::unknown; });
        if (!unknown) {
            if (e.engine != e.oracle)
                rep.mismatches.push_back(std::move(e));
            continue;
        }
        std::vector<TowerLength> known;
        for (auto& l : e.engine)
            if (l.kind != TowerLength::Kind::unknown)
                known.push_back(l);
        if (std::includes(e.oracle.begin(), e.oracle.end(), known.begin(), known.end()))
            rep.unverified.push_back(std::move(e));
        else
            rep.mismatches.push_back(std::move(e));
    }
    return rep;
}

namespace {

std::string join(const std::vector<TowerLength>& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_string(v[i]);
    return s + "}";
}

}  // namespace

std::string format_report(const DiffReport& report)
{
    std::string out;
    for (auto& e : report.mismatches)
        out += "mismatch   t=" + std::to_string(e.t) + "  engine " + join(e.engine) + "  oracle " + join(e.oracle) + "\n";
    for (auto& e : report.unverified)
        out += "unverified t=" + std::to_string(e.t) + "  engine " + join(e.engine) + "  oracle " + join(e.oracle) + "\n";
    out += std::to_string(report.mismatches.size()) + " mismatches, " + std::to_string(report.unverified.size()) +
           " unverified columns\n";
    return out;
}

}  // namespace bss
