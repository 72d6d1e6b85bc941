#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bss {

struct TowerLength
{
    enum class Kind : std::uint8_t { finite, infinite, unknown };
    Kind kind = Kind::finite;
    std::int64_t length = 0;

    static TowerLength finite(std::int64_t k)
    {
        return {Kind::finite, k};
    }
    static TowerLength infinite()
    {
        return {Kind::infinite, 0};
    }
    static TowerLength unknown()
    {
        return {Kind::unknown, 0};
    }
    bool is_finite() const
    {
        return kind == Kind::finite;
    }
    bool operator==(const TowerLength&) const = default;
    auto operator<=>(const TowerLength&) const = default;
};

std::string to_string(const TowerLength& len);

/* topological degree -> sorted multiset of tower lengths */
class TowerProfile
{
public:
    using Columns = std::map<std::int64_t, std::vector<TowerLength>>;

    void add(std::int64_t t, TowerLength len);
    const Columns& columns() const noexcept
    {
        return cols_;
    }
    std::vector<TowerLength> at(std::int64_t t) const;
    TowerProfile restricted(std::int64_t max_degree) const;
    std::size_t total() const;
    bool empty() const
    {
        return cols_.empty();
    }
    bool operator==(const TowerProfile&) const = default;

private:
    Columns cols_;
};

struct DiffEntry
{
    std::int64_t t = 0;
    std::vector<TowerLength> engine;
    std::vector<TowerLength> oracle;
};

struct DiffReport
{
    std::vector<DiffEntry> mismatches;
    std::vector<DiffEntry> unverified;
    bool ok() const
    {
        return mismatches.empty();
    }
};

struct Window;

/* "unknown" engine entries match anything, but the known entries of a column
 * must still sit inside the oracle's multiset */
DiffReport compare(const TowerProfile& engine, const TowerProfile& oracle, const Window& w);

std::string format_report(const DiffReport& report);

}  // namespace bss
