#pragma once

#include <stdexcept>
#include <string>

namespace bss {

enum class Errc {
    invalid_argument,
    foreign_generator,
    infinite_basis,
    not_free,
    malformed_rule,
    dead_source,
    dead_target,
    inconsistent_rule,
    ambiguous_pattern,
    unsupported_case,
    internal,
};

class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept
    {
        return code_;
    }

private:
    Errc code_;
};

}  // namespace bss
