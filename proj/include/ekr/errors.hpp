#pragma once

#include <stdexcept>
#include <string>

namespace ekr {

/// Thrown when an operation would exceed a configured size cap (dense
/// materialization, exact elimination, exhaustive search).  Distinct from
/// std::domain_error so callers can map it to a separate exit code.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ekr
