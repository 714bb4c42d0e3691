#pragma once

#include <stdexcept>
#include <string>

namespace qift {

/// Thrown when an operation would exceed a configured resource ceiling
/// (e.g. a full scan above the default width cap) and no override was given.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qift
