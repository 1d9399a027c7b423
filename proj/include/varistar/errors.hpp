#pragma once

#include <stdexcept>
#include <string>

namespace varistar {

/// Caller violated an operation's calling contract (mismatched orders,
/// nonzero constant term where zero is required, ...).
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input lies outside the mathematical domain of an operation
/// (inadmissible (p, w0), |c1| > 1, invalid measure, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Internal consistency check failed; signals a bug, not bad input.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace varistar
