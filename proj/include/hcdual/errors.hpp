#pragma once

#include <stdexcept>
#include <string>

namespace hcdual {

// Input data is malformed (DIMACS, manifests, lambda vectors).
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, long line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// A caller violated a documented precondition.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

// An internal invariant failed; maps to exit code 3 in the CLI.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// The exact oracle ran out of node budget before resolving the instance.
class oracle_unresolved_error : public std::runtime_error {
public:
    explicit oracle_unresolved_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hcdual
