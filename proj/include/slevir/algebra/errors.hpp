#pragma once

#include <stdexcept>
#include <string>

namespace slevir {

// Base for all library errors. `code` is a stable identifier used in CLI failure reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what) : Error("division_by_zero", what) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error("specialization_pole", what) {}
};

// A coefficient was requested outside the window a truncated series can guarantee.
struct WindowError : Error {
    explicit WindowError(const std::string& what) : Error("window", what) {}
};

struct DepthError : Error {
    explicit DepthError(const std::string& what) : Error("depth_overflow", what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

} // namespace slevir
