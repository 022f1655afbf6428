#pragma once

#include <stdexcept>
#include <string>

namespace locpoly {

// Domain errors carry a stable kind tag so the CLI can emit a one-line
// machine-parseable diagnostic ("error: <kind>: <message>").
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct SingularDesign : DomainError {
    explicit SingularDesign(const std::string& what) : DomainError("SingularDesign", what) {}
};

struct DegenerateSpec : DomainError {
    explicit DegenerateSpec(const std::string& what) : DomainError("DegenerateSpec", what) {}
};

struct NoValidBandwidth : DomainError {
    explicit NoValidBandwidth(const std::string& what) : DomainError("NoValidBandwidth", what) {}
};

struct DegenerateDensity : DomainError {
    explicit DegenerateDensity(const std::string& what) : DomainError("DegenerateDensity", what) {}
};

struct DegenerateSample : DomainError {
    explicit DegenerateSample(const std::string& what) : DomainError("DegenerateSample", what) {}
};

struct CellFailed : DomainError {
    explicit CellFailed(const std::string& what) : DomainError("CellFailed", what) {}
};

// Bad inputs (malformed files, out-of-range arguments reaching the library).
struct InvalidInput : DomainError {
    explicit InvalidInput(const std::string& what) : DomainError("InvalidInput", what) {}
};

} // namespace locpoly
