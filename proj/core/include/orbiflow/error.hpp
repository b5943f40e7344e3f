#pragma once

#include <stdexcept>
#include <string>

namespace orbiflow {

enum class ErrorKind {
    InvalidArgument,
    DegenerateTriangle,
    NonHyperbolic,
    DedupAmbiguity,
    NeighborNotFound,
    DepthInsufficient,
    Tangency,
    InconsistentComplex,
    Overflow,
    NotPeriodic,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string subsystem, const std::string& what)
        : std::runtime_error(subsystem + ": " + what), kind_(kind), subsystem_(std::move(subsystem)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& subsystem() const noexcept { return subsystem_; }

private:
    ErrorKind kind_;
    std::string subsystem_;
};

}  // namespace orbiflow
