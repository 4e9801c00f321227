#pragma once

#include <stdexcept>
#include <string>

namespace mldsc {

// Problem assembly failed (dimension mismatch, duplicate controller, ...).
struct AssemblyError : std::runtime_error {
    explicit AssemblyError(const std::string& what) : std::runtime_error(what) {}
};

// Symmetric solve failed even after jitter escalation.
struct SingularMatrixError : std::runtime_error {
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

// ODE integration produced a non-finite value.
struct IntegrationError : std::runtime_error {
    explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

// Policy was evaluated with information that does not match its kind.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Cost estimation impossible (e.g. every sample diverged).
struct EstimationError : std::runtime_error {
    explicit EstimationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mldsc
