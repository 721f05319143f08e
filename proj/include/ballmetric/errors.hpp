#pragma once
#include <stdexcept>
#include <string>

namespace ballmetric {

// Error taxonomy shared by all modules. CLI maps every one of these to exit 2.
struct OffSphereError : std::runtime_error {
    explicit OffSphereError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidScaleError : std::runtime_error {
    explicit InvalidScaleError(const std::string& what) : std::runtime_error(what) {}
};

struct NotInFamilyError : std::runtime_error {
    explicit NotInFamilyError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidChainError : std::runtime_error {
    explicit InvalidChainError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

struct NoChainError : std::runtime_error {
    explicit NoChainError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidFunctionError : std::runtime_error {
    explicit InvalidFunctionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ballmetric
