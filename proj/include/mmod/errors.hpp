#pragma once

#include <stdexcept>
#include <string>

namespace mmod {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid feature map / training configuration (bad window size, etc.).
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Problems with input data: manifests, images, annotations, model files.
struct DataError : Error {
    explicit DataError(const std::string& msg) : Error(msg) {}
};

/// Optimizer hit its iteration cap before reaching the requested gap.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, double gap_) : Error(msg), gap(gap_) {}
    double gap;
};

}  // namespace mmod
