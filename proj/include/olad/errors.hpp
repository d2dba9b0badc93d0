#ifndef OLAD_ERRORS_HPP
#define OLAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace olad {

// Bad inputs: rejected scenario parameters, malformed config files,
// violated preconditions. CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Legal inputs on which the model cannot produce a result. Exit code 2.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

// Planner failure: the link's allocatable inventory cannot cover the demand.
class InsufficientCapacityError : public ModelError {
public:
    InsufficientCapacityError(const std::string& msg, double shortfall_gbps)
        : ModelError(msg), shortfall_gbps_(shortfall_gbps) {}

    double shortfall_gbps() const { return shortfall_gbps_; }

private:
    double shortfall_gbps_;
};

// File system problems, distinct from validation. Exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace olad

#endif
