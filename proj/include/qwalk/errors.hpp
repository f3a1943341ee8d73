#ifndef QWALK_ERRORS_HPP_
#define QWALK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qwalk {

/// Malformed or inconsistent input data (edge lists, state files, shapes).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure (solver did not converge, degenerate fit).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qwalk

#endif // QWALK_ERRORS_HPP_
