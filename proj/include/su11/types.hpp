#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace su11 {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Raised when a computation cannot produce a trustworthy number
/// (singular covariance, non-finite derivative, Fock truncation leakage...).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace su11
