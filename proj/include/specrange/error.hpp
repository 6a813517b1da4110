#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace specrange {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad caller input: out-of-range parameter, malformed file, shape mismatch.
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// An iterative method hit its cap. Carries whatever it had at that point.
class ConvergenceError : public Error {
   public:
    ConvergenceError(const std::string& what, std::vector<std::complex<double>> last_iterate, double residual)
        : Error(what), last_iterate_(std::move(last_iterate)), residual_(residual) {}

    const std::vector<std::complex<double>>& last_iterate() const noexcept { return last_iterate_; }
    double residual() const noexcept { return residual_; }

   private:
    std::vector<std::complex<double>> last_iterate_;
    double residual_;
};

class SingularMatrixError : public Error {
   public:
    SingularMatrixError(const std::string& what, double pivot) : Error(what), pivot_(pivot) {}
    double pivot() const noexcept { return pivot_; }

   private:
    double pivot_;
};

/// Half-plane intersection came out empty; only reachable through rounding.
class InconsistentRegion : public Error {
   public:
    using Error::Error;
};

}  // namespace specrange
