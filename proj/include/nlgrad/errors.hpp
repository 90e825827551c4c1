#pragma once

#include <stdexcept>
#include <string>

namespace nlgrad {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonPositiveWeight : public Error {
public:
    std::size_t index;
    explicit NonPositiveWeight(std::size_t i)
        : Error("weight at index " + std::to_string(i) + " is not positive"), index(i) {}
};

class NotStrictlyDecreasing : public Error {
public:
    std::size_t index;  // first index i with rho[i] <= rho[i+1] (0-based)
    explicit NotStrictlyDecreasing(std::size_t i)
        : Error("weights not strictly decreasing at index " + std::to_string(i)), index(i) {}
};

class DegenerateTail : public Error {
public:
    explicit DegenerateTail(const std::string& what) : Error(what) {}
};

class NonIntegrable : public Error {
public:
    explicit NonIntegrable(const std::string& what) : Error(what) {}
};

class OddM : public Error {
public:
    explicit OddM(int m) : Error("oscillation null vector requires even M, got " + std::to_string(m)) {}
};

class SpacingMismatch : public Error {
public:
    SpacingMismatch(double a, double b)
        : Error("lattice spacings differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class TooSmallN : public Error {
public:
    TooSmallN(int n_dim, int band)
        : Error("circulant dimension N=" + std::to_string(n_dim) +
                " must exceed 2n=" + std::to_string(2 * band)) {}
};

class TooLargeN : public Error {
public:
    explicit TooLargeN(int n_dim)
        : Error("dense eigenvalue oracle limited to N<=64, got N=" + std::to_string(n_dim)) {}
};

class ConvexityViolated : public Error {
public:
    std::size_t index;  // failing j in the second-difference list (1-based as in the band algebra)
    explicit ConvexityViolated(std::size_t j)
        : Error("band convexity condition fails at j=" + std::to_string(j)), index(j) {}
};

class EpsilonTooLarge : public Error {
public:
    EpsilonTooLarge(double eps, double limit)
        : Error("epsilon=" + std::to_string(eps) + " must be below 1/(2M)=" + std::to_string(limit)) {}
};

class ConditionFails : public Error {
public:
    double margin;
    explicit ConditionFails(double m)
        : Error("2d sufficient condition rho1 > rho2 + 2*varrho fails, margin=" + std::to_string(m)),
          margin(m) {}
};

class QuadratureNonConvergent : public Error {
public:
    explicit QuadratureNonConvergent(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace nlgrad
