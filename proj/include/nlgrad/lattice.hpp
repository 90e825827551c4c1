#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

namespace nlgrad {

/// Real values on eps*Z with a compact support window; sites outside the
/// stored window carry implicit value 0.
class LatticeFunction1D {
public:
    LatticeFunction1D(std::vector<double> values, std::int64_t offset, double spacing);

    double spacing() const { return spacing_; }
    std::int64_t offset() const { return offset_; }
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
    std::int64_t end() const { return offset_ + size(); }  // one past last stored site
    const std::vector<double>& values() const { return values_; }

    double at(std::int64_t k) const {
        const std::int64_t i = k - offset_;
        if (i < 0 || i >= size()) return 0.0;
        return values_[static_cast<std::size_t>(i)];
    }
    double& operator[](std::int64_t k) { return values_[static_cast<std::size_t>(k - offset_)]; }

    /// CSV with columns (index, x = eps*index, value).
    void write_csv(std::ostream& os) const;

private:
    std::vector<double> values_;
    std::int64_t offset_;
    double spacing_;
};

enum class InterpMode { affine, constant };

/// Piecewise-affine (between lattice sites) or piecewise-constant (value u_k
/// on [eps*k, eps*(k+1))) interpolation at x.
double interpolate(const LatticeFunction1D& u, double x, InterpMode mode);

}  // namespace nlgrad
