#include "nlgrad/lattice.hpp"

#include <cmath>
#include <cstdio>

#include "nlgrad/errors.hpp"

namespace nlgrad {

LatticeFunction1D::LatticeFunction1D(std::vector<double> values, std::int64_t offset, double spacing)
    : values_(std::move(values)), offset_(offset), spacing_(spacing) {
    if (!(spacing > 0.0)) throw Error("lattice spacing must be positive");
}

void LatticeFunction1D::write_csv(std::ostream& os) const {
    os << "index,x,value\n";
    char buf[128];
    for (std::int64_t k = offset_; k < end(); ++k) {
        std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g\n", static_cast<long long>(k),
                      spacing_ * static_cast<double>(k), at(k));
        os << buf;
    }
}

double interpolate(const LatticeFunction1D& u, double x, InterpMode mode) {
    const double s = x / u.spacing();
    const auto k = static_cast<std::int64_t>(std::floor(s));
    if (mode == InterpMode::constant) return u.at(k);
    const double t = s - static_cast<double>(k);
    return (1.0 - t) * u.at(k) + t * u.at(k + 1);
}

}  // namespace nlgrad
