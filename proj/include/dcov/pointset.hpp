#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dcov {

// N points in [0,1)^d, row-major.
struct PointSet {
    int d = 0;
    std::vector<double> x;

    PointSet() = default;
    PointSet(int dim, std::size_t n) : d(dim), x(static_cast<std::size_t>(dim) * n) {
        if (dim < 1) throw std::domain_error("PointSet: d must be >= 1");
    }

    std::size_t n() const { return d == 0 ? 0 : x.size() / static_cast<std::size_t>(d); }
    double at(std::size_t i, int j) const { return x[i * static_cast<std::size_t>(d) + j]; }
    double& at(std::size_t i, int j) { return x[i * static_cast<std::size_t>(d) + j]; }
    const double* row(std::size_t i) const { return x.data() + i * static_cast<std::size_t>(d); }

    void validate() const {
        if (d < 1) throw std::domain_error("PointSet: d must be >= 1");
        if (x.empty() || x.size() % static_cast<std::size_t>(d) != 0)
            throw std::domain_error("PointSet: coordinate count not a multiple of d");
        for (double v : x)
            if (!(v >= 0.0) || !(v < 1.0))
                throw std::domain_error("PointSet: coordinates must lie in [0,1)");
    }

    // Projection onto the coordinates selected by a bitmask (bit j = coordinate j).
    PointSet project(std::uint32_t mask) const;
};

}  // namespace dcov
