#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "psl/errors.hpp"

namespace psl {

/// A point cloud where every point carries a nonzero scalar label
/// (e.g. an atomic partial charge). Coordinates are 2- or 3-dimensional;
/// 2D points are stored with z = 0 so distances are uniform.
struct LabeledPointCloud {
    int dim = 3;  // 2 or 3
    std::vector<std::array<double, 3>> coords;
    std::vector<double> labels;
    std::vector<std::string> names;  // optional, may be empty

    std::size_t size() const { return coords.size(); }

    double distance(std::size_t i, std::size_t j) const {
        const auto& a = coords[i];
        const auto& b = coords[j];
        const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    }

    double max_pairwise_distance() const {
        double m = 0.0;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                m = std::max(m, distance(i, j));
        return m;
    }

    void validate() const {
        if (coords.empty())
            throw Error(ErrorCode::InvalidParameter, "point cloud is empty");
        if (labels.size() != coords.size())
            throw Error(ErrorCode::InvalidParameter,
                        "label count does not match point count");
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == 0.0)
                throw Error(ErrorCode::ZeroLabel,
                            "zero label at point " + std::to_string(i));
    }
};

}  // namespace psl
