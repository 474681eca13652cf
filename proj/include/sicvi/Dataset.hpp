#ifndef SICVI_DATASET_HPP
#define SICVI_DATASET_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

/**
 * @file Dataset.hpp
 * @brief Ordered collection of real-valued points of uniform dimension.
 */

namespace sicvi {

typedef std::vector<double> Point;

/**
 * @brief Ordered list of points with a common dimension.
 *
 * Points are stored contiguously in row-major order.
 * Duplicate coordinates are allowed.
 */
class Dataset {
public:
    /**
     * @param points At least one point; every point must have the same non-zero number of finite coordinates.
     */
    explicit Dataset(const std::vector<Point>& points) {
        if (points.empty()) {
            throw std::invalid_argument("dataset must contain at least one point");
        }
        my_dim = points.front().size();
        if (my_dim == 0) {
            throw std::invalid_argument("points must have at least one coordinate");
        }
        my_values.reserve(points.size() * my_dim);
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i].size() != my_dim) {
                throw std::invalid_argument("point " + std::to_string(i) + " has " + std::to_string(points[i].size()) +
                                            " coordinates, expected " + std::to_string(my_dim));
            }
            for (auto x : points[i]) {
                if (!std::isfinite(x)) {
                    throw std::invalid_argument("point " + std::to_string(i) + " has a non-finite coordinate");
                }
                my_values.push_back(x);
            }
        }
    }

    std::size_t size() const {
        return my_values.size() / my_dim;
    }

    std::size_t dim() const {
        return my_dim;
    }

    std::span<const double> operator[](std::size_t i) const {
        return std::span<const double>(my_values.data() + i * my_dim, my_dim);
    }

    /**
     * @return Views over the points with indices in `indices`, in the given order.
     */
    std::vector<std::span<const double> > select(std::span<const std::size_t> indices) const {
        std::vector<std::span<const double> > out;
        out.reserve(indices.size());
        for (auto i : indices) {
            out.push_back((*this)[i]);
        }
        return out;
    }

    std::vector<std::span<const double> > all() const {
        std::vector<std::span<const double> > out;
        out.reserve(size());
        for (std::size_t i = 0, n = size(); i < n; ++i) {
            out.push_back((*this)[i]);
        }
        return out;
    }

    std::vector<Point> points() const {
        std::vector<Point> out;
        out.reserve(size());
        for (std::size_t i = 0, n = size(); i < n; ++i) {
            auto p = (*this)[i];
            out.emplace_back(p.begin(), p.end());
        }
        return out;
    }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::size_t my_dim = 0;
    std::vector<double> my_values;
};

/**
 * Multiply every coordinate by `factor`, which must be non-zero.
 */
inline Dataset scale_dataset(const Dataset& d, double factor) {
    if (factor == 0 || !std::isfinite(factor)) {
        throw std::invalid_argument("scale factor must be finite and non-zero");
    }
    auto points = d.points();
    for (auto& p : points) {
        for (auto& x : p) {
            x *= factor;
        }
    }
    return Dataset(points);
}

/**
 * Add `offset` to every coordinate of every point.
 */
inline Dataset shift_dataset(const Dataset& d, double offset) {
    if (!std::isfinite(offset)) {
        throw std::invalid_argument("shift offset must be finite");
    }
    auto points = d.points();
    for (auto& p : points) {
        for (auto& x : p) {
            x += offset;
        }
    }
    return Dataset(points);
}

}

#endif
