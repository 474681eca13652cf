#ifndef SICVI_GEOMETRY_HPP
#define SICVI_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "Dataset.hpp"
#include "Partition.hpp"

/**
 * @file geometry.hpp
 * @brief Euclidean primitives over points and point sets.
 *
 * The point-set functions accept any sized range whose elements are themselves sized ranges of reals,
 * e.g., `std::vector<Point>` or the span views returned by `Dataset::select()`.
 */

namespace sicvi {

template<class Point_>
concept PointLike = std::ranges::sized_range<Point_> && std::convertible_to<std::ranges::range_value_t<Point_>, double>;

template<class Points_>
concept PointSet = std::ranges::sized_range<Points_> && PointLike<std::ranges::range_value_t<Points_> >;

/**
 * @return L2 distance between `a` and `b`. Throws `std::invalid_argument` on a dimension mismatch.
 */
template<PointLike A_, PointLike B_>
double euclidean_distance(const A_& a, const B_& b) {
    if (std::ranges::size(a) != std::ranges::size(b)) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(std::ranges::size(a)) + " vs " +
                                    std::to_string(std::ranges::size(b)));
    }
    double sum = 0;
    auto bit = std::ranges::begin(b);
    for (auto ait = std::ranges::begin(a); ait != std::ranges::end(a); ++ait, ++bit) {
        const double delta = static_cast<double>(*ait) - static_cast<double>(*bit);
        sum += delta * delta;
    }
    return std::sqrt(sum);
}

/**
 * @cond
 */
namespace internal {

template<PointSet Points_>
std::size_t check_point_set(const Points_& points) {
    if (std::ranges::empty(points)) {
        throw std::invalid_argument("point set must not be empty");
    }
    const auto dim = std::ranges::size(*std::ranges::begin(points));
    for (const auto& p : points) {
        if (std::ranges::size(p) != dim) {
            throw std::invalid_argument("all points must have the same dimension");
        }
    }
    return dim;
}

template<PointSet Points_>
bool all_coincide(const Points_& points) {
    const auto& first = *std::ranges::begin(points);
    for (const auto& p : points) {
        if (!std::ranges::equal(p, first)) {
            return false;
        }
    }
    return true;
}

}
/**
 * @endcond
 */

/**
 * @return Coordinate-wise arithmetic mean of a non-empty point set.
 */
template<PointSet Points_>
Point centroid(const Points_& points) {
    const auto dim = internal::check_point_set(points);
    Point out(dim);
    for (const auto& p : points) {
        std::size_t d = 0;
        for (auto x : p) {
            out[d++] += static_cast<double>(x);
        }
    }
    const double n = static_cast<double>(std::ranges::size(points));
    for (auto& x : out) {
        x /= n;
    }
    return out;
}

/**
 * Radius of a point set, defined as the mean distance from its centroid to each member.
 *
 * This is exactly zero if and only if all points coincide;
 * coincident points are detected directly so that rounding in the centroid cannot produce a spurious non-zero radius.
 */
template<PointSet Points_>
double radius_centroid(const Points_& points) {
    internal::check_point_set(points);
    if (internal::all_coincide(points)) {
        return 0;
    }
    const auto center = centroid(points);
    double total = 0;
    for (const auto& p : points) {
        total += euclidean_distance(p, center);
    }
    return total / static_cast<double>(std::ranges::size(points));
}

/**
 * Mean distance over all unordered pairs of a point set, or zero for a singleton.
 */
template<PointSet Points_>
double mean_pairwise_distance(const Points_& points) {
    internal::check_point_set(points);
    const auto n = std::ranges::size(points);
    if (n < 2) {
        return 0;
    }
    double total = 0;
    auto outer = std::ranges::begin(points);
    for (std::size_t i = 0; i < n; ++i, ++outer) {
        auto inner = std::next(outer);
        for (std::size_t j = i + 1; j < n; ++j, ++inner) {
            total += euclidean_distance(*outer, *inner);
        }
    }
    return total / (static_cast<double>(n) * static_cast<double>(n - 1) / 2);
}

/**
 * @return Largest pairwise distance in the set, zero for a singleton.
 */
template<PointSet Points_>
double diameter(const Points_& points) {
    internal::check_point_set(points);
    double out = 0;
    for (auto a = std::ranges::begin(points); a != std::ranges::end(points); ++a) {
        for (auto b = std::next(a); b != std::ranges::end(points); ++b) {
            out = std::max(out, euclidean_distance(*a, *b));
        }
    }
    return out;
}

/**
 * @brief Symmetric matrix of pairwise distances with a zero diagonal.
 */
class DistanceMatrix {
public:
    /**
     * Euclidean distances between all points of `d`.
     */
    explicit DistanceMatrix(const Dataset& d) : my_n(d.size()), my_entries(my_n * my_n) {
        for (std::size_t i = 0; i < my_n; ++i) {
            for (std::size_t j = i + 1; j < my_n; ++j) {
                const double dist = euclidean_distance(d[i], d[j]);
                my_entries[i * my_n + j] = dist;
                my_entries[j * my_n + i] = dist;
            }
        }
    }

    /**
     * @param entries Square matrix given as rows.
     * Must be symmetric, nonnegative and finite with a zero diagonal.
     */
    explicit DistanceMatrix(const std::vector<std::vector<double> >& entries) : my_n(entries.size()), my_entries(my_n * my_n) {
        if (my_n == 0) {
            throw std::invalid_argument("distance matrix must not be empty");
        }
        for (std::size_t i = 0; i < my_n; ++i) {
            if (entries[i].size() != my_n) {
                throw std::invalid_argument("distance matrix must be square");
            }
            for (std::size_t j = 0; j < my_n; ++j) {
                const double x = entries[i][j];
                if (!std::isfinite(x) || x < 0) {
                    throw std::invalid_argument("distances must be finite and nonnegative");
                }
                if (x != entries[j][i]) {
                    throw std::invalid_argument("distance matrix must be symmetric");
                }
                my_entries[i * my_n + j] = x;
            }
            if (entries[i][i] != 0) {
                throw std::invalid_argument("distance matrix must have a zero diagonal");
            }
        }
    }

    std::size_t size() const {
        return my_n;
    }

    double operator()(std::size_t i, std::size_t j) const {
        return my_entries[i * my_n + j];
    }

    /**
     * Mean distance over unordered pairs drawn from `indices`, zero when there is fewer than two.
     */
    double mean_pairwise(std::span<const std::size_t> indices) const {
        const auto n = indices.size();
        if (n < 2) {
            return 0;
        }
        double total = 0;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                total += (*this)(indices[a], indices[b]);
            }
        }
        return total / (static_cast<double>(n) * static_cast<double>(n - 1) / 2);
    }

    /**
     * Mean over all unordered pairs of the matrix.
     */
    double mean_pairwise() const {
        std::vector<std::size_t> everything(my_n);
        for (std::size_t i = 0; i < my_n; ++i) {
            everything[i] = i;
        }
        return mean_pairwise(everything);
    }

private:
    std::size_t my_n;
    std::vector<double> my_entries;
};

}

#endif
