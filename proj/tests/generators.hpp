#ifndef SICVI_TEST_GENERATORS_HPP
#define SICVI_TEST_GENERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "sicvi/Dataset.hpp"
#include "sicvi/Partition.hpp"

// Random inputs for the property tests; seeds are fixed so failures reproduce.

namespace gen {

struct Labelled {
    sicvi::Dataset data;
    sicvi::Partition partition;
};

/**
 * Three Gaussian blobs with well-spread centers, labelled by blob. Sizes are as equal as possible.
 */
inline Labelled blobs(std::mt19937_64& rng, std::size_t n = 20, std::size_t k = 3, std::size_t dim = 2) {
    std::normal_distribution<double> center(0, 5), noise(0, 1);
    std::vector<sicvi::Point> centers(k, sicvi::Point(dim));
    for (auto& c : centers) {
        for (auto& x : c) {
            x = center(rng);
        }
    }
    std::vector<sicvi::Point> points;
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < n; ++i) {
        const auto label = i * k / n;
        sicvi::Point p(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            p[d] = centers[label][d] + noise(rng);
        }
        points.push_back(std::move(p));
        labels.push_back(label);
    }
    return { sicvi::Dataset(points), sicvi::Partition(std::move(labels)) };
}

/**
 * Uniform points with a random labelling into `k` non-empty clusters.
 */
inline Labelled uniform(std::mt19937_64& rng, std::size_t n, std::size_t k, std::size_t dim = 2) {
    std::uniform_real_distribution<double> coord(-10, 10);
    std::vector<sicvi::Point> points(n, sicvi::Point(dim));
    for (auto& p : points) {
        for (auto& x : p) {
            x = coord(rng);
        }
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = i < k ? i : rng() % k;
    }
    std::shuffle(labels.begin(), labels.end(), rng);
    return { sicvi::Dataset(points), sicvi::Partition(std::move(labels)) };
}

/**
 * Reorder the points by a random permutation and relabel the clusters by another.
 */
inline Labelled shuffle(std::mt19937_64& rng, const Labelled& in) {
    const auto n = in.data.size();
    std::vector<std::size_t> order(n), relabel(in.partition.k());
    std::iota(order.begin(), order.end(), 0);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::shuffle(relabel.begin(), relabel.end(), rng);

    auto original = in.data.points();
    std::vector<sicvi::Point> points;
    std::vector<std::size_t> labels;
    for (auto i : order) {
        points.push_back(original[i]);
        labels.push_back(relabel[in.partition[i]]);
    }
    return { sicvi::Dataset(points), sicvi::Partition(std::move(labels)) };
}

}

#endif
