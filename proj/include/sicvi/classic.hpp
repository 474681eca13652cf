#ifndef SICVI_CLASSIC_HPP
#define SICVI_CLASSIC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "Dataset.hpp"
#include "IndexResult.hpp"
#include "Partition.hpp"
#include "geometry.hpp"

/**
 * @file classic.hpp
 * @brief Reference implementations of classic internal validity indices.
 *
 * All indices use Euclidean distances and arithmetic-mean centroids.
 * A zero denominator in any defining formula yields an undefined result, never NaN or infinity.
 */

namespace sicvi {

/**
 * @cond
 */
namespace internal {

inline std::vector<Point> cluster_centroids(const Dataset& d, const Partition& p) {
    std::vector<Point> out;
    out.reserve(p.k());
    for (std::size_t c = 0; c < p.k(); ++c) {
        out.push_back(centroid(d.select(p.members(c))));
    }
    return out;
}

inline double squared_distance(std::span<const double> a, const Point& b) {
    double out = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double delta = a[i] - b[i];
        out += delta * delta;
    }
    return out;
}

}
/**
 * @endcond
 */

/**
 * Calinski-Harabasz variance ratio, `(B / (k - 1)) / (W / (N - k))`,
 * where `B` is the size-weighted between-cluster sum of squares and `W` the within-cluster sum of squares.
 * Higher is better. Undefined for `k = 1`, `k = N` or `W = 0`.
 */
inline IndexResult calinski_harabasz(const Dataset& d, const Partition& p) {
    check_partition(d, p);
    const auto n = d.size();
    const auto k = p.k();
    if (k == 1 || k == n) {
        return IndexResult::undefined();
    }

    const auto overall = centroid(d.all());
    const auto centers = internal::cluster_centroids(d, p);
    double between = 0, within = 0;
    for (std::size_t c = 0; c < k; ++c) {
        const auto& members = p.members(c);
        between += static_cast<double>(members.size()) * internal::squared_distance(centers[c], overall);
        for (auto i : members) {
            within += internal::squared_distance(d[i], centers[c]);
        }
    }
    return safe_divide(between / static_cast<double>(k - 1), within / static_cast<double>(n - k));
}

/**
 * Mean silhouette width.
 * For each point `s = (b - a) / max(a, b)` with `a` the mean distance to the rest of its own cluster
 * and `b` the smallest mean distance to another cluster; points in singleton clusters have `s = 0`.
 * Higher is better, bounded above by 1.
 * Undefined for `k = 1` or when any non-singleton point has `a = b = 0`.
 */
inline IndexResult silhouette(const Dataset& d, const Partition& p) {
    check_partition(d, p);
    const auto n = d.size();
    const auto k = p.k();
    if (k == 1) {
        return IndexResult::undefined();
    }

    DistanceMatrix dm(d);
    double total = 0;
    std::vector<double> sums(k);
    for (std::size_t i = 0; i < n; ++i) {
        const auto own = p[i];
        if (p.members(own).size() == 1) {
            continue;
        }
        std::fill(sums.begin(), sums.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            sums[p[j]] += dm(i, j);
        }

        const double a = sums[own] / static_cast<double>(p.members(own).size() - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            if (c != own) {
                b = std::min(b, sums[c] / static_cast<double>(p.members(c).size()));
            }
        }

        auto s = safe_divide(b - a, std::max(a, b));
        if (!s) {
            return s;
        }
        total += s.value();
    }
    return IndexResult(total / static_cast<double>(n));
}

/**
 * Score function, `1 - 1 / exp(exp(bcd - wcd))`, where
 * `bcd = sum_k n_k * |c_k - c| / (N * K)` is the between-class distance and
 * `wcd = sum_k mean_{x in C_k} |x - c_k|` is the within-class distance.
 * Higher is better; always defined and within `[0, 1]`.
 */
inline IndexResult score_function(const Dataset& d, const Partition& p) {
    check_partition(d, p);
    const auto n = d.size();
    const auto k = p.k();
    const auto overall = centroid(d.all());

    double bcd = 0, wcd = 0;
    for (std::size_t c = 0; c < k; ++c) {
        auto members = d.select(p.members(c));
        bcd += static_cast<double>(members.size()) * euclidean_distance(centroid(members), overall);
        wcd += radius_centroid(members);
    }
    bcd /= static_cast<double>(n) * static_cast<double>(k);

    return IndexResult(1.0 - 1.0 / std::exp(std::exp(bcd - wcd)));
}

/**
 * Dunn index: smallest distance between points of different clusters divided by the largest cluster diameter.
 * Higher is better. Undefined for `k = 1` or when every cluster has zero diameter.
 */
inline IndexResult dunn(const Dataset& d, const Partition& p) {
    check_partition(d, p);
    if (p.k() == 1) {
        return IndexResult::undefined();
    }
    const auto n = d.size();
    DistanceMatrix dm(d);
    double separation = std::numeric_limits<double>::infinity();
    double diameter = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p[i] == p[j]) {
                diameter = std::max(diameter, dm(i, j));
            } else {
                separation = std::min(separation, dm(i, j));
            }
        }
    }
    return safe_divide(separation, diameter);
}

/**
 * Davies-Bouldin index with the mean member-to-centroid distance as each cluster's dispersion.
 * Lower is better. Undefined for `k = 1` or when two cluster centroids coincide.
 */
inline IndexResult davies_bouldin(const Dataset& d, const Partition& p) {
    check_partition(d, p);
    const auto k = p.k();
    if (k == 1) {
        return IndexResult::undefined();
    }

    const auto centers = internal::cluster_centroids(d, p);
    std::vector<double> dispersion(k);
    for (std::size_t c = 0; c < k; ++c) {
        dispersion[c] = radius_centroid(d.select(p.members(c)));
    }

    double total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        double worst = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) {
                continue;
            }
            auto ratio = safe_divide(dispersion[i] + dispersion[j], euclidean_distance(centers[i], centers[j]));
            if (!ratio) {
                return ratio;
            }
            worst = std::max(worst, ratio.value());
        }
        total += worst;
    }
    return IndexResult(total / static_cast<double>(k));
}

/**
 * C-index, `(S_w - S_min) / (S_max - S_min)`.
 * `S_w` is the sum of the `n_w` within-cluster pairwise distances, while `S_min` and `S_max` are the sums of the
 * `n_w` smallest and largest pairwise distances in the whole dataset.
 * Lower is better, bounded below by 0. Undefined when `S_max = S_min`, e.g., with no within-cluster pairs.
 */
inline IndexResult c_index(const Dataset& d, const Partition& p) {
    check_partition(d, p);
    const auto n = d.size();
    DistanceMatrix dm(d);

    std::vector<double> all;
    all.reserve(n * (n - 1) / 2);
    double within = 0;
    std::size_t nwithin = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            all.push_back(dm(i, j));
            if (p[i] == p[j]) {
                within += dm(i, j);
                ++nwithin;
            }
        }
    }

    std::sort(all.begin(), all.end());
    double smallest = 0, largest = 0;
    for (std::size_t i = 0; i < nwithin; ++i) {
        smallest += all[i];
        largest += all[all.size() - 1 - i];
    }
    return safe_divide(within - smallest, largest - smallest);
}

}

#endif
