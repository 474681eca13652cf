#ifndef SICVI_SIMPLICITY_HPP
#define SICVI_SIMPLICITY_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "Dataset.hpp"
#include "Dendrogram.hpp"
#include "IndexResult.hpp"
#include "Partition.hpp"
#include "geometry.hpp"

/**
 * @file simplicity.hpp
 * @brief Simplicity index of a partition and of a complete merge hierarchy.
 *
 * For a partition into `k` clusters with sizes `c_n` and spreads `r_n`, and a whole-dataset spread `R`,
 * the simplicity index is `k * (prod_n c_n^(r_n / R))^(1 / k)`, with every exponent set to zero when `R = 0`.
 * Lower is simpler; the best value is 1 (coincident points in one cluster)
 * and both extreme partitions of `N` distinct points score `N`.
 */

namespace sicvi {

/**
 * Combine cluster sizes and spreads into the simplicity index.
 * Evaluated in log space as `k * exp(sum_n (spread_n / whole) * log(c_n) / k)`.
 *
 * @param sizes Number of members in each cluster.
 * @param spreads Spread of each cluster, same length as `sizes`.
 * @param whole Spread of the entire dataset.
 */
inline IndexResult simplicity_from_spreads(const std::vector<std::size_t>& sizes, const std::vector<double>& spreads, double whole) {
    if (sizes.empty() || sizes.size() != spreads.size()) {
        throw std::invalid_argument("need one spread per cluster");
    }
    const double k = static_cast<double>(sizes.size());
    if (whole == 0) {
        return IndexResult(k);
    }
    double log_sum = 0;
    for (std::size_t n = 0; n < sizes.size(); ++n) {
        log_sum += (spreads[n] / whole) * std::log(static_cast<double>(sizes[n]));
    }
    return IndexResult::from(k * std::exp(log_sum / k));
}

/**
 * Simplicity index using the mean member-to-centroid distance as the spread of each cluster and of the dataset.
 */
inline IndexResult si_centroid(const Dataset& d, const Partition& p) {
    check_partition(d, p);
    std::vector<double> radii;
    radii.reserve(p.k());
    for (std::size_t c = 0; c < p.k(); ++c) {
        radii.push_back(radius_centroid(d.select(p.members(c))));
    }
    return simplicity_from_spreads(p.cluster_sizes(), radii, radius_centroid(d.all()));
}

/**
 * Simplicity index using the mean pairwise distance as the spread, computed from a distance matrix.
 * Singleton clusters have zero spread.
 */
inline IndexResult si_distance(const DistanceMatrix& dm, const Partition& p) {
    if (dm.size() != p.size()) {
        throw std::invalid_argument("partition labels " + std::to_string(p.size()) + " items but the distance matrix is " +
                                    std::to_string(dm.size()) + "x" + std::to_string(dm.size()));
    }
    std::vector<double> means;
    means.reserve(p.k());
    for (std::size_t c = 0; c < p.k(); ++c) {
        means.push_back(dm.mean_pairwise(p.members(c)));
    }
    return simplicity_from_spreads(p.cluster_sizes(), means, dm.mean_pairwise());
}

inline IndexResult si_distance(const Dataset& d, const Partition& p) {
    check_partition(d, p);
    return si_distance(DistanceMatrix(d), p);
}

/**
 * @brief Simplicity index at one dendrogram level.
 */
struct CurveSample {
    double distance;
    IndexResult value;
};

/**
 * @brief Simplicity index as a function of merge distance, one sample per dendrogram level.
 */
class SiCurve {
public:
    /**
     * @param samples Samples with nondecreasing distances.
     */
    explicit SiCurve(std::vector<CurveSample> samples) : my_samples(std::move(samples)) {
        for (std::size_t i = 1; i < my_samples.size(); ++i) {
            if (my_samples[i].distance < my_samples[i - 1].distance) {
                throw std::invalid_argument("curve distances must be nondecreasing (sample " + std::to_string(i) + ")");
            }
        }
    }

    std::size_t size() const {
        return my_samples.size();
    }

    const CurveSample& operator[](std::size_t i) const {
        return my_samples[i];
    }

    const std::vector<CurveSample>& samples() const {
        return my_samples;
    }

private:
    std::vector<CurveSample> my_samples;
};

/**
 * Evaluate `si_centroid()` on every level of `dg`, in level order.
 */
inline SiCurve si_curve(const Dataset& d, const Dendrogram& dg) {
    if (dg.size() != d.size()) {
        throw std::invalid_argument("dendrogram has " + std::to_string(dg.size()) + " leaves but the dataset has " +
                                    std::to_string(d.size()) + " points");
    }
    std::vector<CurveSample> samples;
    samples.reserve(dg.size());
    for (const auto& level : dg.levels()) {
        samples.push_back(CurveSample{ level.distance, si_centroid(d, level.partition) });
    }
    return SiCurve(std::move(samples));
}

/**
 * Hierarchical simplicity index: the trapezoid integral of the curve over merge distance,
 * divided by `(N - 1) * (D_N - D_1)` where `N` is the number of samples.
 *
 * Undefined if `D_N = D_1` or if any sample is undefined.
 * Throws `std::invalid_argument` if the curve has fewer than 2 samples.
 */
inline IndexResult si_hierarchical(const SiCurve& curve) {
    const auto n = curve.size();
    if (n < 2) {
        throw std::invalid_argument("hierarchical index needs at least 2 curve samples");
    }
    IndexResult area(0);
    for (std::size_t i = 1; i < n; ++i) {
        const auto& lo = curve[i - 1];
        const auto& hi = curve[i];
        area = area + (hi.value + lo.value) * IndexResult((hi.distance - lo.distance) / 2);
    }
    const double span = curve[n - 1].distance - curve[0].distance;
    return area / IndexResult(static_cast<double>(n - 1) * span);
}

/**
 * @return 1-based level with the smallest defined value (earliest on ties), or `std::nullopt` if no sample is defined.
 */
inline std::optional<std::size_t> curve_minimum_level(const SiCurve& curve) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const auto& v = curve[i].value;
        if (v && (!best || v.value() < curve[*best - 1].value.value())) {
            best = i + 1;
        }
    }
    return best;
}

}

#endif
