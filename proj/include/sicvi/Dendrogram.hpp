#ifndef SICVI_DENDROGRAM_HPP
#define SICVI_DENDROGRAM_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "Dataset.hpp"
#include "Partition.hpp"
#include "geometry.hpp"

/**
 * @file Dendrogram.hpp
 * @brief Agglomerative merge sequences and the partitions they induce.
 */

namespace sicvi {

/**
 * @brief One agglomeration step in linkage-matrix convention.
 *
 * Leaves have ids `0, ..., N - 1` and the cluster created by the `i`-th merge has id `N + i`.
 */
struct Merge {
    std::size_t left;
    std::size_t right;
    double distance;

    friend bool operator==(const Merge&, const Merge&) = default;
};

/**
 * @brief Partition and merge distance at one level of a dendrogram.
 */
struct DendrogramLevel {
    double distance;
    Partition partition;
};

/**
 * @brief Complete merge hierarchy over `N` points.
 *
 * Level 1 is the all-singletons partition at distance zero.
 * Level `i + 1` is obtained by applying the `i`-th merge, so the last level (level `N`) is a single cluster.
 * Merge distances are nondecreasing and each level coarsens the one before it.
 */
class Dendrogram {
public:
    /**
     * @param n Number of leaves, at least 1.
     * @param merges Exactly `n - 1` merges.
     * Throws `std::invalid_argument` naming the offending (0-based) row if an id is out of range or reused,
     * a distance is negative or non-finite, or the distances decrease.
     */
    Dendrogram(std::size_t n, std::vector<Merge> merges) : my_merges(std::move(merges)) {
        if (n == 0) {
            throw std::invalid_argument("dendrogram needs at least one leaf");
        }
        if (my_merges.size() != n - 1) {
            throw std::invalid_argument("expected " + std::to_string(n - 1) + " merges for " + std::to_string(n) +
                                        " leaves, got " + std::to_string(my_merges.size()));
        }

        // Leaves under each linkage id.
        std::vector<std::vector<std::size_t> > members(2 * n - 1);
        std::vector<bool> consumed(2 * n - 1, false);
        for (std::size_t i = 0; i < n; ++i) {
            members[i].push_back(i);
        }

        my_levels.reserve(n);
        my_levels.push_back(DendrogramLevel{ 0, Partition::singletons(n) });

        std::vector<std::size_t> labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            labels[i] = i;
        }

        double previous = 0;
        for (std::size_t r = 0; r < my_merges.size(); ++r) {
            const auto& m = my_merges[r];
            auto fail = [&](const std::string& why) {
                throw std::invalid_argument("linkage row " + std::to_string(r) + ": " + why);
            };
            const std::size_t limit = n + r;
            if (m.left >= limit || m.right >= limit) {
                fail("cluster id out of range (must be below " + std::to_string(limit) + ")");
            }
            if (m.left == m.right) {
                fail("cannot merge cluster " + std::to_string(m.left) + " with itself");
            }
            if (consumed[m.left] || consumed[m.right]) {
                fail("cluster " + std::to_string(consumed[m.left] ? m.left : m.right) + " was already merged");
            }
            if (!std::isfinite(m.distance) || m.distance < 0) {
                fail("distance must be finite and nonnegative");
            }
            if (m.distance < previous) {
                fail("distances must be nondecreasing");
            }
            previous = m.distance;

            consumed[m.left] = consumed[m.right] = true;
            auto& merged = members[limit];
            merged = std::move(members[m.left]);
            merged.insert(merged.end(), members[m.right].begin(), members[m.right].end());
            members[m.right].clear();
            for (auto leaf : merged) {
                labels[leaf] = limit;
            }
            my_levels.push_back(DendrogramLevel{ m.distance, Partition::from_labels(labels) });
        }
    }

    /**
     * @return Number of leaves.
     */
    std::size_t size() const {
        return my_levels.size();
    }

    /**
     * @return All `N` levels, from singletons to the single cluster.
     */
    const std::vector<DendrogramLevel>& levels() const {
        return my_levels;
    }

    const std::vector<Merge>& merges() const {
        return my_merges;
    }

private:
    std::vector<Merge> my_merges;
    std::vector<DendrogramLevel> my_levels;
};

/**
 * Single-linkage agglomeration of `d`, i.e., clusters are merged in order of their minimum inter-point distance.
 *
 * Ties are broken by merging the pair with the lexicographically smallest (smaller id, larger id), using linkage ids.
 * This is the naive cubic algorithm, which is fine for the small datasets used in validity studies.
 * Throws `std::invalid_argument` if `d` has fewer than 2 points.
 */
inline std::vector<Merge> single_linkage_merges(const Dataset& d) {
    const auto n = d.size();
    if (n < 2) {
        throw std::invalid_argument("single linkage needs at least 2 points");
    }

    DistanceMatrix pairwise(d);
    std::vector<std::vector<double> > dist(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            dist[i][j] = pairwise(i, j);
        }
    }

    // Slot i holds cluster id ids[i] while active[i] is set.
    std::vector<std::size_t> ids(n);
    std::vector<bool> active(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = i;
    }

    std::vector<Merge> merges;
    merges.reserve(n - 1);
    for (std::size_t step = 0; step + 1 < n; ++step) {
        std::size_t best_a = n, best_b = n;
        double best = std::numeric_limits<double>::infinity();
        std::pair<std::size_t, std::size_t> best_key;

        for (std::size_t a = 0; a < n; ++a) {
            if (!active[a]) {
                continue;
            }
            for (std::size_t b = a + 1; b < n; ++b) {
                if (!active[b]) {
                    continue;
                }
                const double current = dist[a][b];
                std::pair<std::size_t, std::size_t> key(std::min(ids[a], ids[b]), std::max(ids[a], ids[b]));
                if (best_a == n || current < best || (current == best && key < best_key)) {
                    best = current;
                    best_key = key;
                    best_a = a;
                    best_b = b;
                }
            }
        }

        merges.push_back(Merge{ best_key.first, best_key.second, best });

        // Reuse slot best_a for the merged cluster.
        for (std::size_t c = 0; c < n; ++c) {
            if (active[c] && c != best_a && c != best_b) {
                const double updated = std::min(dist[best_a][c], dist[best_b][c]);
                dist[best_a][c] = dist[c][best_a] = updated;
            }
        }
        active[best_b] = false;
        ids[best_a] = n + step;
    }

    return merges;
}

/**
 * @return Single-linkage dendrogram of `d`; see `single_linkage_merges()`.
 */
inline Dendrogram single_linkage(const Dataset& d) {
    return Dendrogram(d.size(), single_linkage_merges(d));
}

}

#endif
