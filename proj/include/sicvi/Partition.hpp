#ifndef SICVI_PARTITION_HPP
#define SICVI_PARTITION_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "Dataset.hpp"

/**
 * @file Partition.hpp
 * @brief Hard assignment of points to clusters.
 */

namespace sicvi {

/**
 * @brief Assignment of every point index to exactly one cluster.
 *
 * Labels are `0, ..., k - 1` and every label has at least one member.
 */
class Partition {
public:
    /**
     * @param labels Cluster label for each point.
     * Throws `std::invalid_argument` if `labels` is empty or if any label in `[0, max label]` has no members.
     */
    explicit Partition(std::vector<std::size_t> labels) : my_labels(std::move(labels)) {
        if (my_labels.empty()) {
            throw std::invalid_argument("partition must label at least one point");
        }
        my_k = *std::max_element(my_labels.begin(), my_labels.end()) + 1;
        if (my_k > my_labels.size()) {
            throw std::invalid_argument("cluster label " + std::to_string(my_k - 1) + " exceeds the number of points");
        }
        my_members.resize(my_k);
        for (std::size_t i = 0; i < my_labels.size(); ++i) {
            my_members[my_labels[i]].push_back(i);
        }
        for (std::size_t c = 0; c < my_k; ++c) {
            if (my_members[c].empty()) {
                throw std::invalid_argument("cluster label " + std::to_string(c) + " has no members");
            }
        }
    }

    /**
     * Relabel arbitrary integer labels to `0, ..., k - 1` in order of first appearance.
     */
    template<typename Label_>
    static Partition from_labels(const std::vector<Label_>& raw) {
        std::unordered_map<Label_, std::size_t> mapping;
        std::vector<std::size_t> labels;
        labels.reserve(raw.size());
        for (const auto& l : raw) {
            auto it = mapping.try_emplace(l, mapping.size()).first;
            labels.push_back(it->second);
        }
        return Partition(std::move(labels));
    }

    static Partition single_cluster(std::size_t n) {
        return Partition(std::vector<std::size_t>(n, 0));
    }

    static Partition singletons(std::size_t n) {
        std::vector<std::size_t> labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            labels[i] = i;
        }
        return Partition(std::move(labels));
    }

    /**
     * @return Number of labelled points.
     */
    std::size_t size() const {
        return my_labels.size();
    }

    /**
     * @return Number of clusters.
     */
    std::size_t k() const {
        return my_k;
    }

    std::size_t operator[](std::size_t i) const {
        return my_labels[i];
    }

    const std::vector<std::size_t>& labels() const {
        return my_labels;
    }

    /**
     * @return Indices of the points in cluster `c`, in increasing order.
     */
    const std::vector<std::size_t>& members(std::size_t c) const {
        return my_members[c];
    }

    std::vector<std::size_t> cluster_sizes() const {
        std::vector<std::size_t> out;
        out.reserve(my_k);
        for (const auto& m : my_members) {
            out.push_back(m.size());
        }
        return out;
    }

    /**
     * @return Same grouping with labels renumbered by first appearance.
     */
    Partition canonical() const {
        return from_labels(my_labels);
    }

    /**
     * @return Whether every cluster of this partition lies inside a single cluster of `coarser`.
     */
    bool refines(const Partition& coarser) const {
        if (coarser.size() != size()) {
            return false;
        }
        std::vector<std::size_t> image(my_k, std::numeric_limits<std::size_t>::max());
        for (std::size_t i = 0; i < my_labels.size(); ++i) {
            auto& target = image[my_labels[i]];
            if (target == std::numeric_limits<std::size_t>::max()) {
                target = coarser[i];
            } else if (target != coarser[i]) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.my_labels == b.my_labels;
    }

private:
    std::vector<std::size_t> my_labels;
    std::size_t my_k = 0;
    std::vector<std::vector<std::size_t> > my_members;
};

/**
 * Throw `std::invalid_argument` unless `p` labels exactly the points of `d`.
 */
inline void check_partition(const Dataset& d, const Partition& p) {
    if (d.size() != p.size()) {
        throw std::invalid_argument("partition labels " + std::to_string(p.size()) + " points but the dataset has " +
                                    std::to_string(d.size()));
    }
}

}

#endif
