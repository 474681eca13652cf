#ifndef SICVI_INDICES_HPP
#define SICVI_INDICES_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "Dataset.hpp"
#include "IndexResult.hpp"
#include "Partition.hpp"
#include "classic.hpp"
#include "simplicity.hpp"

/**
 * @file indices.hpp
 * @brief Registry of validity indices by stable identifier, with their metadata.
 */

namespace sicvi {

enum class IndexId { SI_CENTROID, SI_DISTANCE, SI_HIERARCHICAL, CH, SILHOUETTE, SF, DUNN, DB, CINDEX };

inline constexpr std::array<IndexId, 9> all_index_ids{
    IndexId::SI_CENTROID, IndexId::SI_DISTANCE, IndexId::SI_HIERARCHICAL,
    IndexId::CH, IndexId::SILHOUETTE, IndexId::SF, IndexId::DUNN, IndexId::DB, IndexId::CINDEX,
};

/**
 * Indices that score a single partition; `si_hierarchical` scores a dendrogram instead.
 */
inline constexpr std::array<IndexId, 8> partition_index_ids{
    IndexId::SI_CENTROID, IndexId::SI_DISTANCE,
    IndexId::CH, IndexId::SILHOUETTE, IndexId::SF, IndexId::DUNN, IndexId::DB, IndexId::CINDEX,
};

inline std::string_view to_string(IndexId id) {
    switch (id) {
        case IndexId::SI_CENTROID: return "si_centroid";
        case IndexId::SI_DISTANCE: return "si_distance";
        case IndexId::SI_HIERARCHICAL: return "si_hierarchical";
        case IndexId::CH: return "ch";
        case IndexId::SILHOUETTE: return "silhouette";
        case IndexId::SF: return "sf";
        case IndexId::DUNN: return "dunn";
        case IndexId::DB: return "db";
        case IndexId::CINDEX: return "cindex";
    }
    throw std::invalid_argument("unknown index");
}

/**
 * Throws `std::invalid_argument` for unrecognized identifiers.
 */
inline IndexId parse_index_id(std::string_view name) {
    for (auto id : all_index_ids) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw std::invalid_argument("unknown index '" + std::string(name) + "'");
}

enum class Direction { HIGHER_BETTER, LOWER_BETTER };

/**
 * @brief Static metadata about an index.
 */
struct IndexDescriptor {
    IndexId id;

    Direction direction;

    /**
     * Optimum defined by the formula itself, if it has one.
     * Absent for indices that are unbounded in their improving direction.
     */
    std::optional<double> best_value;

    /**
     * Reference value at the two extreme partitions as a function of the number of points, if the index has one.
     */
    std::function<double(std::size_t)> baseline;

    bool has_baseline() const {
        return static_cast<bool>(baseline);
    }
};

inline IndexDescriptor descriptor(IndexId id) {
    auto n_points = [](std::size_t n) -> double { return static_cast<double>(n); };
    switch (id) {
        case IndexId::SI_CENTROID:
        case IndexId::SI_DISTANCE:
            return { id, Direction::LOWER_BETTER, 1.0, n_points };
        case IndexId::SI_HIERARCHICAL:
            return { id, Direction::LOWER_BETTER, std::nullopt, {} };
        case IndexId::CH:
        case IndexId::SF:
        case IndexId::DUNN:
            return { id, Direction::HIGHER_BETTER, std::nullopt, {} };
        case IndexId::SILHOUETTE:
            return { id, Direction::HIGHER_BETTER, 1.0, {} };
        case IndexId::DB:
            return { id, Direction::LOWER_BETTER, std::nullopt, {} };
        case IndexId::CINDEX:
            return { id, Direction::LOWER_BETTER, 0.0, {} };
    }
    throw std::invalid_argument("unknown index");
}

inline IndexDescriptor descriptor(std::string_view name) {
    return descriptor(parse_index_id(name));
}

/**
 * @return Whether defined value `a` is strictly better than `b` under `direction`.
 */
inline bool is_better(Direction direction, double a, double b) {
    return direction == Direction::HIGHER_BETTER ? a > b : a < b;
}

/**
 * Evaluate a partition index on `p` over `d`.
 * Throws `std::invalid_argument` for `si_hierarchical`, which needs a dendrogram; see `si_curve()` and `si_hierarchical()`.
 */
inline IndexResult evaluate(IndexId id, const Dataset& d, const Partition& p) {
    switch (id) {
        case IndexId::SI_CENTROID: return si_centroid(d, p);
        case IndexId::SI_DISTANCE: return si_distance(d, p);
        case IndexId::CH: return calinski_harabasz(d, p);
        case IndexId::SILHOUETTE: return silhouette(d, p);
        case IndexId::SF: return score_function(d, p);
        case IndexId::DUNN: return dunn(d, p);
        case IndexId::DB: return davies_bouldin(d, p);
        case IndexId::CINDEX: return c_index(d, p);
        case IndexId::SI_HIERARCHICAL:
            throw std::invalid_argument("si_hierarchical scores a dendrogram, not a partition");
    }
    throw std::invalid_argument("unknown index");
}

inline IndexResult evaluate(std::string_view name, const Dataset& d, const Partition& p) {
    return evaluate(parse_index_id(name), d, p);
}

}

#endif
