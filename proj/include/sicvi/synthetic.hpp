#ifndef SICVI_SYNTHETIC_HPP
#define SICVI_SYNTHETIC_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "Dataset.hpp"
#include "Partition.hpp"

/**
 * @file synthetic.hpp
 * @brief Fixed probe datasets for auditing validity-index properties.
 *
 * The base points are
 * 1: (0,0,1), 2: (0,1,0), 3: (1,0,0),
 * 4: (0,0,2), 5: (0,2,0), 6: (2,0,0),
 * 7: (0,0,3), 8: (0,3,0), 9: (3,0,0).
 * "X" datasets use distinct points; "Y" datasets repeat point 1.
 * The suffix is `S` (short, 3 points) or `L` (long, 6 or 9 points)
 * and the digit is the number of clusters.
 */

namespace sicvi {

enum class SyntheticId { X1S, X2S, X3S, Y1S, Y2S, X1L, X2L, X9L, Y1L, Y2L };

inline constexpr std::array<SyntheticId, 10> all_synthetic_ids{
    SyntheticId::X1S, SyntheticId::X2S, SyntheticId::X3S, SyntheticId::Y1S, SyntheticId::Y2S,
    SyntheticId::X1L, SyntheticId::X2L, SyntheticId::X9L, SyntheticId::Y1L, SyntheticId::Y2L,
};

inline std::string_view to_string(SyntheticId id) {
    switch (id) {
        case SyntheticId::X1S: return "X1S";
        case SyntheticId::X2S: return "X2S";
        case SyntheticId::X3S: return "X3S";
        case SyntheticId::Y1S: return "Y1S";
        case SyntheticId::Y2S: return "Y2S";
        case SyntheticId::X1L: return "X1L";
        case SyntheticId::X2L: return "X2L";
        case SyntheticId::X9L: return "X9L";
        case SyntheticId::Y1L: return "Y1L";
        case SyntheticId::Y2L: return "Y2L";
    }
    throw std::invalid_argument("unknown synthetic dataset");
}

/**
 * Throws `std::invalid_argument` for unrecognized names.
 */
inline SyntheticId parse_synthetic_id(std::string_view name) {
    for (auto id : all_synthetic_ids) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw std::invalid_argument("unknown synthetic dataset '" + std::string(name) + "'");
}

/**
 * @brief Probe dataset together with its reference partition.
 */
struct LabelledDataset {
    Dataset data;
    Partition partition;
};

inline LabelledDataset synthetic_dataset(SyntheticId id) {
    static const std::vector<Point> base{
        { 0, 0, 1 }, { 0, 1, 0 }, { 1, 0, 0 },
        { 0, 0, 2 }, { 0, 2, 0 }, { 2, 0, 0 },
        { 0, 0, 3 }, { 0, 3, 0 }, { 3, 0, 0 },
    };
    auto first = [&](std::size_t n) { return std::vector<Point>(base.begin(), base.begin() + n); };
    auto repeated = [&](std::size_t n) { return std::vector<Point>(n, base.front()); };

    switch (id) {
        case SyntheticId::X1S: return { Dataset(first(3)), Partition({ 0, 0, 0 }) };
        case SyntheticId::X2S: return { Dataset(first(3)), Partition({ 0, 1, 1 }) };
        case SyntheticId::X3S: return { Dataset(first(3)), Partition({ 0, 1, 2 }) };
        case SyntheticId::Y1S: return { Dataset(repeated(3)), Partition({ 0, 0, 0 }) };
        case SyntheticId::Y2S: return { Dataset(repeated(3)), Partition({ 0, 0, 1 }) };
        case SyntheticId::X1L: return { Dataset(first(9)), Partition::single_cluster(9) };
        case SyntheticId::X2L: return { Dataset(first(9)), Partition({ 0, 0, 0, 1, 1, 1, 1, 1, 1 }) };
        case SyntheticId::X9L: return { Dataset(first(9)), Partition::singletons(9) };
        case SyntheticId::Y1L: return { Dataset(repeated(6)), Partition::single_cluster(6) };
        case SyntheticId::Y2L: return { Dataset(repeated(6)), Partition({ 0, 0, 0, 1, 1, 1 }) };
    }
    throw std::invalid_argument("unknown synthetic dataset");
}

inline LabelledDataset synthetic_dataset(std::string_view name) {
    return synthetic_dataset(parse_synthetic_id(name));
}

}

#endif
