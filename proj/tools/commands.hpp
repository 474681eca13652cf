#ifndef SICVI_CLI_COMMANDS_HPP
#define SICVI_CLI_COMMANDS_HPP

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "sicvi.hpp"

#include "report.hpp"

/**
 * @file commands.hpp
 * @brief Implementations of the CLI subcommands, independent of argument parsing.
 *
 * Each command returns a `Report` or throws:
 * `UsageError` for bad identifiers or option combinations,
 * `InputError` (or `std::invalid_argument` from the library) for unreadable or inconsistent input.
 */

namespace sicvi::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Parse partition-index identifiers, defaulting to all of them when `names` is empty.
 */
inline std::vector<IndexId> parse_partition_indices(const std::vector<std::string>& names) {
    std::vector<IndexId> out;
    if (names.empty()) {
        out.assign(partition_index_ids.begin(), partition_index_ids.end());
        return out;
    }
    for (const auto& name : names) {
        IndexId id;
        try {
            id = parse_index_id(name);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (id == IndexId::SI_HIERARCHICAL) {
            throw UsageError("si_hierarchical scores a dendrogram; use the 'hierarchical' command");
        }
        out.push_back(id);
    }
    return out;
}

inline Report run_compute(const std::filesystem::path& data_path, const std::filesystem::path& labels_path, const std::vector<std::string>& index_names) {
    const auto ids = parse_partition_indices(index_names);
    const auto data = read_points(data_path);
    const auto partition = read_labels(labels_path, data.size());

    Report r;
    r.command = "compute";
    r.arguments = { data_path.string(), labels_path.string() };
    r.n = data.size();
    r.dim = data.dim();
    r.k = partition.k();
    for (auto id : ids) {
        r.results.push_back(IndexValue{ std::string(to_string(id)), evaluate(id, data, partition) });
    }
    return r;
}

inline Report run_properties(const std::vector<std::string>& index_names, Variant variant) {
    const auto ids = parse_partition_indices(index_names);
    Report r;
    r.command = "properties";
    r.arguments = { std::string(to_string(variant)) };
    r.flags.emplace();
    for (auto id : ids) {
        r.flags->push_back(make_flag_row(audit(id, variant)));
    }
    return r;
}

/**
 * @param linkage Path to a linkage file, or `"auto"` for single linkage.
 */
inline Report run_hierarchical(const std::filesystem::path& data_path, const std::string& linkage) {
    const auto data = read_points(data_path);
    if (data.size() < 2) {
        throw InputError(data_path.string(), 0, "hierarchical scoring needs at least 2 points");
    }
    const auto dendrogram = linkage == "auto" ? single_linkage(data) : read_linkage(std::filesystem::path(linkage), data.size());
    const auto curve = si_curve(data, dendrogram);

    Report r;
    r.command = "hierarchical";
    r.arguments = { data_path.string(), linkage };
    r.n = data.size();
    r.dim = data.dim();
    r.curve.emplace();
    for (std::size_t i = 0; i < curve.size(); ++i) {
        r.curve->push_back(CurveRow{ i + 1, dendrogram.levels()[i].partition.k(), curve[i].distance, curve[i].value });
    }
    r.si_hierarchical = sicvi::si_hierarchical(curve);
    r.curve_minimum_level = curve_minimum_level(curve);
    r.results.push_back(IndexValue{ "si_hierarchical", *r.si_hierarchical });
    return r;
}

/**
 * Write `<id>_points.csv` and `<id>_labels.csv` into `out_dir`, creating it if needed.
 */
inline Report run_synth(const std::string& name, const std::filesystem::path& out_dir) {
    SyntheticId id;
    try {
        id = parse_synthetic_id(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto ds = synthetic_dataset(id);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw InputError(out_dir.string(), 0, "cannot create directory: " + ec.message());
    }

    const auto points_path = out_dir / (name + "_points.csv");
    const auto labels_path = out_dir / (name + "_labels.csv");
    auto write = [](const std::filesystem::path& path, auto&& writer) {
        std::ofstream out(path);
        if (!out) {
            throw InputError(path.string(), 0, "cannot open for writing");
        }
        writer(out);
        if (!out) {
            throw InputError(path.string(), 0, "write failed");
        }
    };
    write(points_path, [&](std::ostream& o) { write_points(o, ds.data); });
    write(labels_path, [&](std::ostream& o) { write_labels(o, ds.partition); });

    Report r;
    r.command = "synth";
    r.arguments = { name, out_dir.string() };
    r.n = ds.data.size();
    r.dim = ds.data.dim();
    r.k = ds.partition.k();
    r.files = { points_path.string(), labels_path.string() };
    return r;
}

}

#endif
