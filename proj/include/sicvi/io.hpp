#ifndef SICVI_IO_HPP
#define SICVI_IO_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "Dataset.hpp"
#include "Dendrogram.hpp"
#include "Partition.hpp"

/**
 * @file io.hpp
 * @brief Plain-text formats for points, labels and linkage matrices.
 *
 * - Points: headerless CSV, one point per row, decimal reals.
 * - Labels: headerless, one nonnegative integer per row.
 * - Linkage: one merge per row, `left right distance`, separated by whitespace or commas.
 *
 * Blank lines are ignored. Errors carry the 1-based line number of the offending row.
 */

namespace sicvi {

/**
 * @brief Malformed or inconsistent input file.
 */
class InputError : public std::runtime_error {
public:
    InputError(const std::string& source, std::size_t line, const std::string& what) :
        std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what), my_line(line) {}

    /**
     * @return 1-based line number, or 0 if the error is not tied to a line.
     */
    std::size_t line() const {
        return my_line;
    }

private:
    std::size_t my_line;
};

/**
 * @cond
 */
namespace internal {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_fields(std::string_view line, bool allow_whitespace) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    auto is_sep = [&](char c) { return c == ',' || (allow_whitespace && (c == ' ' || c == '\t')); };
    while (start <= line.size()) {
        std::size_t end = start;
        while (end < line.size() && !is_sep(line[end])) {
            ++end;
        }
        auto field = trim(line.substr(start, end - start));
        if (!allow_whitespace || !field.empty()) {
            out.push_back(field);
        }
        if (end >= line.size()) {
            break;
        }
        start = end + 1;
    }
    return out;
}

template<typename Number_>
bool parse_number(std::string_view s, Number_& out) {
    if (s.empty()) {
        return false;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

template<class Callback_>
void for_each_row(std::istream& in, Callback_ callback) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto view = trim(line);
        if (!view.empty()) {
            callback(number, view);
        }
    }
}

inline std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(path.string(), 0, "cannot open file");
    }
    return in;
}

}
/**
 * @endcond
 */

inline Dataset read_points(std::istream& in, const std::string& source = "points") {
    std::vector<Point> points;
    internal::for_each_row(in, [&](std::size_t line, std::string_view row) {
        auto fields = internal::split_fields(row, false);
        Point p;
        p.reserve(fields.size());
        for (std::size_t f = 0; f < fields.size(); ++f) {
            double x;
            if (!internal::parse_number(fields[f], x) || !std::isfinite(x)) {
                throw InputError(source, line, "field " + std::to_string(f + 1) + " is not a finite real: '" + std::string(fields[f]) + "'");
            }
            p.push_back(x);
        }
        if (!points.empty() && p.size() != points.front().size()) {
            throw InputError(source, line, "expected " + std::to_string(points.front().size()) + " fields, got " + std::to_string(p.size()));
        }
        points.push_back(std::move(p));
    });
    if (points.empty()) {
        throw InputError(source, 0, "no points");
    }
    return Dataset(points);
}

inline Dataset read_points(const std::filesystem::path& path) {
    auto in = internal::open_input(path);
    return read_points(in, path.string());
}

/**
 * Read labels for `expected` points.
 * Labels must form the contiguous range `0, ..., k - 1`; a missing label is reported as an empty cluster.
 */
inline Partition read_labels(std::istream& in, std::size_t expected, const std::string& source = "labels") {
    std::vector<std::size_t> labels;
    std::vector<std::size_t> lines;
    internal::for_each_row(in, [&](std::size_t line, std::string_view row) {
        std::size_t label;
        if (!internal::parse_number(row, label)) {
            throw InputError(source, line, "not a nonnegative integer label: '" + std::string(row) + "'");
        }
        if (labels.size() == expected) {
            throw InputError(source, line, "more labels than the " + std::to_string(expected) + " points");
        }
        labels.push_back(label);
        lines.push_back(line);
    });
    if (labels.size() != expected) {
        throw InputError(source, 0, "expected " + std::to_string(expected) + " labels, got " + std::to_string(labels.size()));
    }

    std::vector<bool> seen(expected, false);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] >= expected) {
            throw InputError(source, lines[i], "label " + std::to_string(labels[i]) + " leaves an empty cluster (labels must be 0.." +
                                                   std::to_string(expected - 1) + " without gaps)");
        }
        seen[labels[i]] = true;
    }
    std::size_t k = 0;
    for (auto l : labels) {
        k = std::max(k, l + 1);
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (!seen[c]) {
            throw InputError(source, 0, "cluster label " + std::to_string(c) + " is empty");
        }
    }
    return Partition(std::move(labels));
}

inline Partition read_labels(const std::filesystem::path& path, std::size_t expected) {
    auto in = internal::open_input(path);
    return read_labels(in, expected, path.string());
}

/**
 * Read a linkage matrix for `n` leaves into a dendrogram.
 * Structural errors (ids out of range or reused, decreasing distances) are reported against the file line.
 */
inline Dendrogram read_linkage(std::istream& in, std::size_t n, const std::string& source = "linkage") {
    std::vector<Merge> merges;
    std::vector<std::size_t> lines;
    internal::for_each_row(in, [&](std::size_t line, std::string_view row) {
        auto fields = internal::split_fields(row, true);
        Merge m{};
        if (fields.size() != 3 || !internal::parse_number(fields[0], m.left) || !internal::parse_number(fields[1], m.right) ||
            !internal::parse_number(fields[2], m.distance)) {
            throw InputError(source, line, "expected 'left right distance', got '" + std::string(row) + "'");
        }
        merges.push_back(m);
        lines.push_back(line);
    });
    if (n == 0 || merges.size() != n - 1) {
        throw InputError(source, 0, "expected " + std::to_string(n ? n - 1 : 0) + " merge rows, got " + std::to_string(merges.size()));
    }

    // The dendrogram reports 0-based rows; map them back to file lines.
    try {
        return Dendrogram(n, std::move(merges));
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        std::size_t line = 0;
        const std::string_view prefix = "linkage row ";
        if (msg.rfind(prefix, 0) == 0) {
            std::size_t row = 0;
            auto start = msg.data() + prefix.size();
            auto res = std::from_chars(start, msg.data() + msg.size(), row);
            if (res.ec == std::errc() && row < lines.size()) {
                line = lines[row];
            }
        }
        throw InputError(source, line, msg);
    }
}

inline Dendrogram read_linkage(const std::filesystem::path& path, std::size_t n) {
    auto in = internal::open_input(path);
    return read_linkage(in, n, path.string());
}

/**
 * Shortest decimal representation that reads back to exactly `x`.
 */
inline std::string format_real(double x) {
    char buffer[64];
    auto res = std::to_chars(buffer, buffer + sizeof(buffer), x);
    return std::string(buffer, res.ptr);
}

inline void write_points(std::ostream& out, const Dataset& d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto p = d[i];
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) {
                out << ',';
            }
            out << format_real(p[j]);
        }
        out << '\n';
    }
}

inline void write_labels(std::ostream& out, const Partition& p) {
    for (auto l : p.labels()) {
        out << l << '\n';
    }
}

inline void write_linkage(std::ostream& out, const std::vector<Merge>& merges) {
    for (const auto& m : merges) {
        out << m.left << ' ' << m.right << ' ' << format_real(m.distance) << '\n';
    }
}

}

#endif
