#ifndef SICVI_PROPERTIES_HPP
#define SICVI_PROPERTIES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "IndexResult.hpp"
#include "indices.hpp"
#include "synthetic.hpp"

/**
 * @file properties.hpp
 * @brief Mechanical audit of transform invariance, optimal clustering and unbiased clustering.
 *
 * Each index is probed on the fixed synthetic datasets:
 *
 * - Invariance: the two-cluster dataset `X2` is scaled by each of `scale_factors` and shifted by each of `shift_offsets`,
 *   and the index must not change (within `relative_tolerance`).
 * - Optimality: coincident points in one cluster (`Y1`) must attain the declared best value,
 *   and splitting them (`Y2`) must score strictly worse.
 * - Baseline: both extreme partitions (`X1`, a single cluster; `X3`/`X9`, all singletons) must attain the declared baseline.
 *
 * Flags follow the usual notation: `S`/`s` for both/one invariance, `B`/`b` for best value with/without the split check,
 * and `C` for the baseline.
 */

namespace sicvi {

inline constexpr std::array<double, 3> scale_factors{ 0.5, 2, 10 };
inline constexpr std::array<double, 3> shift_offsets{ -5, 1, 100 };
inline constexpr double relative_tolerance = 1e-9;

enum class Variant { SHORT, LONG };

inline std::string_view to_string(Variant v) {
    return v == Variant::SHORT ? "short" : "long";
}

/**
 * @return Whether `a` and `b` agree within `relative_tolerance * max(1, |a|)`. Undefined equals only undefined.
 */
inline bool results_equal(const IndexResult& a, const IndexResult& b) {
    if (!a || !b) {
        return !a && !b;
    }
    return std::abs(a.value() - b.value()) <= relative_tolerance * std::max(1.0, std::abs(a.value()));
}

/**
 * @brief Value obtained on one probe dataset.
 */
struct Probe {
    std::string name;
    IndexResult value;
};

struct InvarianceCheck {
    bool scale_ok;
    bool shift_ok;
    std::vector<Probe> probes;
};

struct OptimalityCheck {
    bool is_best;
    bool split_worse;
    std::vector<Probe> probes;
};

struct BaselineCheck {
    bool at_single;
    bool at_singletons;
    std::vector<Probe> probes;
};

/**
 * @cond
 */
namespace internal {

inline std::string format_constant(double x) {
    auto s = std::to_string(x);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') {
        s.pop_back();
    }
    return s;
}

inline Probe probe(IndexId id, SyntheticId dataset) {
    auto ds = synthetic_dataset(dataset);
    return Probe{ std::string(to_string(dataset)), evaluate(id, ds.data, ds.partition) };
}

}
/**
 * @endcond
 */

/**
 * Evaluations 1 and 2: compare `X2` against its scaled and shifted copies.
 */
inline InvarianceCheck check_invariance(IndexId id, Variant variant) {
    const auto which = variant == Variant::SHORT ? SyntheticId::X2S : SyntheticId::X2L;
    const auto ds = synthetic_dataset(which);
    const std::string base_name(to_string(which));

    InvarianceCheck out{ true, true, {} };
    const auto reference = evaluate(id, ds.data, ds.partition);
    out.probes.push_back(Probe{ base_name, reference });

    for (auto a : scale_factors) {
        auto v = evaluate(id, scale_dataset(ds.data, a), ds.partition);
        out.scale_ok = out.scale_ok && results_equal(reference, v);
        out.probes.push_back(Probe{ internal::format_constant(a) + "*" + base_name, v });
    }
    for (auto b : shift_offsets) {
        auto v = evaluate(id, shift_dataset(ds.data, b), ds.partition);
        out.shift_ok = out.shift_ok && results_equal(reference, v);
        out.probes.push_back(Probe{ base_name + (b < 0 ? "" : "+") + internal::format_constant(b), v });
    }
    return out;
}

/**
 * Evaluations 3 and 4: `Y1` attains the declared best value, and `Y2` is strictly worse than `Y1`.
 * An undefined value never passes either check.
 */
inline OptimalityCheck check_optimality(IndexId id, Variant variant) {
    const auto desc = descriptor(id);
    auto y1 = internal::probe(id, variant == Variant::SHORT ? SyntheticId::Y1S : SyntheticId::Y1L);
    auto y2 = internal::probe(id, variant == Variant::SHORT ? SyntheticId::Y2S : SyntheticId::Y2L);

    OptimalityCheck out{ false, false, {} };
    if (desc.best_value && y1.value) {
        out.is_best = std::abs(y1.value.value() - *desc.best_value) <= relative_tolerance * std::max(1.0, std::abs(*desc.best_value));
    }
    if (y1.value && y2.value) {
        out.split_worse = is_better(desc.direction, y1.value.value(), y2.value.value());
    }
    out.probes.push_back(std::move(y1));
    out.probes.push_back(std::move(y2));
    return out;
}

/**
 * Evaluation 5: both extreme partitions attain the declared baseline for their number of points.
 */
inline BaselineCheck check_baseline(IndexId id, Variant variant) {
    const auto desc = descriptor(id);
    const auto single = variant == Variant::SHORT ? SyntheticId::X1S : SyntheticId::X1L;
    const auto split = variant == Variant::SHORT ? SyntheticId::X3S : SyntheticId::X9L;

    auto attains = [&](SyntheticId which, Probe& record) -> bool {
        auto ds = synthetic_dataset(which);
        record = Probe{ std::string(to_string(which)), evaluate(id, ds.data, ds.partition) };
        if (!desc.has_baseline() || !record.value) {
            return false;
        }
        const double expected = desc.baseline(ds.data.size());
        return std::abs(record.value.value() - expected) <= relative_tolerance * std::max(1.0, std::abs(expected));
    };

    BaselineCheck out{ false, false, std::vector<Probe>(2) };
    out.at_single = attains(single, out.probes[0]);
    out.at_singletons = attains(split, out.probes[1]);
    return out;
}

enum class Invariance { FULL, PARTIAL, NONE };
enum class Optimality { BEST, BEST_ONLY, NONE };

/**
 * @brief Per-evaluation outcomes underlying a flag row.
 */
struct PropertyDetail {
    bool scale_ok = false;
    bool shift_ok = false;
    bool is_best_at_y1 = false;
    bool y2_worse_than_y1 = false;
    bool baseline_at_x1 = false;
    bool baseline_at_xmax = false;

    /**
     * Names of the probes on which the index was undefined.
     */
    std::vector<std::string> undefined_probes;

    friend bool operator==(const PropertyDetail&, const PropertyDetail&) = default;
};

/**
 * @brief Audit outcome for one index.
 */
struct PropertyFlags {
    IndexId id;
    Variant variant;
    Invariance invariance;
    Optimality optimality;
    bool baseline;
    PropertyDetail detail;

    friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

inline Invariance compose_invariance(bool scale_ok, bool shift_ok) {
    if (scale_ok && shift_ok) {
        return Invariance::FULL;
    }
    return (scale_ok || shift_ok) ? Invariance::PARTIAL : Invariance::NONE;
}

inline Optimality compose_optimality(bool is_best, bool split_worse) {
    if (!is_best) {
        return Optimality::NONE;
    }
    return split_worse ? Optimality::BEST : Optimality::BEST_ONLY;
}

inline PropertyFlags compose_flags(IndexId id, Variant variant, PropertyDetail detail) {
    PropertyFlags out{ id, variant, Invariance::NONE, Optimality::NONE, false, {} };
    out.invariance = compose_invariance(detail.scale_ok, detail.shift_ok);
    out.optimality = compose_optimality(detail.is_best_at_y1, detail.y2_worse_than_y1);
    out.baseline = detail.baseline_at_x1 && detail.baseline_at_xmax;
    out.detail = std::move(detail);
    return out;
}

/**
 * Run all five evaluations for `id` and compose them into a flag row.
 * Throws `std::invalid_argument` for indices that do not score a partition.
 */
inline PropertyFlags audit(IndexId id, Variant variant = Variant::SHORT) {
    PropertyDetail detail;

    auto record = [&](const std::vector<Probe>& probes) {
        for (const auto& p : probes) {
            if (!p.value && std::find(detail.undefined_probes.begin(), detail.undefined_probes.end(), p.name) == detail.undefined_probes.end()) {
                detail.undefined_probes.push_back(p.name);
            }
        }
    };

    auto inv = check_invariance(id, variant);
    detail.scale_ok = inv.scale_ok;
    detail.shift_ok = inv.shift_ok;
    record(inv.probes);

    auto opt = check_optimality(id, variant);
    detail.is_best_at_y1 = opt.is_best;
    detail.y2_worse_than_y1 = opt.split_worse;
    record(opt.probes);

    auto base = check_baseline(id, variant);
    detail.baseline_at_x1 = base.at_single;
    detail.baseline_at_xmax = base.at_singletons;
    record(base.probes);

    return compose_flags(id, variant, std::move(detail));
}

/**
 * @return Space-separated flags, e.g. `"S B C"`, or `"-"` if none hold.
 */
inline std::string flag_string(const PropertyFlags& f) {
    std::string out;
    auto add = [&](std::string_view s) {
        if (!out.empty()) {
            out += ' ';
        }
        out += s;
    };
    if (f.invariance == Invariance::FULL) {
        add("S");
    } else if (f.invariance == Invariance::PARTIAL) {
        add("s");
    }
    if (f.optimality == Optimality::BEST) {
        add("B");
    } else if (f.optimality == Optimality::BEST_ONLY) {
        add("b");
    }
    if (f.baseline) {
        add("C");
    }
    return out.empty() ? "-" : out;
}

}

#endif
