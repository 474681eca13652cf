#ifndef SICVI_TEST_ORACLE_HPP
#define SICVI_TEST_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

// Literal reference evaluations used to check the library. Nothing here calls into sicvi.

namespace oracle {

typedef std::vector<std::vector<double> > Points;

inline double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(s);
}

inline double radius(const Points& p) {
    std::vector<double> c(p[0].size(), 0.0);
    for (const auto& x : p) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            c[i] += x[i] / static_cast<double>(p.size());
        }
    }
    double s = 0;
    for (const auto& x : p) {
        s += dist(x, c);
    }
    return s / static_cast<double>(p.size());
}

inline double mean_pairwise(const Points& p) {
    double s = 0;
    int pairs = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            s += dist(p[i], p[j]);
            ++pairs;
        }
    }
    return pairs ? s / pairs : 0.0;
}

inline std::map<std::size_t, Points> groups(const Points& p, const std::vector<std::size_t>& labels) {
    std::map<std::size_t, Points> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[labels[i]].push_back(p[i]);
    }
    return out;
}

/**
 * k * (prod c_n^(s_n / S))^(1/k), evaluated as a direct product, with the S = 0 guard.
 * `spread` is either `radius` or `mean_pairwise`.
 */
template<class Spread_>
double simplicity(const Points& p, const std::vector<std::size_t>& labels, Spread_ spread) {
    auto g = groups(p, labels);
    const double whole = spread(p);
    const double k = static_cast<double>(g.size());
    double product = 1;
    for (const auto& [label, members] : g) {
        const double exponent = whole == 0 ? 0 : spread(members) / whole;
        product *= std::pow(static_cast<double>(members.size()), exponent);
    }
    return k * std::pow(product, 1 / k);
}

/**
 * Trapezoid sum over (D_k, SI_k) divided by (N - 1)(D_N - D_1), written out term by term.
 */
inline double hierarchical(const std::vector<std::pair<double, double> >& curve) {
    double numerator = 0;
    for (std::size_t k = 1; k < curve.size(); ++k) {
        numerator += (curve[k].second + curve[k - 1].second) * (curve[k].first - curve[k - 1].first) / 2;
    }
    const double n = static_cast<double>(curve.size());
    return numerator / ((n - 1) * (curve.back().first - curve.front().first));
}

}

#endif
