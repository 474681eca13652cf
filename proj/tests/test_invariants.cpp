#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "sicvi/Dendrogram.hpp"
#include "sicvi/geometry.hpp"
#include "sicvi/indices.hpp"
#include "sicvi/properties.hpp"
#include "sicvi/simplicity.hpp"

#include "generators.hpp"
#include "oracle.hpp"

using namespace sicvi;

namespace {

::testing::AssertionResult close(const IndexResult& a, const IndexResult& b) {
    if (results_equal(a, b)) {
        return ::testing::AssertionSuccess();
    }
    return ::testing::AssertionFailure() << to_string(a) << " vs " << to_string(b);
}

Dataset affine(const Dataset& d, double a, double b) {
    return shift_dataset(scale_dataset(d, a), b);
}

}

TEST(GeometryProperties, AbsoluteHomogeneityAndTranslation) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = gen::uniform(rng, 2 + trial % 9, 1, 1 + trial % 4).data;
        const double r = radius_centroid(x.all());
        const double m = mean_pairwise_distance(x.all());
        for (double a : { -2.0, 0.5, 3.0 }) {
            for (double b : { -5.0, 7.0 }) {
                auto y = affine(x, a, b);
                EXPECT_NEAR(radius_centroid(y.all()), std::abs(a) * r, 1e-9 * std::max(1.0, std::abs(a) * r));
                EXPECT_NEAR(mean_pairwise_distance(y.all()), std::abs(a) * m, 1e-9 * std::max(1.0, std::abs(a) * m));
            }
        }
    }
}

TEST(GeometryProperties, BoundedByDiameterAndZeroOnlyWhenCoincident) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = gen::uniform(rng, 1 + trial % 12, 1).data.all();
        const double diam = diameter(x);
        EXPECT_LE(radius_centroid(x), diam * (1 + 1e-12));
        EXPECT_LE(mean_pairwise_distance(x), diam * (1 + 1e-12));
        EXPECT_EQ(radius_centroid(x) == 0, x.size() == 1);
        EXPECT_EQ(mean_pairwise_distance(x) == 0, x.size() == 1);
    }
    std::vector<Point> same(5, Point{ 3.3, -1 });
    EXPECT_EQ(radius_centroid(same), 0);
    EXPECT_EQ(mean_pairwise_distance(same), 0);
}

TEST(DendrogramProperties, SingleLinkageInvariants) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = gen::uniform(rng, 2 + trial, 1).data;
        auto dg = single_linkage(x);
        const auto& levels = dg.levels();
        ASSERT_EQ(levels.size(), x.size());
        EXPECT_EQ(levels.front().partition.k(), x.size());
        EXPECT_EQ(levels.back().partition.k(), 1u);
        for (std::size_t i = 1; i < levels.size(); ++i) {
            EXPECT_GE(levels[i].distance, levels[i - 1].distance);
            EXPECT_TRUE(levels[i - 1].partition.refines(levels[i].partition));
        }
    }
}

TEST(SimplicityProperties, MatchesLiteralOracle) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = gen::uniform(rng, 3 + trial % 15, 1 + trial % 5, 1 + trial % 3);
        auto pts = x.data.points();
        EXPECT_NEAR(si_centroid(x.data, x.partition).value(), oracle::simplicity(pts, x.partition.labels(), oracle::radius), 1e-9);
        EXPECT_NEAR(si_distance(x.data, x.partition).value(), oracle::simplicity(pts, x.partition.labels(), oracle::mean_pairwise), 1e-9);
    }
}

TEST(SimplicityProperties, ScaleAndShiftInvariance) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = gen::uniform(rng, 4 + trial % 10, 1 + trial % 4);
        const auto si = si_centroid(x.data, x.partition);
        const auto sd = si_distance(x.data, x.partition);
        for (auto a : scale_factors) {
            EXPECT_TRUE(close(si, si_centroid(scale_dataset(x.data, a), x.partition)));
            EXPECT_TRUE(close(sd, si_distance(scale_dataset(x.data, a), x.partition)));
        }
        for (auto b : shift_offsets) {
            EXPECT_TRUE(close(si, si_centroid(shift_dataset(x.data, b), x.partition)));
            EXPECT_TRUE(close(sd, si_distance(shift_dataset(x.data, b), x.partition)));
        }
    }
}

TEST(SimplicityProperties, BoundsOnClusteredData) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = gen::blobs(rng);
        const auto sizes = x.partition.cluster_sizes();
        const double upper = static_cast<double>(x.partition.k() * *std::max_element(sizes.begin(), sizes.end()));
        for (auto v : { si_centroid(x.data, x.partition), si_distance(x.data, x.partition) }) {
            EXPECT_GE(v.value(), 1);
            EXPECT_LE(v.value(), upper * (1 + 1e-12));
        }
    }
}

// For any labelling, k <= SI <= k * max(c)^max(r_n / R); this is the bound that holds without cluster structure.
TEST(SimplicityProperties, GeneralBoundsOnArbitraryLabels) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto x = gen::uniform(rng, 2 + trial % 20, 1 + trial % 5);
        const auto& p = x.partition;
        const double k = static_cast<double>(p.k());
        const double whole = radius_centroid(x.data.all());
        double max_ratio = 0, max_size = 0;
        for (std::size_t c = 0; c < p.k(); ++c) {
            max_ratio = std::max(max_ratio, radius_centroid(x.data.select(p.members(c))) / whole);
            max_size = std::max(max_size, static_cast<double>(p.members(c).size()));
        }
        const double v = si_centroid(x.data, p).value();
        EXPECT_GE(v, k * (1 - 1e-12));
        EXPECT_LE(v, k * std::pow(max_size, max_ratio) * (1 + 1e-9));
    }
}

// A cluster that is wider than the dataset as a whole pushes SI above k * max(c).
TEST(SimplicityProperties, WideClusterExceedsNaiveBound) {
    std::vector<Point> pts{ { -10 }, { 10 } };
    std::vector<std::size_t> labels{ 0, 0 };
    for (int i = 0; i < 100; ++i) {
        pts.push_back({ 0 });
        labels.push_back(1);
    }
    const auto v = si_centroid(Dataset(pts), Partition(labels)).value();
    EXPECT_GT(v, 2 * 100);
    EXPECT_NEAR(v, oracle::simplicity(pts, labels, oracle::radius), 1e-6 * v);
}

TEST(SimplicityProperties, ExtremePartitionsScoreN) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = gen::uniform(rng, 2 + trial, 1).data;
        const double n = static_cast<double>(x.size());
        EXPECT_NEAR(si_centroid(x, Partition::singletons(x.size())).value(), n, 1e-9 * n);
        EXPECT_NEAR(si_centroid(x, Partition::single_cluster(x.size())).value(), n, 1e-9 * n);
        EXPECT_NEAR(si_distance(x, Partition::singletons(x.size())).value(), n, 1e-9 * n);
        EXPECT_NEAR(si_distance(x, Partition::single_cluster(x.size())).value(), n, 1e-9 * n);
    }
}

TEST(SimplicityProperties, CoincidentPointsOptimality) {
    std::mt19937_64 rng(9);
    for (std::size_t n = 2; n <= 12; ++n) {
        Dataset same(std::vector<Point>(n, Point{ 1.5, -2, 0.25 }));
        EXPECT_EQ(si_centroid(same, Partition::single_cluster(n)).value(), 1);
        for (int trial = 0; trial < 5; ++trial) {
            const std::size_t k = 2 + rng() % (n - 1);
            auto split = gen::uniform(rng, n, k).partition;
            EXPECT_EQ(si_centroid(same, split).value(), static_cast<double>(k));
            EXPECT_EQ(si_distance(same, split).value(), static_cast<double>(k));
        }
    }
}

TEST(AllIndices, PermutationInvariance) {
    std::mt19937_64 rng(10);
    auto base = gen::blobs(rng);
    std::vector<IndexResult> reference;
    for (auto id : partition_index_ids) {
        reference.push_back(evaluate(id, base.data, base.partition));
    }
    for (int trial = 0; trial < 100; ++trial) {
        auto shuffled = gen::shuffle(rng, base);
        for (std::size_t i = 0; i < partition_index_ids.size(); ++i) {
            EXPECT_TRUE(close(reference[i], evaluate(partition_index_ids[i], shuffled.data, shuffled.partition))) << to_string(partition_index_ids[i]);
        }
    }
}

TEST(AllIndices, RatioIndicesAreAffineInvariantOnRandomData) {
    std::mt19937_64 rng(11);
    const IndexId ratio_ids[] = { IndexId::CH, IndexId::SILHOUETTE, IndexId::DUNN, IndexId::DB, IndexId::CINDEX };
    for (int trial = 0; trial < 20; ++trial) {
        auto x = gen::blobs(rng);
        for (auto id : ratio_ids) {
            const auto v = evaluate(id, x.data, x.partition);
            for (auto a : scale_factors) {
                EXPECT_TRUE(close(v, evaluate(id, scale_dataset(x.data, a), x.partition))) << to_string(id);
            }
            for (auto b : shift_offsets) {
                EXPECT_TRUE(close(v, evaluate(id, shift_dataset(x.data, b), x.partition))) << to_string(id);
            }
        }
    }
}

TEST(CurveProperties, EndpointsEqualN) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = gen::blobs(rng).data;
        auto curve = si_curve(x, single_linkage(x));
        const double n = static_cast<double>(x.size());
        EXPECT_NEAR(curve[0].value.value(), n, 1e-9 * n);
        EXPECT_NEAR(curve[curve.size() - 1].value.value(), n, 1e-9 * n);

        std::vector<std::pair<double, double> > samples;
        for (const auto& s : curve.samples()) {
            samples.emplace_back(s.distance, s.value.value());
        }
        EXPECT_NEAR(si_hierarchical(curve).value(), oracle::hierarchical(samples), 1e-9);
    }
}
