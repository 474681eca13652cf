#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "sicvi.hpp"

#include "cli_runner.hpp"
#include "report.hpp"

using namespace sicvi;
using clirun::run;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir = clirun::scratch_dir("cli");
    }

    void TearDown() override {
        std::filesystem::remove_all(dir);
    }

    std::string path(const std::string& name) const {
        return (dir / name).string();
    }

    void synth(const std::string& id) {
        ASSERT_EQ(run("synth " + id + " --out " + dir.string()).code, 0);
    }

    cli::Report compute(const std::string& id, const std::string& indices) {
        auto res = run("compute --data " + path(id + "_points.csv") + " --labels " + path(id + "_labels.csv") + " " + indices);
        EXPECT_EQ(res.code, 0);
        return cli::parse_structured(res.out);
    }

    std::filesystem::path dir;
};

TEST_F(CliTest, ComputeExamples) {
    synth("X2S");
    auto r = compute("X2S", "--index si_centroid");
    ASSERT_EQ(r.results.size(), 1u);
    EXPECT_NEAR(r.results[0].value.value(), 2.70012, 1e-4);
    EXPECT_EQ(r.n, 3u);
    EXPECT_EQ(r.dim, 3u);
    EXPECT_EQ(r.k, 2u);

    synth("Y1S");
    r = compute("Y1S", "--index si_centroid --index ch");
    ASSERT_EQ(r.results.size(), 2u);
    EXPECT_EQ(r.results[0].index, "si_centroid");
    EXPECT_EQ(r.results[0].value.value(), 1);
    EXPECT_EQ(r.results[1].index, "ch");
    EXPECT_FALSE(r.results[1].value);

    synth("X1S");
    r = compute("X1S", "--index si_distance");
    EXPECT_NEAR(r.results[0].value.value(), 3, 1e-12);
}

TEST_F(CliTest, UndefinedRendersAsToken) {
    synth("Y1S");
    auto structured = run("compute --data " + path("Y1S_points.csv") + " --labels " + path("Y1S_labels.csv") + " --index ch");
    EXPECT_EQ(structured.code, 0);
    EXPECT_NE(structured.out.find("\"undefined\""), std::string::npos);

    auto table = run("compute --format table --data " + path("Y1S_points.csv") + " --labels " + path("Y1S_labels.csv") + " --index ch");
    EXPECT_EQ(table.code, 0);
    EXPECT_NE(table.out.find("undefined"), std::string::npos);
}

TEST_F(CliTest, SynthThenComputeIsBitExact) {
    for (auto id : all_synthetic_ids) {
        const std::string name(to_string(id));
        synth(name);
        auto ds = synthetic_dataset(id);
        auto r = compute(name, "");
        ASSERT_EQ(r.results.size(), partition_index_ids.size());
        for (std::size_t i = 0; i < partition_index_ids.size(); ++i) {
            EXPECT_EQ(r.results[i].value, evaluate(partition_index_ids[i], ds.data, ds.partition)) << name << " " << r.results[i].index;
        }
    }
}

TEST_F(CliTest, SynthFiles) {
    synth("X9L");
    EXPECT_EQ(clirun::read_file(path("X9L_points.csv")), "0,0,1\n0,1,0\n1,0,0\n0,0,2\n0,2,0\n2,0,0\n0,0,3\n0,3,0\n3,0,0\n");
    EXPECT_EQ(clirun::read_file(path("X9L_labels.csv")), "0\n1\n2\n3\n4\n5\n6\n7\n8\n");
    synth("Y1S");
    EXPECT_EQ(clirun::read_file(path("Y1S_points.csv")), "0,0,1\n0,0,1\n0,0,1\n");
    EXPECT_EQ(clirun::read_file(path("Y1S_labels.csv")), "0\n0\n0\n");
    synth("X2S");
    EXPECT_EQ(clirun::read_file(path("X2S_labels.csv")), "0\n1\n1\n");

    EXPECT_EQ(run("synth Z1S --out " + dir.string()).code, 1);
    EXPECT_EQ(run("synth X1S --out /proc/nope").code, 2);
}

TEST_F(CliTest, ComputeInputErrors) {
    clirun::write_file(path("p.csv"), "0,0\n1,x\n");
    clirun::write_file(path("l.txt"), "0\n1\n");
    auto res = run("compute --data " + path("p.csv") + " --labels " + path("l.txt"), true);
    EXPECT_EQ(res.code, 2);
    EXPECT_NE(res.out.find("p.csv:2"), std::string::npos);

    clirun::write_file(path("p.csv"), "0,0\n1,1\n2,2\n");
    res = run("compute --data " + path("p.csv") + " --labels " + path("l.txt"), true);
    EXPECT_EQ(res.code, 2);
    EXPECT_NE(res.out.find("expected 3 labels"), std::string::npos);

    clirun::write_file(path("l.txt"), "0\n2\n2\n");
    res = run("compute --data " + path("p.csv") + " --labels " + path("l.txt"), true);
    EXPECT_EQ(res.code, 2);
    EXPECT_NE(res.out.find("cluster label 1 is empty"), std::string::npos);

    clirun::write_file(path("l.txt"), "0\n1\n1\n");
    EXPECT_EQ(run("compute --data " + path("p.csv") + " --labels " + path("l.txt") + " --index gamma").code, 1);
    EXPECT_EQ(run("compute --data " + path("p.csv") + " --labels " + path("l.txt") + " --index si_hierarchical").code, 1);
    EXPECT_EQ(run("compute --data " + path("p.csv")).code, 1);
    EXPECT_EQ(run("").code, 1);
}

TEST_F(CliTest, Properties) {
    auto res = run("properties --index si_centroid");
    ASSERT_EQ(res.code, 0);
    auto r = cli::parse_structured(res.out);
    ASSERT_TRUE(r.flags);
    ASSERT_EQ(r.flags->size(), 1u);
    EXPECT_EQ((*r.flags)[0].flags, "S B C");

    r = cli::parse_structured(run("properties --index ch --index db").out);
    ASSERT_EQ(r.flags->size(), 2u);
    EXPECT_EQ((*r.flags)[0].index, "ch");
    EXPECT_EQ((*r.flags)[0].flags, "S");
    EXPECT_EQ((*r.flags)[1].flags, "S");

    r = cli::parse_structured(run("properties --index sf").out);
    EXPECT_EQ((*r.flags)[0].flags.substr(0, 2), "s");

    r = cli::parse_structured(run("properties --variant long --index si_distance").out);
    EXPECT_EQ((*r.flags)[0].variant, "long");
    EXPECT_EQ((*r.flags)[0].flags, "S B C");

    EXPECT_EQ(run("properties --index gamma").code, 1);
}

TEST_F(CliTest, HierarchicalAuto) {
    clirun::write_file(path("line.csv"), "0\n1\n3\n");
    auto res = run("hierarchical --data " + path("line.csv") + " --linkage auto");
    ASSERT_EQ(res.code, 0);
    auto r = cli::parse_structured(res.out);
    ASSERT_TRUE(r.curve);
    ASSERT_EQ(r.curve->size(), 3u);
    EXPECT_EQ((*r.curve)[0].distance, 0);
    EXPECT_NEAR((*r.curve)[0].si.value(), 3, 1e-12);
    EXPECT_EQ((*r.curve)[1].distance, 1);
    EXPECT_NEAR((*r.curve)[1].si.value(), 2.33756, 1e-4);
    EXPECT_EQ((*r.curve)[2].k, 1u);
    EXPECT_NEAR((*r.curve)[2].si.value(), 3, 1e-12);
    EXPECT_NEAR(r.si_hierarchical->value(), 1.33439, 1e-4);
    EXPECT_EQ(r.curve_minimum_level, 2u);

    clirun::write_file(path("same.csv"), "0,0,1\n0,0,1\n0,0,1\n");
    res = run("hierarchical --data " + path("same.csv"));
    ASSERT_EQ(res.code, 0);
    r = cli::parse_structured(res.out);
    EXPECT_FALSE(*r.si_hierarchical);
    EXPECT_NE(res.out.find("\"si_hierarchical\": \"undefined\""), std::string::npos);

    clirun::write_file(path("two.csv"), "0,0,1\n0,1,0\n");
    r = cli::parse_structured(run("hierarchical --data " + path("two.csv")).out);
    EXPECT_NEAR(r.curve->front().si.value(), 2, 1e-12);
    EXPECT_NEAR(r.curve->back().si.value(), 2, 1e-12);
}

TEST_F(CliTest, HierarchicalLinkageFile) {
    clirun::write_file(path("line.csv"), "0\n1\n3\n");
    clirun::write_file(path("ok.txt"), "0 1 1\n2 3 2\n");
    auto r = cli::parse_structured(run("hierarchical --data " + path("line.csv") + " --linkage " + path("ok.txt")).out);
    EXPECT_NEAR(r.si_hierarchical->value(), 1.33439, 1e-4);

    clirun::write_file(path("dec.txt"), "0 1 2\n2 3 1\n");
    auto res = run("hierarchical --data " + path("line.csv") + " --linkage " + path("dec.txt"), true);
    EXPECT_EQ(res.code, 2);
    EXPECT_NE(res.out.find("dec.txt:2"), std::string::npos);

    clirun::write_file(path("range.txt"), "0 1 1\n2 9 2\n");
    res = run("hierarchical --data " + path("line.csv") + " --linkage " + path("range.txt"), true);
    EXPECT_EQ(res.code, 2);
    EXPECT_NE(res.out.find("range.txt:2"), std::string::npos);

    clirun::write_file(path("junk.txt"), "0 1\n2 3 2\n");
    res = run("hierarchical --data " + path("line.csv") + " --linkage " + path("junk.txt"), true);
    EXPECT_EQ(res.code, 2);
    EXPECT_NE(res.out.find("junk.txt:1"), std::string::npos);
}

TEST_F(CliTest, OutFlagWritesReport) {
    clirun::write_file(path("line.csv"), "0\n1\n3\n");
    auto res = run("hierarchical --data " + path("line.csv") + " --out " + path("report.json"));
    EXPECT_EQ(res.code, 0);
    EXPECT_TRUE(res.out.empty());
    auto r = cli::parse_structured(clirun::read_file(path("report.json")));
    EXPECT_EQ(r.command, "hierarchical");
}
