#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "commands.hpp"
#include "report.hpp"

namespace {

enum ExitCode { EXIT_OK = 0, EXIT_USAGE = 1, EXIT_INPUT = 2 };

int emit(const sicvi::cli::Report& report, const std::string& format, const std::string& out_path) {
    const auto text = format == "table" ? sicvi::cli::to_table(report) : sicvi::cli::to_structured(report);
    if (out_path.empty()) {
        std::cout << text;
        return EXIT_OK;
    }
    std::ofstream out(out_path);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write report to " << out_path << "\n";
        return EXIT_INPUT;
    }
    return EXIT_OK;
}

}

int main(int argc, char** argv) {
    CLI::App app{ "Cluster validity indices: simplicity index, classic references and property audits" };
    app.require_subcommand(1);

    std::string format = "structured";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({ "table", "structured" }));
    };

    std::string data_path, labels_path, linkage = "auto", out_path, variant = "short";
    std::vector<std::string> indices;

    auto* compute = app.add_subcommand("compute", "Evaluate indices on a labelled dataset");
    compute->add_option("--data", data_path, "Points CSV")->required();
    compute->add_option("--labels", labels_path, "Labels file, one integer per point")->required();
    compute->add_option("--index", indices, "Index id (repeatable); defaults to all partition indices");
    compute->add_option("--out", out_path, "Write the report here instead of stdout");
    add_format(compute);

    auto* properties = app.add_subcommand("properties", "Audit invariance, optimality and baseline flags");
    properties->add_option("--index", indices, "Index id (repeatable); defaults to all partition indices");
    properties->add_option("--variant", variant, "Probe datasets")->check(CLI::IsMember({ "short", "long" }));
    properties->add_option("--out", out_path, "Write the report here instead of stdout");
    add_format(properties);

    auto* hierarchical = app.add_subcommand("hierarchical", "Score a merge hierarchy with the simplicity curve");
    hierarchical->add_option("--data", data_path, "Points CSV")->required();
    hierarchical->add_option("--linkage", linkage, "Linkage file ('left right distance' rows) or 'auto' for single linkage");
    hierarchical->add_option("--out", out_path, "Write the report here instead of stdout");
    add_format(hierarchical);

    std::string synth_id;
    auto* synth = app.add_subcommand("synth", "Write a synthetic probe dataset as points and labels files");
    synth->add_option("id", synth_id, "Dataset id: X1S X2S X3S Y1S Y2S X1L X2L X9L Y1L Y2L")->required();
    synth->add_option("--out", out_path, "Output directory")->required();
    add_format(synth);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (*compute) {
            return emit(sicvi::cli::run_compute(data_path, labels_path, indices), format, out_path);
        }
        if (*properties) {
            const auto v = variant == "long" ? sicvi::Variant::LONG : sicvi::Variant::SHORT;
            return emit(sicvi::cli::run_properties(indices, v), format, out_path);
        }
        if (*hierarchical) {
            return emit(sicvi::cli::run_hierarchical(data_path, linkage), format, out_path);
        }
        if (*synth) {
            return emit(sicvi::cli::run_synth(synth_id, out_path), format, "");
        }
    } catch (const sicvi::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INPUT;
    }
    return EXIT_USAGE;
}
