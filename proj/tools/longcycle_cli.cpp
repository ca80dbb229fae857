#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "longcycle.h"

namespace {

void print_trace(const char* line, void*) {
    std::fprintf(stderr, "%s\n", line);
}

int report_error(lc_status status) {
    std::cerr << "error: " << lc_last_error() << '\n';
    return static_cast<int>(status) != 0 ? 1 : 0;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream text;
    text << in.rdbuf();
    out = text.str();
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte-Carlo percolation experiments: long cycles in random subgraphs"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key = value file with the same keys as the flags");

    std::string host = "complete";
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    std::uint32_t dim = 0;
    std::vector<std::uint32_t> offsets;
    std::string graph_file;
    bool fix_host = false;
    std::optional<double> p;
    std::optional<double> c;
    double eps = 0.05;
    std::uint64_t trials = 1;
    std::uint64_t seed = 1;
    std::uint32_t workers = 1;
    double height_C = 1.0;
    std::string out_path;
    bool trace = false;

    app.add_option("--host", host, "host family: complete|hypercube|regular|circulant|file")
        ->capture_default_str();
    app.add_option("--n", n, "vertex count (complete, regular, circulant)");
    app.add_option("--d", d, "degree (regular)");
    app.add_option("--dim", dim, "dimension (hypercube)");
    app.add_option("--offsets", offsets, "circulant offsets");
    app.add_option("--graph-file", graph_file, "edge-list file (host family 'file')");
    app.add_flag("--fix-host", fix_host, "sample one random host and reuse it for every trial");
    app.add_option("--p", p, "edge probability");
    app.add_option("--c", c, "target p*k; sets p = min(1, c/k)");
    app.add_option("--eps", eps, "epsilon parameter")->capture_default_str();
    app.add_option("--trials", trials, "number of trials")->capture_default_str();
    app.add_option("--seed", seed, "base seed")->capture_default_str();
    app.add_option("--workers", workers, "worker threads")->capture_default_str();
    app.add_option("--height-C", height_C, "height diagnostic cutoff, multiple of k")
        ->capture_default_str();
    app.add_option("--out", out_path, "CSV output path (default stdout)");
    app.add_flag("--trace", trace, "per-trial progress on stderr (runs sequentially)");

    CLI::App* cmd_run = app.add_subcommand("run", "run trials and emit CSV");
    cmd_run->fallthrough();
    CLI::App* cmd_summarize = app.add_subcommand("summarize", "aggregate a CSV by (n, k, p)");
    cmd_summarize->fallthrough();
    std::string csv_path;
    cmd_summarize->add_option("csv", csv_path, "CSV file produced by run")->required();
    CLI::App* cmd_validate =
        app.add_subcommand("validate", "check cycles against the exact oracle (n <= 16)");
    cmd_validate->fallthrough();

    CLI11_PARSE(app, argc, argv);

    lc_run_config config;
    lc_run_config_init(&config);
    config.family = host.c_str();
    config.n = n;
    config.d = d;
    config.dim = dim;
    config.offsets = offsets.empty() ? nullptr : offsets.data();
    config.offset_count = offsets.size();
    config.graph_file = graph_file.empty() ? nullptr : graph_file.c_str();
    config.fix_host = fix_host ? 1 : 0;
    if (p) {
        config.have_p = 1;
        config.p = *p;
    }
    if (c) {
        config.have_c = 1;
        config.c = *c;
    }
    config.eps = eps;
    config.trials = trials;
    config.seed = seed;
    config.height_c = height_C;
    config.workers = workers;

    if (cmd_run->parsed()) {
        char* csv = nullptr;
        const lc_status status =
            lc_run_trials(&config, trace ? print_trace : nullptr, nullptr, &csv);
        if (status != LC_OK)
            return report_error(status);
        if (out_path.empty()) {
            std::cout << csv;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            out << csv;
            if (!out) {
                std::cerr << "error: cannot write " << out_path << '\n';
                lc_string_free(csv);
                return 1;
            }
        }
        lc_string_free(csv);
        return 0;
    }

    if (cmd_summarize->parsed()) {
        std::string text;
        if (!read_file(csv_path, text)) {
            std::cerr << "error: cannot read " << csv_path << '\n';
            return 1;
        }
        char* summary = nullptr;
        const lc_status status = lc_summarize_csv(text.c_str(), &summary);
        if (status != LC_OK)
            return report_error(status);
        std::cout << summary;
        lc_string_free(summary);
        return 0;
    }

    char* report = nullptr;
    int all_ok = 0;
    const lc_status status = lc_validate(&config, &report, &all_ok);
    if (status != LC_OK)
        return report_error(status);
    std::cout << report;
    lc_string_free(report);
    return all_ok ? 0 : 1;
}
