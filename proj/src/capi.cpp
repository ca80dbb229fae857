#include "longcycle.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "longcycle/cycle_builder.hpp"
#include "longcycle/errors.hpp"
#include "longcycle/harness.hpp"
#include "longcycle/host_graph.hpp"

struct lc_graph {
    longcycle::host_graph graph;
};

namespace {

thread_local std::string tl_last_error = "no error";

lc_status map_code(longcycle::errc code) {
    using longcycle::errc;
    switch (code) {
    case errc::parse_error: return LC_ERR_PARSE;
    case errc::config_error: return LC_ERR_CONFIG;
    case errc::graph_too_large: return LC_ERR_TOO_LARGE;
    case errc::rejection_budget_exhausted: return LC_ERR_REJECTION_BUDGET;
    case errc::not_single_cycle:
    case errc::internal_error: return LC_ERR_INTERNAL;
    default: return LC_ERR_BAD_ARGUMENT;
    }
}

template <typename Fn>
lc_status guarded(Fn&& fn) {
    try {
        fn();
        return LC_OK;
    } catch (const longcycle::error& e) {
        tl_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        tl_last_error = e.what();
        return LC_ERR_INTERNAL;
    } catch (...) {
        tl_last_error = "unknown error";
        return LC_ERR_INTERNAL;
    }
}

lc_status arg_error(const char* message) {
    tl_last_error = message;
    return LC_ERR_BAD_ARGUMENT;
}

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

longcycle::trial_config to_config(const lc_run_config* config) {
    using namespace longcycle;
    if (!config)
        fail(errc::config_error, "config: null pointer");
    trial_config out;
    const std::string family = config->family ? config->family : "";
    if (family == "complete")
        out.host.family = host_family::complete;
    else if (family == "hypercube")
        out.host.family = host_family::hypercube;
    else if (family == "regular")
        out.host.family = host_family::regular;
    else if (family == "circulant")
        out.host.family = host_family::circulant;
    else if (family == "file")
        out.host.family = host_family::file;
    else
        fail(errc::config_error, "family: unknown host family '" + family + "'");
    out.host.n = config->n;
    out.host.d = config->d;
    out.host.dim = config->dim;
    if (config->offset_count > 0) {
        if (!config->offsets)
            fail(errc::config_error, "offsets: null pointer with nonzero count");
        out.host.offsets.assign(config->offsets, config->offsets + config->offset_count);
    }
    if (config->graph_file)
        out.host.path = config->graph_file;
    out.host.fix_host = config->fix_host != 0;
    if (config->have_p)
        out.p = config->p;
    if (config->have_c)
        out.c = config->c;
    out.eps = config->eps;
    out.trials = config->trials;
    out.base_seed = config->seed;
    out.height_C = config->height_c;
    out.workers = config->workers;
    return out;
}

std::string trace_line(const longcycle::trial_record& rec) {
    std::string line = "trial=" + std::to_string(rec.trial);
    line += " branch=";
    line += to_string(rec.branch);
    line += " cycle_length=" + std::to_string(rec.cycle_length);
    line += " success=";
    line += rec.success ? '1' : '0';
    line += " failure=" + rec.failure_reason;
    return line;
}

} // namespace

extern "C" {

const char* lc_last_error(void) {
    return tl_last_error.c_str();
}

lc_status lc_graph_complete(uint32_t n, lc_graph** out) {
    if (!out)
        return arg_error("null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new lc_graph{longcycle::host_graph::complete(n)}; });
}

lc_status lc_graph_hypercube(uint32_t dim, lc_graph** out) {
    if (!out)
        return arg_error("null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new lc_graph{longcycle::host_graph::hypercube(dim)}; });
}

lc_status lc_graph_random_regular(uint32_t n, uint32_t d, uint64_t seed, lc_graph** out) {
    if (!out)
        return arg_error("null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new lc_graph{longcycle::host_graph::random_regular(n, d, seed)}; });
}

lc_status lc_graph_circulant(uint32_t n, const uint32_t* offsets, size_t offset_count,
                             lc_graph** out) {
    if (!out)
        return arg_error("null output pointer");
    *out = nullptr;
    if (offset_count > 0 && !offsets)
        return arg_error("null offsets with nonzero count");
    return guarded([&] {
        std::vector<uint32_t> offs(offsets, offsets + offset_count);
        *out = new lc_graph{longcycle::host_graph::circulant(n, offs)};
    });
}

lc_status lc_graph_from_edge_list(const char* text, lc_graph** out) {
    if (!out)
        return arg_error("null output pointer");
    *out = nullptr;
    if (!text)
        return arg_error("null edge-list text");
    return guarded([&] { *out = new lc_graph{longcycle::parse_edge_list(text)}; });
}

void lc_graph_free(lc_graph* graph) {
    delete graph;
}

uint32_t lc_graph_vertex_count(const lc_graph* graph) {
    return graph ? graph->graph.vertex_count() : 0;
}

uint64_t lc_graph_edge_count(const lc_graph* graph) {
    return graph ? graph->graph.edge_count() : 0;
}

uint32_t lc_graph_min_degree(const lc_graph* graph) {
    return graph ? graph->graph.min_degree() : 0;
}

lc_status lc_find_long_cycle(const lc_graph* graph, double p, double eps, uint32_t k,
                             uint64_t seed, lc_search_result* result) {
    if (!graph)
        return arg_error("null graph");
    if (!result)
        return arg_error("null result pointer");
    std::memset(result, 0, sizeof *result);
    return guarded([&] {
        using namespace longcycle;
        const host_graph& host = graph->graph;
        const uint32_t k_eff = k ? k : host.min_degree();
        const thresholds th(eps, k_eff);
        percolation_oracle oracle(host, p, seed);
        cycle_search_trace trace;
        const cycle_search_outcome outcome = find_long_cycle(host, oracle, th, &trace);

        result->success = outcome.success() ? 1 : 0;
        result->branch_long_condition = outcome.branch == search_branch::long_condition ? 1 : 0;
        result->cycle_length = outcome.best_length;
        result->tested_edges = trace.exploration.tested_count;
        if (outcome.found) {
            const auto& verts = outcome.found->vertices;
            auto* buf = static_cast<uint32_t*>(std::malloc(verts.size() * sizeof(uint32_t)));
            if (!buf)
                throw std::bad_alloc();
            std::memcpy(buf, verts.data(), verts.size() * sizeof(uint32_t));
            result->cycle = buf;
            result->cycle_count = verts.size();
        }
    });
}

void lc_buffer_free(void* buffer) {
    std::free(buffer);
}

void lc_string_free(char* text) {
    std::free(text);
}

void lc_run_config_init(lc_run_config* config) {
    if (!config)
        return;
    std::memset(config, 0, sizeof *config);
    config->eps = 0.05;
    config->trials = 1;
    config->seed = 1;
    config->height_c = 1.0;
    config->workers = 1;
}

lc_status lc_run_trials(const lc_run_config* config, lc_trace_fn trace, void* user,
                        char** csv_out) {
    if (!csv_out)
        return arg_error("null output pointer");
    *csv_out = nullptr;
    return guarded([&] {
        using namespace longcycle;
        const trial_config cfg = to_config(config);
        trial_observer observer;
        if (trace)
            observer = [trace, user](const trial_record& rec) {
                trace(trace_line(rec).c_str(), user);
            };
        const std::vector<trial_record> records = run_trials(cfg, observer);
        *csv_out = dup_string(records_to_csv(records));
    });
}

lc_status lc_summarize_csv(const char* csv_text, char** summary_out) {
    if (!summary_out)
        return arg_error("null output pointer");
    *summary_out = nullptr;
    if (!csv_text)
        return arg_error("null CSV text");
    return guarded([&] {
        using namespace longcycle;
        const sweep_summary summary = summarize(parse_csv(csv_text));
        *summary_out = dup_string(summary_to_string(summary));
    });
}

lc_status lc_validate(const lc_run_config* config, char** report_out, int* all_ok) {
    if (!report_out)
        return arg_error("null output pointer");
    *report_out = nullptr;
    if (all_ok)
        *all_ok = 0;
    return guarded([&] {
        using namespace longcycle;
        const validation_report report = validate_against_oracle(to_config(config));
        *report_out = dup_string(report_to_string(report));
        if (all_ok)
            *all_ok = report.all_ok() ? 1 : 0;
    });
}

} // extern "C"
