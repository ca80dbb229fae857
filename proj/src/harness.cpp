#include "longcycle/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "longcycle/errors.hpp"
#include "longcycle/longest_cycle.hpp"
#include "longcycle/rng.hpp"

namespace longcycle {

const char* to_string(host_family family) {
    switch (family) {
    case host_family::complete: return "complete";
    case host_family::hypercube: return "hypercube";
    case host_family::regular: return "regular";
    case host_family::circulant: return "circulant";
    case host_family::file: return "file";
    }
    return "unknown";
}

bool family_is_random(host_family family) {
    return family == host_family::regular;
}

host_graph build_host(const host_spec& spec, std::uint64_t seed) {
    switch (spec.family) {
    case host_family::complete:
        return host_graph::complete(spec.n);
    case host_family::hypercube:
        return host_graph::hypercube(spec.dim);
    case host_family::regular:
        return host_graph::random_regular(spec.n, spec.d, seed);
    case host_family::circulant:
        return host_graph::circulant(spec.n, spec.offsets);
    case host_family::file: {
        std::ifstream in(spec.path, std::ios::binary);
        if (!in)
            fail(errc::parse_error, "cannot read graph file: " + spec.path);
        std::ostringstream text;
        text << in.rdbuf();
        return parse_edge_list(text.str());
    }
    }
    fail(errc::bad_argument, "unknown host family");
}

namespace {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

struct resolved_config {
    std::optional<host_graph> shared; // empty when each trial samples its own host
    std::uint32_t k;
    double p;
    thresholds th;
};

resolved_config resolve(const trial_config& config) {
    if (config.trials < 1)
        fail(errc::config_error, "trials: must be at least 1");
    if (config.workers < 1)
        fail(errc::config_error, "workers: must be at least 1");
    if (!(config.height_C >= 0.0))
        fail(errc::config_error, "height_C: must be nonnegative");
    if (config.p.has_value() == config.c.has_value())
        fail(errc::config_error, "p: exactly one of p and c must be given");
    if (config.p && !(*config.p >= 0.0 && *config.p <= 1.0))
        fail(errc::config_error, "p: must be in [0,1]");
    if (config.c && !(*config.c >= 0.0))
        fail(errc::config_error, "c: must be nonnegative");

    const bool per_trial = family_is_random(config.host.family) && !config.host.fix_host;
    host_graph probe = [&] {
        try {
            return build_host(config.host, mix_seed(config.base_seed, 0, 1));
        } catch (const error& e) {
            fail(errc::config_error, std::string("host: ") + e.what());
        }
    }();

    const std::uint32_t k = probe.min_degree();
    if (k < 1)
        fail(errc::config_error, "host: minimum degree is 0, no k to percolate against");
    const double p = config.p ? *config.p : std::min(1.0, *config.c / k);

    try {
        thresholds th(config.eps, k);
        resolved_config r{std::nullopt, k, p, th};
        if (!per_trial)
            r.shared = std::move(probe);
        return r;
    } catch (const error& e) {
        fail(errc::config_error, std::string("eps: ") + e.what());
    }
}

std::string failure_token(const cycle_search_outcome& outcome) {
    if (!outcome.failure)
        return "none";
    std::string token = to_string(outcome.failure->reason);
    if (outcome.failure->reason == failure_reason::chord_probe_failed)
        token += "_" + std::to_string(outcome.failure->step);
    return token;
}

trial_record run_one(const trial_config& config, const resolved_config& r, std::uint64_t t) {
    const auto start = std::chrono::steady_clock::now();

    std::optional<host_graph> local;
    if (!r.shared)
        local = build_host(config.host, mix_seed(config.base_seed, t, 1));
    const host_graph& host = r.shared ? *r.shared : *local;

    percolation_oracle oracle(host, r.p, mix_seed(config.base_seed, t));
    cycle_search_trace trace;
    const cycle_search_outcome outcome = find_long_cycle(host, oracle, r.th, &trace);

    const vertex_id n = host.vertex_count();
    if (trace.exploration.present_count + trace.exploration.component_count != n)
        fail(errc::internal_error, "present edges plus components must equal vertex count");
    if (outcome.success() && !is_valid_cycle(*outcome.found, host, oracle, trace.exploration.forest))
        fail(errc::internal_error, "search reported an invalid cycle");

    trial_record rec;
    rec.trial = t;
    rec.n = n;
    rec.k = r.k;
    rec.p = r.p;
    rec.tested_edges = trace.exploration.tested_count;
    rec.tested_bound = r.p > 0.0 ? 2.0 * n / r.p : std::numeric_limits<double>::infinity();
    rec.lemma3_ok = static_cast<double>(rec.tested_edges) <= rec.tested_bound;
    rec.frac_full = n ? static_cast<double>(trace.table.full_count) / n : 0.0;
    rec.poor_count = trace.table.poor_count;
    rec.heavy_count = trace.table.heavy_count;

    const double height_cut = config.height_C * r.k;
    std::uint64_t tall = 0;
    for (vertex_id v = 0; v < n; ++v)
        if (static_cast<double>(trace.table.height[v]) >= height_cut)
            ++tall;
    rec.frac_height_ge_Ck = n ? static_cast<double>(tall) / n : 0.0;

    if (trace.path_search) {
        rec.path_found = trace.path_search->result == vertical_path_search::status::found;
        if (trace.path_search->result != vertical_path_search::status::not_found)
            rec.path_bad_count = static_cast<std::int64_t>(trace.path_search->bad_count);
    }
    rec.branch = outcome.branch;
    rec.cycle_length = outcome.best_length;
    rec.success = outcome.success();
    rec.failure_reason = failure_token(outcome);

    const auto stop = std::chrono::steady_clock::now();
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return rec;
}

} // namespace

std::vector<trial_record> run_trials(const trial_config& config, const trial_observer& on_record) {
    const resolved_config r = resolve(config);
    std::vector<trial_record> records(config.trials);

    const std::uint32_t workers =
        on_record ? 1 : static_cast<std::uint32_t>(std::min<std::uint64_t>(config.workers, config.trials));
    if (workers <= 1) {
        for (std::uint64_t t = 0; t < config.trials; ++t) {
            records[t] = run_one(config, r, t);
            if (on_record)
                on_record(records[t]);
        }
        return records;
    }

    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::uint64_t t; (t = next.fetch_add(1)) < config.trials;)
                    records[t] = run_one(config, r, t);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return records;
}

const char* const csv_header =
    "trial,n,k,p,tested_edges,tested_bound,lemma3_ok,frac_full,poor_count,heavy_count,"
    "frac_height_ge_Ck,path_found,path_bad_count,branch,cycle_length,success,failure_reason,"
    "elapsed_ms";

std::string record_to_csv_line(const trial_record& rec) {
    std::string line;
    line += std::to_string(rec.trial);
    line += ',';
    line += std::to_string(rec.n);
    line += ',';
    line += std::to_string(rec.k);
    line += ',';
    line += format_real(rec.p);
    line += ',';
    line += std::to_string(rec.tested_edges);
    line += ',';
    line += format_real(rec.tested_bound);
    line += ',';
    line += rec.lemma3_ok ? '1' : '0';
    line += ',';
    line += format_real(rec.frac_full);
    line += ',';
    line += std::to_string(rec.poor_count);
    line += ',';
    line += std::to_string(rec.heavy_count);
    line += ',';
    line += format_real(rec.frac_height_ge_Ck);
    line += ',';
    line += rec.path_found ? '1' : '0';
    line += ',';
    line += std::to_string(rec.path_bad_count);
    line += ',';
    line += to_string(rec.branch);
    line += ',';
    line += std::to_string(rec.cycle_length);
    line += ',';
    line += rec.success ? '1' : '0';
    line += ',';
    line += rec.failure_reason;
    line += ',';
    line += format_real(rec.elapsed_ms);
    return line;
}

std::string records_to_csv(const std::vector<trial_record>& records) {
    std::string out = csv_header;
    out += '\n';
    for (const auto& rec : records) {
        out += record_to_csv_line(rec);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = line.find(',', begin);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(begin));
            return fields;
        }
        fields.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
}

template <typename T>
T parse_number(const std::string& field, std::size_t line_no) {
    T value{};
    const char* first = field.data();
    const char* last = first + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": bad number '" + field + "'");
    return value;
}

bool parse_bool(const std::string& field, std::size_t line_no) {
    if (field == "0")
        return false;
    if (field == "1")
        return true;
    fail(errc::parse_error, "line " + std::to_string(line_no) + ": bad flag '" + field + "'");
}

} // namespace

std::vector<trial_record> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<trial_record> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line_no == 1) {
            if (line != csv_header)
                fail(errc::parse_error, "line 1: unexpected CSV header");
            continue;
        }
        if (line.empty())
            continue;
        const auto fields = split_fields(line);
        if (fields.size() != 18)
            fail(errc::parse_error,
                 "line " + std::to_string(line_no) + ": expected 18 fields, got " +
                     std::to_string(fields.size()));
        trial_record rec;
        rec.trial = parse_number<std::uint64_t>(fields[0], line_no);
        rec.n = parse_number<std::uint32_t>(fields[1], line_no);
        rec.k = parse_number<std::uint32_t>(fields[2], line_no);
        rec.p = parse_number<double>(fields[3], line_no);
        rec.tested_edges = parse_number<std::uint64_t>(fields[4], line_no);
        rec.tested_bound = parse_number<double>(fields[5], line_no);
        rec.lemma3_ok = parse_bool(fields[6], line_no);
        rec.frac_full = parse_number<double>(fields[7], line_no);
        rec.poor_count = parse_number<std::uint64_t>(fields[8], line_no);
        rec.heavy_count = parse_number<std::uint64_t>(fields[9], line_no);
        rec.frac_height_ge_Ck = parse_number<double>(fields[10], line_no);
        rec.path_found = parse_bool(fields[11], line_no);
        rec.path_bad_count = parse_number<std::int64_t>(fields[12], line_no);
        if (fields[13] == "long_condition")
            rec.branch = search_branch::long_condition;
        else if (fields[13] == "chord_chain")
            rec.branch = search_branch::chord_chain;
        else
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": bad branch '" + fields[13] + "'");
        rec.cycle_length = parse_number<std::uint64_t>(fields[14], line_no);
        rec.success = parse_bool(fields[15], line_no);
        rec.failure_reason = fields[16];
        rec.elapsed_ms = parse_number<double>(fields[17], line_no);
        records.push_back(std::move(rec));
    }
    if (line_no == 0)
        fail(errc::empty_input, "no CSV header");
    return records;
}

namespace {

// Nearest-rank quantile on sorted values: the ceil(q*N)-th smallest.
std::uint64_t nearest_rank(const std::vector<std::uint64_t>& sorted, double q) {
    const std::size_t n = sorted.size();
    std::size_t rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
    if (rank < 1)
        rank = 1;
    if (rank > n)
        rank = n;
    return sorted[rank - 1];
}

} // namespace

sweep_summary summarize(const std::vector<trial_record>& records) {
    if (records.empty())
        fail(errc::empty_input, "no records to summarize");

    std::map<std::tuple<std::uint32_t, std::uint32_t, double>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < records.size(); ++i)
        groups[{records[i].n, records[i].k, records[i].p}].push_back(i);

    sweep_summary summary;
    for (const auto& [key, idx] : groups) {
        group_summary g;
        std::tie(g.n, g.k, g.p) = key;
        g.trials = idx.size();

        std::vector<std::uint64_t> lengths;
        lengths.reserve(idx.size());
        double length_sum = 0.0, full_sum = 0.0;
        std::uint64_t successes = 0, lemma3 = 0;
        for (std::size_t i : idx) {
            const trial_record& rec = records[i];
            lengths.push_back(rec.cycle_length);
            length_sum += static_cast<double>(rec.cycle_length);
            full_sum += rec.frac_full;
            successes += rec.success;
            lemma3 += rec.lemma3_ok;
        }
        std::sort(lengths.begin(), lengths.end());

        const double count = static_cast<double>(idx.size());
        g.success_rate = successes / count;
        g.lemma3_rate = lemma3 / count;
        g.mean_frac_full = full_sum / count;
        g.mean_cycle_length = length_sum / count;
        g.min_cycle_length = lengths.front();
        g.q25_cycle_length = nearest_rank(lengths, 0.25);
        g.median_cycle_length = nearest_rank(lengths, 0.5);
        g.q75_cycle_length = nearest_rank(lengths, 0.75);
        g.max_cycle_length = lengths.back();
        summary.groups.push_back(std::move(g));
    }
    return summary;
}

std::string summary_to_string(const sweep_summary& summary) {
    std::string out;
    for (const auto& g : summary.groups) {
        out += "n=" + std::to_string(g.n);
        out += " k=" + std::to_string(g.k);
        out += " p=" + format_real(g.p);
        out += " trials=" + std::to_string(g.trials);
        out += " success_rate=" + format_real(g.success_rate);
        out += " mean_cycle_length=" + format_real(g.mean_cycle_length);
        out += " min=" + std::to_string(g.min_cycle_length);
        out += " q25=" + std::to_string(g.q25_cycle_length);
        out += " median=" + std::to_string(g.median_cycle_length);
        out += " q75=" + std::to_string(g.q75_cycle_length);
        out += " max=" + std::to_string(g.max_cycle_length);
        out += " lemma3_rate=" + format_real(g.lemma3_rate);
        out += " mean_frac_full=" + format_real(g.mean_frac_full);
        out += '\n';
    }
    return out;
}

validation_report validate_against_oracle(const trial_config& config) {
    const resolved_config r = resolve(config);
    const vertex_id n = r.shared ? r.shared->vertex_count() : config.host.n;
    if (n > 16)
        fail(errc::graph_too_large, "oracle validation needs n <= 16, got n=" + std::to_string(n));

    validation_report report;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        std::optional<host_graph> local;
        if (!r.shared)
            local = build_host(config.host, mix_seed(config.base_seed, t, 1));
        const host_graph& host = r.shared ? *r.shared : *local;

        percolation_oracle oracle(host, r.p, mix_seed(config.base_seed, t));
        cycle_search_trace trace;
        const cycle_search_outcome outcome = find_long_cycle(host, oracle, r.th, &trace);

        std::vector<std::pair<vertex_id, vertex_id>> revealed;
        for (const edge_key& e : oracle.present_edges())
            revealed.emplace_back(e.lo, e.hi);
        const host_graph subgraph = host_graph::from_edges(host.vertex_count(), revealed);
        const brute_force_result oracle_best = longest_cycle_brute_force(subgraph);

        oracle_comparison row;
        row.trial = t;
        row.success = outcome.success();
        row.oracle_length = oracle_best.length;
        if (outcome.success()) {
            row.builder_length = outcome.found->length();
            row.ok = is_valid_cycle(*outcome.found, host, oracle, trace.exploration.forest) &&
                     row.builder_length <= row.oracle_length;
            ++report.checked;
            if (!row.ok)
                ++report.failures;
        }
        report.rows.push_back(row);
    }
    return report;
}

std::string report_to_string(const validation_report& report) {
    std::string out;
    for (const auto& row : report.rows) {
        out += "trial=" + std::to_string(row.trial);
        out += " success=" + std::to_string(row.success ? 1 : 0);
        out += " cycle_length=" + std::to_string(row.builder_length);
        out += " oracle_length=" + std::to_string(row.oracle_length);
        out += " ok=" + std::to_string(row.ok ? 1 : 0);
        out += '\n';
    }
    out += "checked=" + std::to_string(report.checked);
    out += " failures=" + std::to_string(report.failures);
    out += report.all_ok() ? " verdict=pass\n" : " verdict=fail\n";
    return out;
}

} // namespace longcycle
