#pragma once

#include <stdexcept>
#include <string>

namespace longcycle {

enum class errc {
    index_out_of_range,
    self_loop,
    duplicate_edge,
    dimension_too_large,
    parity_violation,
    rejection_budget_exhausted,
    bad_offset,
    parse_error,
    not_a_host_edge,
    oracle_not_fresh,
    eps_out_of_range,
    bad_thresholds,
    graph_too_large,
    malformed_chain,
    not_single_cycle,
    config_error,
    empty_input,
    bad_argument,
    internal_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace longcycle
