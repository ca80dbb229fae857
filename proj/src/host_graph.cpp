#include "longcycle/host_graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string_view>

#include "longcycle/errors.hpp"
#include "longcycle/rng.hpp"

namespace longcycle {

host_graph host_graph::from_edges(vertex_id n, const std::vector<std::pair<vertex_id, vertex_id>>& edges) {
    host_graph g;
    g.n_ = n;
    g.adjacency_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            fail(errc::index_out_of_range, "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            fail(errc::self_loop, "self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::uint32_t min_deg = n > 0 ? std::numeric_limits<std::uint32_t>::max() : 0;
    for (vertex_id v = 0; v < n; ++v) {
        auto& list = g.adjacency_[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            fail(errc::duplicate_edge, "duplicate edge at vertex " + std::to_string(v));
        min_deg = std::min(min_deg, static_cast<std::uint32_t>(list.size()));
        g.edge_count_ += list.size();
    }
    g.edge_count_ /= 2;
    g.min_degree_ = min_deg;
    return g;
}

host_graph host_graph::complete(vertex_id n) {
    if (n < 1)
        fail(errc::bad_argument, "complete graph needs n >= 1");
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (vertex_id u = 0; u < n; ++u)
        for (vertex_id v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return from_edges(n, edges);
}

host_graph host_graph::hypercube(std::uint32_t dim) {
    if (dim < 1 || dim > 24)
        fail(errc::dimension_too_large, "hypercube dimension must be in [1,24], got " + std::to_string(dim));
    const vertex_id n = vertex_id{1} << dim;
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    edges.reserve(static_cast<std::size_t>(n) / 2 * dim);
    for (vertex_id u = 0; u < n; ++u)
        for (std::uint32_t b = 0; b < dim; ++b) {
            const vertex_id v = u ^ (vertex_id{1} << b);
            if (u < v)
                edges.emplace_back(u, v);
        }
    return from_edges(n, edges);
}

host_graph host_graph::random_regular(vertex_id n, std::uint32_t d, std::uint64_t seed) {
    if (static_cast<std::uint64_t>(n) * d % 2 != 0)
        fail(errc::parity_violation, "n*d must be even for a d-regular graph");
    if (d >= n)
        fail(errc::bad_argument, "regular graph needs d < n");

    // Pairing model: shuffle n*d half-edge points, pair consecutively,
    // reject the whole pairing on any self-loop or repeated edge. A pairing
    // is simple with probability about exp(-(d*d-1)/4), so the budget keeps
    // degrees through d=6 dependable while still bounding the worst case.
    const std::size_t points = static_cast<std::size_t>(n) * d;
    counter_rng rng(seed);
    std::vector<vertex_id> owner(points);
    constexpr int max_attempts = 20000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = 0; i < points; ++i)
            owner[i] = static_cast<vertex_id>(i / d);
        for (std::size_t i = points; i > 1; --i)
            std::swap(owner[i - 1], owner[rng.next_below(i)]);

        std::vector<std::pair<vertex_id, vertex_id>> edges;
        edges.reserve(points / 2);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < points && ok; i += 2) {
            vertex_id u = owner[i], v = owner[i + 1];
            if (u == v)
                ok = false;
            else
                edges.emplace_back(u, v);
        }
        if (!ok)
            continue;
        std::vector<std::pair<vertex_id, vertex_id>> canon(edges);
        for (auto& e : canon)
            if (e.first > e.second)
                std::swap(e.first, e.second);
        std::sort(canon.begin(), canon.end());
        if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
            continue;
        return from_edges(n, edges);
    }
    fail(errc::rejection_budget_exhausted,
         "no simple pairing found in " + std::to_string(max_attempts) + " attempts (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

host_graph host_graph::circulant(vertex_id n, const std::vector<std::uint32_t>& offsets) {
    std::vector<std::uint32_t> seen;
    for (std::uint32_t s : offsets) {
        if (s < 1 || s > n / 2)
            fail(errc::bad_offset, "circulant offset " + std::to_string(s) + " outside [1, n/2]");
        if (std::find(seen.begin(), seen.end(), s) != seen.end())
            fail(errc::bad_offset, "repeated circulant offset " + std::to_string(s));
        seen.push_back(s);
    }
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    for (vertex_id i = 0; i < n; ++i)
        for (std::uint32_t s : offsets) {
            const edge_key e(i, static_cast<vertex_id>((i + static_cast<std::uint64_t>(s)) % n));
            edges.emplace_back(e.lo, e.hi);
        }
    // each edge is produced from both endpoints when s = n/2
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return from_edges(n, edges);
}

bool host_graph::has_edge(vertex_id u, vertex_id v) const {
    if (u >= n_ || v >= n_ || u == v)
        return false;
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<edge_key> host_graph::edges() const {
    std::vector<edge_key> out;
    out.reserve(edge_count_);
    for (vertex_id u = 0; u < n_; ++u)
        for (vertex_id v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

host_graph parse_edge_list(const std::string& text) {
    std::size_t pos = 0;
    std::size_t line_no = 0;
    bool have_n = false;
    vertex_id n = 0;
    std::vector<std::pair<vertex_id, vertex_id>> edges;

    auto parse_fail = [&](const std::string& msg) {
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": " + msg);
    };

    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos)
            nl = text.size();
        std::string_view line(text.data() + pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty() || line.front() == '#') {
            if (pos > text.size())
                break;
            continue;
        }

        std::uint64_t nums[2];
        int count = 0;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                ++i;
            if (i == line.size())
                break;
            if (count == 2)
                parse_fail("trailing characters");
            const char* first = line.data() + i;
            const char* last = line.data() + line.size();
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr == first)
                parse_fail("expected a nonnegative integer");
            nums[count++] = value;
            i = static_cast<std::size_t>(ptr - line.data());
        }
        if (!have_n) {
            if (count != 1)
                parse_fail("expected a single vertex count");
            if (nums[0] > std::numeric_limits<vertex_id>::max() - 1)
                parse_fail("vertex count too large");
            n = static_cast<vertex_id>(nums[0]);
            have_n = true;
        } else {
            if (count != 2)
                parse_fail("expected 'u v'");
            if (nums[0] >= n || nums[1] >= n)
                parse_fail("vertex " + std::to_string(std::max(nums[0], nums[1])) + " out of range for n=" + std::to_string(n));
            if (nums[0] >= nums[1])
                parse_fail("edges must satisfy u < v");
            edges.emplace_back(static_cast<vertex_id>(nums[0]), static_cast<vertex_id>(nums[1]));
        }
        if (pos > text.size())
            break;
    }
    if (!have_n)
        fail(errc::parse_error, "line 1: missing vertex count");
    try {
        return host_graph::from_edges(n, edges);
    } catch (const error& e) {
        fail(errc::parse_error, std::string("edge list invalid: ") + e.what());
    }
}

std::string serialize_edge_list(const host_graph& g) {
    std::string out = std::to_string(g.vertex_count());
    out.push_back('\n');
    for (const edge_key& e : g.edges()) {
        out += std::to_string(e.lo);
        out.push_back(' ');
        out += std::to_string(e.hi);
        out.push_back('\n');
    }
    return out;
}

} // namespace longcycle
