#include "hyperterrain/generators.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "hyperterrain/prng.hpp"

namespace hyperterrain {

namespace {

using EdgeList = std::vector<std::pair<Label, Label>>;

Graph build(const EdgeList& edges) { return Graph::from_edges(edges); }

}  // namespace

Vertex NamedGraph::by_name(const std::string& name) const {
    for (const auto& [n, v] : names) {
        if (n == name) return v;
    }
    fail(ErrorCode::UnknownVertex, "no vertex named '" + name + "'");
}

NamedGraph gen_fig3(const Fig3Params& params) {
    const int k = params.k, p = params.p;
    if (k < 1 || p < 1) fail(ErrorCode::InvalidParams, "fig3 requires k >= 1 and p >= 1");
    const int ell = k + p;

    std::vector<std::pair<std::string, Vertex>> names;
    Vertex next = 0;
    auto add = [&](const std::string& name) {
        names.emplace_back(name, next);
        return next++;
    };

    const Vertex x = add("x");
    std::vector<Vertex> u(2 * k + 2);  // u[1..2k+1]
    for (int i = 1; i <= 2 * k + 1; ++i) u[i] = add("u" + std::to_string(i));
    const Vertex y = add("y");
    std::vector<Vertex> v(2 * k + 2);
    for (int i = 1; i <= 2 * k + 1; ++i) v[i] = add("v" + std::to_string(i));
    std::vector<Vertex> w(2 * k + 1);  // w[2..2k]
    for (int i = 2; i <= 2 * k; ++i) w[i] = add("w" + std::to_string(i));

    EdgeList edges;
    auto path_between = [&](Vertex a, Vertex b, int len, const std::string& stem) {
        // len-1 fresh interior vertices between a and b
        Vertex prev = a;
        for (int i = 1; i < len; ++i) {
            Vertex mid = add(stem + std::to_string(i));
            edges.emplace_back(prev, mid);
            prev = mid;
        }
        edges.emplace_back(prev, b);
    };

    // the two main x..y paths
    edges.emplace_back(x, u[1]);
    for (int i = 1; i <= 2 * k; ++i) edges.emplace_back(u[i], u[i + 1]);
    edges.emplace_back(u[2 * k + 1], y);
    edges.emplace_back(x, v[1]);
    for (int i = 1; i <= 2 * k; ++i) edges.emplace_back(v[i], v[i + 1]);
    edges.emplace_back(v[2 * k + 1], y);
    // middle path and rungs
    for (int i = 2; i < 2 * k; ++i) edges.emplace_back(w[i], w[i + 1]);
    for (int i = 2; i <= 2 * k; ++i) {
        edges.emplace_back(u[i], w[i]);
        edges.emplace_back(w[i], v[i]);
    }
    // branches of length ell and pendant paths of length p
    const Vertex uu = add("u");
    path_between(u[k + 2], uu, ell, "pu");
    const Vertex vv = add("v");
    path_between(v[k + 2], vv, ell, "pv");
    const Vertex xs = add("x*");
    path_between(x, xs, p, "px");
    const Vertex ys = add("y*");
    path_between(y, ys, p, "py");

    return NamedGraph{build(edges), std::move(names)};
}

Graph gen_path(int n) {
    if (n < 2) fail(ErrorCode::InvalidParams, "path(n) requires n >= 2");
    EdgeList edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build(edges);
}

Graph gen_cycle(int n) {
    if (n < 3) fail(ErrorCode::InvalidParams, "cycle(n) requires n >= 3");
    EdgeList edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build(edges);
}

Graph gen_complete(int n) {
    if (n < 2) fail(ErrorCode::InvalidParams, "complete(n) requires n >= 2");
    EdgeList edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build(edges);
}

Graph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1 || rows * cols < 2) fail(ErrorCode::InvalidParams, "grid needs at least 2 vertices");
    EdgeList edges;
    auto id = [cols](int r, int c) { return static_cast<Label>(r) * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return build(edges);
}

Graph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 2) fail(ErrorCode::InvalidParams, "random_tree(n) requires n >= 2");
    SplitMix64 rng(mix64(seed, hash_string("random_tree")));
    EdgeList edges;
    for (int v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<Label>(rng.below(v)), v);
    }
    return build(edges);
}

Graph gen_gnm_connected(int n, std::int64_t m, std::uint64_t seed) {
    if (n < 2) fail(ErrorCode::InvalidParams, "gnm_connected requires n >= 2");
    const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_m) {
        fail(ErrorCode::InvalidParams, "gnm_connected(" + std::to_string(n) + "," + std::to_string(m) +
                                           "): m must lie in [n-1, n(n-1)/2]");
    }
    // Retry with deterministically derived sub-seeds until the sample is
    // connected; sparse draws connect within a few attempts in practice.
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (attempt > 10000) fail(ErrorCode::IterationCapExceeded, "gnm_connected: too many attempts");
        SplitMix64 rng(mix64(mix64(seed, attempt), hash_string("gnm_connected")));
        std::unordered_set<std::int64_t> seen;
        seen.reserve(static_cast<std::size_t>(m) * 2);
        EdgeList edges;
        edges.reserve(static_cast<std::size_t>(m));
        if (m > max_m / 2) {
            // dense request: shuffle the full pair list instead of rejection
            std::vector<std::pair<Label, Label>> all;
            all.reserve(static_cast<std::size_t>(max_m));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
            for (std::size_t i = all.size(); i > 1; --i) {
                std::swap(all[i - 1], all[rng.below(i)]);
            }
            edges.assign(all.begin(), all.begin() + static_cast<std::size_t>(m));
        } else {
            while (static_cast<std::int64_t>(edges.size()) < m) {
                Vertex a = static_cast<Vertex>(rng.below(n));
                Vertex b = static_cast<Vertex>(rng.below(n));
                if (a == b) continue;
                if (a > b) std::swap(a, b);
                std::int64_t key = static_cast<std::int64_t>(a) * n + b;
                if (seen.insert(key).second) edges.emplace_back(a, b);
            }
        }
        try {
            return build(edges);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DisconnectedGraph) throw;
        }
    }
}

std::string FamilySpec::descriptor() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Path: os << "path(" << a << ")"; break;
        case Kind::Cycle: os << "cycle(" << a << ")"; break;
        case Kind::Complete: os << "complete(" << a << ")"; break;
        case Kind::Grid: os << "grid(" << a << "," << b << ")"; break;
        case Kind::RandomTree: os << "random_tree(" << a << "," << seed << ")"; break;
        case Kind::GnmConnected: os << "gnm_connected(" << a << "," << b << "," << seed << ")"; break;
        case Kind::Fig3: os << "fig3(" << a << "," << b << ")"; break;
    }
    return os.str();
}

FamilySpec parse_family(const std::string& text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
        fail(ErrorCode::InvalidParams, "bad family descriptor: " + text);
    }
    std::string name = text.substr(0, open);
    std::string args = text.substr(open + 1, close - open - 1);
    std::vector<std::int64_t> vals;
    std::istringstream as(args);
    std::string tok;
    while (std::getline(as, tok, ',')) {
        try {
            vals.push_back(std::stoll(tok));
        } catch (...) {
            fail(ErrorCode::InvalidParams, "bad family argument '" + tok + "' in " + text);
        }
    }
    auto want = [&](std::size_t c) {
        if (vals.size() != c) {
            fail(ErrorCode::InvalidParams,
                 name + " expects " + std::to_string(c) + " argument(s), got " + std::to_string(vals.size()));
        }
    };
    FamilySpec spec;
    using K = FamilySpec::Kind;
    if (name == "path") { want(1); spec.kind = K::Path; spec.a = vals[0]; }
    else if (name == "cycle") { want(1); spec.kind = K::Cycle; spec.a = vals[0]; }
    else if (name == "complete") { want(1); spec.kind = K::Complete; spec.a = vals[0]; }
    else if (name == "grid") { want(2); spec.kind = K::Grid; spec.a = vals[0]; spec.b = vals[1]; }
    else if (name == "random_tree") { want(2); spec.kind = K::RandomTree; spec.a = vals[0]; spec.seed = static_cast<std::uint64_t>(vals[1]); }
    else if (name == "gnm_connected") { want(3); spec.kind = K::GnmConnected; spec.a = vals[0]; spec.b = vals[1]; spec.seed = static_cast<std::uint64_t>(vals[2]); }
    else if (name == "fig3") { want(2); spec.kind = K::Fig3; spec.a = vals[0]; spec.b = vals[1]; }
    else fail(ErrorCode::InvalidParams, "unknown family '" + name + "'");
    return spec;
}

Graph gen_family(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::Path: return gen_path(static_cast<int>(spec.a));
        case K::Cycle: return gen_cycle(static_cast<int>(spec.a));
        case K::Complete: return gen_complete(static_cast<int>(spec.a));
        case K::Grid: return gen_grid(static_cast<int>(spec.a), static_cast<int>(spec.b));
        case K::RandomTree: return gen_random_tree(static_cast<int>(spec.a), spec.seed);
        case K::GnmConnected: return gen_gnm_connected(static_cast<int>(spec.a), spec.b, spec.seed);
        case K::Fig3: return gen_fig3({static_cast<int>(spec.a), static_cast<int>(spec.b)}).graph;
    }
    fail(ErrorCode::InvalidParams, "unreachable family kind");
}

}  // namespace hyperterrain
