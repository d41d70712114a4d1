#include "orbit.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace tetleb {

DedupMode DedupMode::parse(const std::string& text) {
    if (text == "exact")
        return exact();
    if (text == "rounded")
        return rounded();
    if (text.rfind("rounded:", 0) == 0) {
        int d = std::stoi(text.substr(8));
        if (d < 1)
            throw std::invalid_argument("rounded digits must be >= 1");
        return rounded(d);
    }
    throw std::invalid_argument("bad dedup mode: '" + text + "'");
}

std::string DedupMode::to_string() const {
    if (kind == Kind::Exact)
        return "exact";
    return "rounded:" + std::to_string(digits);
}

namespace {

constexpr mpfr_prec_t kIdentPrec = 256;

void append_fixed(std::string& out, mpfr_t v, int digits) {
    char buf[128];
    mpfr_snprintf(buf, sizeof(buf), "%.*RNf", digits, v);
    // normalize "-0.000...0" to "0.000...0"
    if (buf[0] == '-') {
        bool zero = true;
        for (const char* p = buf + 1; *p; ++p) {
            if (*p != '0' && *p != '.') {
                zero = false;
                break;
            }
        }
        if (zero) {
            out.append(buf + 1);
            return;
        }
    }
    out.append(buf);
}

}  // namespace

std::string rounded_identity(const ShapeKey& k, int digits) {
    mpfr_t z1, z2, w1, w2, t, tmp;
    mpfr_inits2(kIdentPrec, z1, z2, w1, w2, t, tmp, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(z1, k.z1.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(tmp, k.z2_sq.get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(z2, tmp, MPFR_RNDN);
    mpfr_set_q(w1, k.w1.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(tmp, k.w2_z2.get_mpq_t(), MPFR_RNDN);
    mpfr_div(w2, tmp, z2, MPFR_RNDN);
    mpfr_set_q(tmp, k.t_sq.get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(t, tmp, MPFR_RNDN);

    std::string out;
    out.reserve(static_cast<std::size_t>(5 * (digits + 4)));
    append_fixed(out, z1, digits);
    out.push_back(',');
    append_fixed(out, z2, digits);
    out.push_back(',');
    append_fixed(out, w1, digits);
    out.push_back(',');
    append_fixed(out, w2, digits);
    out.push_back(',');
    append_fixed(out, t, digits);
    mpfr_clears(z1, z2, w1, w2, t, tmp, static_cast<mpfr_ptr>(nullptr));
    return out;
}

std::optional<std::uint32_t> OrbitGraph::find(const ShapeKey& k) const {
    for (std::uint32_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == k)
            return i;
    return std::nullopt;
}

namespace {

struct ChildOut {
    ShapeKey key;
    SquaredLengths lengths;  // canonical order, primitive
    std::string ident;
};

struct ParentOut {
    ChildOut child[2];
};

std::string identity_of(const ShapeKey& k, const DedupMode& mode) {
    if (mode.kind == DedupMode::Kind::Exact)
        return k.to_string();
    return rounded_identity(k, mode.digits);
}

void expand_one(const SquaredLengths& parent, const DedupMode& mode, TieBreak tb,
                ParentOut& out) {
    Labeling lab = scan_labeling(parent, tb);
    auto [left, right] = bisect_lengths(parent, lab);
    const SquaredLengths* kids[2] = {&left, &right};
    for (int i = 0; i < 2; ++i) {
        Labeling clab = scan_labeling(*kids[i], tb);
        ShapeKey key = key_from_labeling(*kids[i], clab);
        out.child[i].lengths = kids[i]->permuted(clab).scaled_primitive();
        out.child[i].ident = identity_of(key, mode);
        out.child[i].key = std::move(key);
    }
}

}  // namespace

OrbitGraph explore(const ShapeKey& root, const ExploreOptions& opts) {
    if (!(root.z2_sq > 0) || !(root.t_sq > 0))
        throw DegenerateInput("orbit root is degenerate");

    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (threads == 0)
        threads = 1;

    OrbitGraph g;
    std::unordered_map<std::string, std::uint32_t> seen;
    g.nodes.push_back(root);
    g.lengths.push_back(key_to_lengths(root).scaled_primitive());
    seen.emplace(identity_of(root, opts.mode), 0u);
    g.frontiers.push_back({0u});

    for (int iter = 0; iter < opts.max_iter; ++iter) {
        const std::vector<std::uint32_t>& frontier = g.frontiers.back();
        std::vector<ParentOut> results(frontier.size());

        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                expand_one(g.lengths[frontier[i]], opts.mode, opts.tie_break, results[i]);
        };
        if (threads <= 1 || frontier.size() < 32) {
            work(0, frontier.size());
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (frontier.size() + threads - 1) / threads;
            for (unsigned tix = 0; tix < threads; ++tix) {
                std::size_t b = tix * chunk;
                std::size_t e = std::min(frontier.size(), b + chunk);
                if (b >= e)
                    break;
                pool.emplace_back(work, b, e);
            }
            for (auto& th : pool)
                th.join();
        }

        std::vector<std::uint32_t> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (int side = 0; side < 2; ++side) {
                ChildOut& c = results[i].child[side];
                auto [it, inserted] =
                    seen.emplace(std::move(c.ident), static_cast<std::uint32_t>(g.nodes.size()));
                std::uint32_t id = it->second;
                if (inserted) {
                    g.nodes.push_back(std::move(c.key));
                    g.lengths.push_back(std::move(c.lengths));
                    next.push_back(id);
                }
                g.edges.push_back({frontier[i], id, side == 0 ? 'L' : 'R'});
            }
        }
        g.frontiers.push_back(std::move(next));
        if (g.frontiers.back().empty()) {
            g.closed = true;
            break;
        }
        if (g.nodes.size() > opts.node_cap)
            break;
    }
    return g;
}

std::optional<std::size_t> orbit_length(const OrbitGraph& g) {
    if (!g.closed)
        return std::nullopt;
    return g.nodes.size();
}

std::vector<std::size_t> frontier_counts(const OrbitGraph& g) {
    std::vector<std::size_t> out;
    out.reserve(g.frontiers.size());
    for (const auto& f : g.frontiers)
        out.push_back(f.size());
    return out;
}

std::optional<std::string> find_word(const OrbitGraph& g, const ShapeKey& from,
                                     const ShapeKey& to) {
    auto src = g.find(from);
    auto dst = g.find(to);
    if (!src || !dst)
        return std::nullopt;
    if (*src == *dst)
        return std::string();

    // adjacency in edge insertion order keeps L before R per node
    std::vector<std::vector<std::pair<std::uint32_t, char>>> adj(g.nodes.size());
    for (const auto& e : g.edges)
        adj[e.src].push_back({e.dst, e.label});

    std::vector<std::int64_t> pred(g.nodes.size(), -1);
    std::vector<char> via(g.nodes.size(), 0);
    std::vector<std::uint32_t> queue{*src};
    pred[*src] = static_cast<std::int64_t>(*src);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::uint32_t u = queue[qi];
        for (auto [v, lab] : adj[u]) {
            if (pred[v] >= 0)
                continue;
            pred[v] = u;
            via[v] = lab;
            if (v == *dst) {
                std::string word;
                for (std::uint32_t cur = v; cur != *src; cur = static_cast<std::uint32_t>(pred[cur]))
                    word.push_back(via[cur]);
                std::reverse(word.begin(), word.end());
                return word;
            }
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> cycle_components(const OrbitGraph& g) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& e : g.edges)
        adj[e.src].push_back(e.dst);

    // iterative Tarjan
    std::vector<std::int64_t> index(n, -1), low(n, 0);
    std::vector<char> onstack(n, 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::vector<std::uint32_t>> sccs;
    std::int64_t counter = 0;

    struct Frame {
        std::uint32_t v;
        std::size_t child;
    };
    for (std::uint32_t start = 0; start < n; ++start) {
        if (index[start] >= 0)
            continue;
        std::vector<Frame> call{{start, 0}};
        index[start] = low[start] = counter++;
        stack.push_back(start);
        onstack[start] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < adj[f.v].size()) {
                std::uint32_t w = adj[f.v][f.child++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    onstack[w] = 1;
                    call.push_back({w, 0});
                } else if (onstack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                std::uint32_t v = f.v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<std::uint32_t> comp;
                    for (;;) {
                        std::uint32_t w = stack.back();
                        stack.pop_back();
                        onstack[w] = 0;
                        comp.push_back(w);
                        if (w == v)
                            break;
                    }
                    std::sort(comp.begin(), comp.end());
                    bool cyclic = comp.size() > 1;
                    if (!cyclic) {
                        for (std::uint32_t w : adj[comp[0]])
                            if (w == comp[0])
                                cyclic = true;
                    }
                    if (cyclic)
                        sccs.push_back(std::move(comp));
                }
            }
        }
    }
    std::sort(sccs.begin(), sccs.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return sccs;
}

std::vector<SweepRow> sweep(const std::function<ShapeKey(const Rational&)>& family,
                            const std::vector<Rational>& alphas, const ExploreOptions& opts) {
    std::vector<SweepRow> rows;
    rows.reserve(alphas.size());
    for (const auto& alpha : alphas) {
        SweepRow row;
        row.alpha = alpha;
        try {
            ShapeKey k = family(alpha);
            if (!validate_key(k).empty()) {
                row.status = SweepStatus::Invalid;
            } else {
                OrbitGraph g = explore(k, opts);
                row.status = g.closed ? SweepStatus::Closed : SweepStatus::Open;
                row.length = g.nodes.size();
            }
        } catch (const std::exception&) {
            row.status = SweepStatus::Invalid;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace tetleb
