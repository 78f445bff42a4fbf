#include "cqs/plumbing.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>

#include "cqs/cfrac.hpp"

namespace cqs {

namespace {

using Edge = std::pair<VertexId, VertexId>;

Edge normalized(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string vid(VertexId v) { return "v" + std::to_string(v); }

// Smallest disjoint-set forest; enough for cycle detection on a few dozen vertices.
struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

void require_tree(const PlumbingGraph& g, const char* op) {
    if (!g.is_tree()) {
        throw std::invalid_argument(std::string(op) + ": graph is not a tree");
    }
}

}  // namespace

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                             std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), arrows_(std::move(arrows)) {
    std::sort(vertices_.begin(), vertices_.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (vertices_[i].id == vertices_[i - 1].id) {
            throw std::invalid_argument("duplicate vertex id " + std::to_string(vertices_[i].id));
        }
    }
    for (auto& e : edges_) {
        if (e.first == e.second) {
            throw std::invalid_argument("self-loop at " + vid(e.first));
        }
        if (!has_vertex(e.first) || !has_vertex(e.second)) {
            throw std::invalid_argument("edge references unknown vertex");
        }
        e = normalized(e.first, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("duplicate edge");
    }
    std::set<std::string> labels;
    for (const auto& a : arrows_) {
        if (!has_vertex(a.vertex)) {
            throw std::invalid_argument("arrow '" + a.label + "' references unknown vertex");
        }
        if (!labels.insert(a.label).second) {
            throw std::invalid_argument("duplicate arrow label '" + a.label + "'");
        }
    }
    std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) {
        return std::tie(a.vertex, a.label) < std::tie(b.vertex, b.label);
    });

    degrees_.assign(vertices_.size(), 0);
    arrow_counts_.assign(vertices_.size(), 0);
    UnionFind uf(vertices_.size());
    tree_ = !vertices_.empty() && edges_.size() + 1 == vertices_.size();
    for (const auto& e : edges_) {
        const std::size_t a = index_of(e.first);
        const std::size_t b = index_of(e.second);
        ++degrees_[a];
        ++degrees_[b];
        if (!uf.unite(a, b)) tree_ = false;
    }
    for (const auto& a : arrows_) ++arrow_counts_[index_of(a.vertex)];
}

std::size_t PlumbingGraph::index_of(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                               [](const Vertex& x, VertexId id) { return x.id < id; });
    if (it == vertices_.end() || it->id != v) {
        throw std::invalid_argument("unknown vertex " + vid(v));
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool PlumbingGraph::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), Vertex{v, 0},
                              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
}

Weight PlumbingGraph::weight(VertexId v) const { return vertices_[index_of(v)].weight; }

std::size_t PlumbingGraph::degree(VertexId v) const { return degrees_[index_of(v)]; }

std::vector<VertexId> PlumbingGraph::neighbors(VertexId v) const {
    index_of(v);
    std::vector<VertexId> out;
    for (const auto& e : edges_) {
        if (e.first == v) out.push_back(e.second);
        if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t PlumbingGraph::arrows_at(VertexId v) const { return arrow_counts_[index_of(v)]; }

bool PlumbingGraph::is_tree() const { return tree_; }

bool PlumbingGraph::is_path() const {
    return tree_ && std::all_of(degrees_.begin(), degrees_.end(), [](std::size_t d) { return d <= 2; });
}

std::vector<VertexId> PlumbingGraph::path_order() const {
    if (!is_path()) {
        throw std::invalid_argument("graph is not a linear chain");
    }
    if (vertices_.size() == 1) return {vertices_.front().id};
    VertexId start = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (degrees_[i] == 1) {
            start = vertices_[i].id;
            break;
        }
    }
    std::vector<VertexId> order{start};
    VertexId prev = start;
    VertexId cur = neighbors(start).front();
    while (true) {
        order.push_back(cur);
        auto nb = neighbors(cur);
        auto next = std::find_if(nb.begin(), nb.end(), [prev](VertexId x) { return x != prev; });
        if (next == nb.end()) break;
        prev = cur;
        cur = *next;
    }
    return order;
}

std::ostream& operator<<(std::ostream& os, const PlumbingGraph& g) {
    os << "{";
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        const auto& v = g.vertices()[i];
        if (i) os << ", ";
        os << vid(v.id) << ":" << v.weight;
        if (auto n = g.arrows_at(v.id)) os << "+" << n << "->";
    }
    os << " |";
    for (const auto& e : g.edges()) os << " " << e.first << "-" << e.second;
    return os << "}";
}

PlumbingGraph linear_chain(std::span<const Weight> weights) {
    return linear_chain_with_arrows(weights, {});
}

PlumbingGraph linear_chain(std::initializer_list<Weight> weights) {
    return linear_chain(std::span<const Weight>(weights.begin(), weights.size()));
}

PlumbingGraph linear_chain_with_arrows(std::span<const Weight> weights,
                                       std::span<const std::int64_t> arrow_counts) {
    if (weights.empty()) {
        throw std::invalid_argument("linear_chain: empty weight sequence");
    }
    if (!arrow_counts.empty() && arrow_counts.size() != weights.size()) {
        throw std::invalid_argument("linear_chain: arrow counts do not match the weights");
    }
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const VertexId id = static_cast<VertexId>(i + 1);
        vertices.push_back({id, weights[i]});
        if (i > 0) edges.emplace_back(id - 1, id);
        if (!arrow_counts.empty()) {
            if (arrow_counts[i] < 0) {
                throw std::invalid_argument("linear_chain: negative arrow count");
            }
            for (std::int64_t j = 1; j <= arrow_counts[i]; ++j) {
                arrows.push_back({id, std::to_string(id) + "." + std::to_string(j)});
            }
        }
    }
    return PlumbingGraph(std::move(vertices), std::move(edges), std::move(arrows));
}

PlumbingGraph negate(const PlumbingGraph& g) {
    require_tree(g, "negate");
    std::vector<Vertex> vertices = g.vertices();
    for (auto& v : vertices) v.weight = -v.weight;
    return PlumbingGraph(std::move(vertices), g.edges(), g.arrows());
}

PlumbingGraph strip_arrows(const PlumbingGraph& g, StripMode mode) {
    std::vector<Vertex> vertices = g.vertices();
    if (mode == StripMode::Absorb) {
        for (auto& v : vertices) v.weight += static_cast<Weight>(g.arrows_at(v.id));
    }
    return PlumbingGraph(std::move(vertices), g.edges());
}

PlumbingGraph blow_down_once(const PlumbingGraph& g, VertexId v) {
    if (!g.has_vertex(v)) throw MoveError("blow_down: unknown vertex " + vid(v));
    require_tree(g, "blow_down");
    const Weight w = g.weight(v);
    if (w != 1 && w != -1) {
        throw MoveError("blow_down: " + vid(v) + " has weight " + std::to_string(w) + ", not +-1");
    }
    if (g.arrows_at(v) != 0) throw MoveError("blow_down: " + vid(v) + " carries an arrow");
    const auto nb = g.neighbors(v);
    if (nb.size() > 2) {
        throw MoveError("blow_down: " + vid(v) + " has degree " + std::to_string(nb.size()));
    }
    if (g.vertex_count() == 1) throw MoveError("blow_down: " + vid(v) + " is the last vertex");

    std::vector<Vertex> vertices;
    for (const auto& x : g.vertices()) {
        if (x.id == v) continue;
        Vertex y = x;
        if (std::find(nb.begin(), nb.end(), x.id) != nb.end()) y.weight -= w;
        vertices.push_back(y);
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (e.first != v && e.second != v) edges.push_back(e);
    }
    if (nb.size() == 2) edges.emplace_back(nb[0], nb[1]);
    return PlumbingGraph(std::move(vertices), std::move(edges), g.arrows());
}

PlumbingGraph absorb_zero_once(const PlumbingGraph& g, VertexId v) {
    if (!g.has_vertex(v)) throw MoveError("absorb_zero: unknown vertex " + vid(v));
    require_tree(g, "absorb_zero");
    if (g.weight(v) != 0) {
        throw MoveError("absorb_zero: " + vid(v) + " has weight " + std::to_string(g.weight(v)) +
                        ", not 0");
    }
    if (g.arrows_at(v) != 0) throw MoveError("absorb_zero: " + vid(v) + " carries an arrow");
    const auto nb = g.neighbors(v);
    if (nb.size() != 2) {
        throw MoveError("absorb_zero: " + vid(v) + " has degree " + std::to_string(nb.size()) +
                        ", not 2");
    }
    const VertexId keep = nb[0];
    const VertexId gone = nb[1];
    std::vector<Vertex> vertices;
    for (const auto& x : g.vertices()) {
        if (x.id == v || x.id == gone) continue;
        Vertex y = x;
        if (x.id == keep) y.weight = g.weight(keep) + g.weight(gone);
        vertices.push_back(y);
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (e.first == v || e.second == v) continue;
        VertexId a = e.first == gone ? keep : e.first;
        VertexId b = e.second == gone ? keep : e.second;
        edges.emplace_back(a, b);
    }
    std::vector<Arrow> arrows = g.arrows();
    for (auto& a : arrows) {
        if (a.vertex == gone) a.vertex = keep;
    }
    return PlumbingGraph(std::move(vertices), std::move(edges), std::move(arrows));
}

std::vector<Move> eligible_moves(const PlumbingGraph& g) {
    std::vector<Move> moves;
    if (!g.is_tree()) return moves;
    for (const auto& v : g.vertices()) {
        if ((v.weight == 1 || v.weight == -1) && g.vertex_count() > 1 && g.arrows_at(v.id) == 0 &&
            g.degree(v.id) <= 2) {
            moves.push_back({MoveKind::BlowDown, v.id});
        }
    }
    for (const auto& v : g.vertices()) {
        if (v.weight == 0 && g.arrows_at(v.id) == 0 && g.degree(v.id) == 2) {
            moves.push_back({MoveKind::AbsorbZero, v.id});
        }
    }
    return moves;
}

PlumbingGraph apply_move(const PlumbingGraph& g, const Move& m) {
    return m.kind == MoveKind::BlowDown ? blow_down_once(g, m.vertex) : absorb_zero_once(g, m.vertex);
}

PlumbingGraph reduce(const PlumbingGraph& g) {
    require_tree(g, "reduce");
    if (g.arrow_count() != 0) {
        throw std::invalid_argument("reduce: graph carries arrows; strip them first");
    }
    PlumbingGraph current = g;
    for (;;) {
        auto moves = eligible_moves(current);
        if (moves.empty()) return current;
        // Blow-downs precede absorptions in eligible_moves, so front() is the greedy choice.
        current = apply_move(current, moves.front());
    }
}

PlumbingGraph blow_down_ones(const PlumbingGraph& g) {
    require_tree(g, "blow_down_ones");
    if (g.arrow_count() != 0) {
        throw std::invalid_argument("blow_down_ones: graph carries arrows; strip them first");
    }
    PlumbingGraph current = g;
    for (;;) {
        auto moves = eligible_moves(current);
        auto it = std::find_if(moves.begin(), moves.end(), [&](const Move& m) {
            return m.kind == MoveKind::BlowDown && current.weight(m.vertex) == 1;
        });
        if (it == moves.end()) return current;
        current = blow_down_once(current, it->vertex);
    }
}

bool blows_down_to_zero(const PlumbingGraph& g) {
    PlumbingGraph r = blow_down_ones(g);
    return r.vertex_count() == 1 && r.vertices().front().weight == 0;
}

LensSpace::LensSpace(std::int64_t n, std::int64_t q) : n_(n), q_(q) {
    if (n < 1 || q < 0 || q >= n || std::gcd(n, q) != 1) {
        throw std::invalid_argument("invalid lens space L(" + std::to_string(n) + "," +
                                    std::to_string(q) + ")");
    }
}

LensSpace LensSpace::reversed() const { return n_ == 1 ? *this : LensSpace(n_, n_ - q_); }

std::ostream& operator<<(std::ostream& os, const LensSpace& l) {
    return os << "L(" << l.n() << "," << l.q() << ")";
}

bool oriented_homeomorphic(const LensSpace& a, const LensSpace& b) {
    if (a.n() != b.n()) return false;
    if (a.q() == b.q()) return true;
    const std::int64_t n = a.n();
    return (a.q() * b.q()) % n == 1 % n;
}

std::ostream& operator<<(std::ostream& os, const RecognitionResult& r) {
    if (const auto* l = std::get_if<LensSpace>(&r)) return os << *l;
    if (std::holds_alternative<SOneTimesSTwo>(r)) return os << "S1xS2";
    return os << "NotRecognized(" << std::get<NotRecognized>(r).reason << ")";
}

RecognitionResult recognize_lens(const PlumbingGraph& g) {
    if (g.arrow_count() != 0) return NotRecognized{"graph carries arrows"};
    if (!g.is_tree()) return NotRecognized{"graph is not a tree"};
    const PlumbingGraph r = reduce(g);
    if (!r.is_path()) return NotRecognized{"reduced graph is not a linear chain"};

    std::vector<Weight> w;
    for (VertexId v : r.path_order()) w.push_back(r.weight(v));
    if (w.size() == 1) {
        if (w[0] == 0) return SOneTimesSTwo{};
        if (w[0] == 1 || w[0] == -1) return LensSpace(1, 0);
    }
    const bool positive = std::all_of(w.begin(), w.end(), [](Weight x) { return x >= 2; });
    const bool negative = std::all_of(w.begin(), w.end(), [](Weight x) { return x <= -2; });
    if (!positive && !negative) return NotRecognized{"mixed weights after reduction"};

    std::vector<BigInt> entries;
    for (Weight x : w) entries.emplace_back(positive ? x : -x);
    // All entries >= 2, so the value is > 1 and no step divides by zero.
    const Fraction value = eval_chain(CFChain(std::move(entries))).value();
    const auto n = static_cast<std::int64_t>(value.numerator());
    const auto m = static_cast<std::int64_t>(value.denominator());
    // value = n/(n-q).
    LensSpace lens(n, n - m);
    return positive ? lens : lens.reversed();
}

bool graphs_equal(const PlumbingGraph& g, const PlumbingGraph& h) {
    auto signature = [](const PlumbingGraph& x) {
        std::vector<std::pair<Weight, std::size_t>> sig;
        for (VertexId v : x.path_order()) sig.emplace_back(x.weight(v), x.arrows_at(v));
        return sig;
    };
    const auto a = signature(g);
    const auto b = signature(h);
    return a == b || std::equal(a.begin(), a.end(), b.rbegin(), b.rend());
}

}  // namespace cqs
