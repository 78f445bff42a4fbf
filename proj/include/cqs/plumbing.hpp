#pragma once

// Plumbing graphs of genus-0 Waldhausen manifolds: vertices weighted by the
// Euler number of an S^1-bundle over a punctured sphere, unsigned edges for
// plumbing, and labeled arrows for framed boundary tori.
//
// Weights use the positive convention in which a lens space has a chain with
// all weights >= 2. Blowing down a +1 vertex lowers its neighbours by one; a -1
// vertex raises them by one.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cqs {

using VertexId = int;
using Weight = std::int64_t;

struct Vertex {
    VertexId id;
    Weight weight;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Arrow {
    VertexId vertex;
    std::string label;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Raised when a calculus move is applied where its preconditions fail.
class MoveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PlumbingGraph {
public:
    // Validates ids, endpoints, self-loops, duplicate edges and label
    // uniqueness. Cycles are allowed at construction; tree-only operations reject them.
    PlumbingGraph(std::vector<Vertex> vertices, std::vector<std::pair<VertexId, VertexId>> edges,
                  std::vector<Arrow> arrows = {});

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    // Normalized (smaller id first) and sorted.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }
    // Sorted by (vertex, label).
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }

    bool has_vertex(VertexId v) const;
    Weight weight(VertexId v) const;
    std::size_t degree(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;  // ascending
    std::size_t arrows_at(VertexId v) const;

    bool is_tree() const;
    // Tree in which every vertex has degree <= 2.
    bool is_path() const;
    // Vertex ids along the path, starting at the end with the smaller id.
    // Throws std::invalid_argument if the graph is not a path.
    std::vector<VertexId> path_order() const;

    friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

private:
    std::size_t index_of(VertexId v) const;

    std::vector<Vertex> vertices_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<Arrow> arrows_;
    // Derived at construction, aligned with vertices_.
    std::vector<std::size_t> degrees_;
    std::vector<std::size_t> arrow_counts_;
    bool tree_ = false;
};

std::ostream& operator<<(std::ostream& os, const PlumbingGraph& g);

// Path v1 - v2 - ... - vk (ids 1..k) without arrows. Throws on an empty sequence.
PlumbingGraph linear_chain(std::span<const Weight> weights);
PlumbingGraph linear_chain(std::initializer_list<Weight> weights);

// Same path with arrow_counts[i] arrows on vertex i+1, labeled "<i+1>.<ordinal>".
PlumbingGraph linear_chain_with_arrows(std::span<const Weight> weights,
                                       std::span<const std::int64_t> arrow_counts);

// Orientation reversal: all weights negated. Throws std::invalid_argument on cycles.
PlumbingGraph negate(const PlumbingGraph& g);

enum class StripMode {
    Delete,  // drop the arrows
    Absorb,  // drop the arrows and add their count to the vertex weight
};

PlumbingGraph strip_arrows(const PlumbingGraph& g, StripMode mode);

// Removes a +-1 vertex of degree <= 2 without arrows. Throws MoveError naming
// the failed condition.
PlumbingGraph blow_down_once(const PlumbingGraph& g, VertexId v);

// Merges u - 0 - w into a single vertex of weight w(u) + w(w), which keeps the
// smaller of the two ids. Throws MoveError naming the failed condition.
PlumbingGraph absorb_zero_once(const PlumbingGraph& g, VertexId v);

enum class MoveKind { BlowDown, AbsorbZero };

struct Move {
    MoveKind kind;
    VertexId vertex;
    friend bool operator==(const Move&, const Move&) = default;
};

// All moves applicable to g, blow-downs first, each group by ascending id.
std::vector<Move> eligible_moves(const PlumbingGraph& g);
PlumbingGraph apply_move(const PlumbingGraph& g, const Move& m);

// Greedy fixed point: lowest-id blow-down while one exists, else lowest-id
// zero absorption. Requires an arrowless tree (std::invalid_argument otherwise).
PlumbingGraph reduce(const PlumbingGraph& g);

// Greedy lowest-id blow-downs of +1 vertices only, until none is eligible.
// Requires an arrowless tree.
PlumbingGraph blow_down_ones(const PlumbingGraph& g);

// blow_down_ones(g) is a single vertex of weight 0. Only +1 vertices are blown
// down: with -1 blow-downs or 0-absorption allowed, chains such as
// [2,1,1,1,1,2] also collapse to 0 (see represents_zero).
bool blows_down_to_zero(const PlumbingGraph& g);

// Oriented lens space L(n,q); (1,0) is S^3.
class LensSpace {
public:
    LensSpace(std::int64_t n, std::int64_t q);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t q() const noexcept { return q_; }

    // -L(n,q) = L(n, n-q).
    LensSpace reversed() const;

    friend bool operator==(const LensSpace&, const LensSpace&) = default;

private:
    std::int64_t n_;
    std::int64_t q_;
};

std::ostream& operator<<(std::ostream& os, const LensSpace& l);

// Orientation-preserving homeomorphism: same n and q' = q^{+-1} mod n.
bool oriented_homeomorphic(const LensSpace& a, const LensSpace& b);

struct SOneTimesSTwo {
    friend bool operator==(SOneTimesSTwo, SOneTimesSTwo) { return true; }
};

struct NotRecognized {
    std::string reason;
    friend bool operator==(const NotRecognized&, const NotRecognized&) = default;
};

using RecognitionResult = std::variant<LensSpace, SOneTimesSTwo, NotRecognized>;

std::ostream& operator<<(std::ostream& os, const RecognitionResult& r);

// Reduces, then reads the path from its smaller-id end:
//   all weights >= 2        -> L(n, q) with [w_1..w_k] = n/(n-q)
//   all weights <= -2       -> L(n, n-q) with [-w_1..-w_k] = n/(n-q)
//   single vertex 0         -> S^1 x S^2
//   single vertex +-1       -> L(1, 0)
// and NotRecognized otherwise (arrows, cycles, branching or mixed weights).
RecognitionResult recognize_lens(const PlumbingGraph& g);

// Equality of chains as weighted paths with arrow multiplicities, up to
// reversal. Arrow labels are ignored. Throws std::invalid_argument unless both are paths.
bool graphs_equal(const PlumbingGraph& g, const PlumbingGraph& h);

}  // namespace cqs
