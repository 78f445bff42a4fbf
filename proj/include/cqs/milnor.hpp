#pragma once

// Per-component description of the Milnor fibre V of a smoothing of X(n,q).
//
// V is an annulus x disk (one 0-handle and one 1-handle) with r 2-handles
// attached, r = sum (a_i - k_i). The 2-handles are attached along the framed
// boundary tori of M, whose plumbing graph is the chain k with a_i - k_i arrows
// on vertex i. Consequences: V has a CW structure with one 0-cell, one 1-cell
// and r 2-cells, pi_1 is finite cyclic, b_2 = r - 1 and chi = r.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqs/chains.hpp"
#include "cqs/plumbing.hpp"
#include "cqs/quotient.hpp"

namespace cqs {

struct HandleCounts {
    std::int64_t zero_handles = 1;
    std::int64_t one_handles = 1;
    std::int64_t two_handles = 0;
    friend bool operator==(const HandleCounts&, const HandleCounts&) = default;
};

struct FundamentalGroup {
    std::string description = "finite cyclic";
    // Not determined by the construction; always empty.
    std::optional<std::int64_t> order;
};

struct MilnorFibreReport {
    QuotientSingularity singularity;
    CFChain a;
    ZeroChain k;
    std::int64_t r;
    std::int64_t b2;
    std::int64_t euler_characteristic;
    HandleCounts handles;
    LensSpace boundary_link;
    PlumbingGraph graph_m;
    FundamentalGroup pi1;
};

struct CellCounts {
    std::int64_t dim0 = 1;
    std::int64_t dim1 = 1;
    std::int64_t dim2 = 0;
    friend bool operator==(const CellCounts&, const CellCounts&) = default;
};

struct HomotopyDescription {
    CellCounts cells;
    std::int64_t euler_characteristic;
    std::vector<std::string> statements;
};

// Chain k with a_i - k_i arrows on vertex i, labeled "<i>.<ordinal>".
// Throws std::invalid_argument unless is_component_chain(k, a); throws
// std::logic_error if a structural postcondition fails.
PlumbingGraph milnor_link_graph(const CFChain& a, const ZeroChain& k);

// Throws std::invalid_argument if k is not a component chain of x.
MilnorFibreReport milnor_report(const QuotientSingularity& x, const ZeroChain& k);

// One report per component, in enumeration (lexicographic) order.
std::vector<MilnorFibreReport> all_reports(const QuotientSingularity& x);

HomotopyDescription homotopy_description(const MilnorFibreReport& rep);

}  // namespace cqs
