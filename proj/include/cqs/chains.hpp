#pragma once

#include <cstdint>
#include <vector>

#include "cqs/cfrac.hpp"
#include "cqs/quotient.hpp"

namespace cqs {

// A chain known to represent zero. Construct through make().
class ZeroChain {
public:
    // Throws std::invalid_argument unless represents_zero(entries).
    static ZeroChain make(CFChain entries);

    const CFChain& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    friend bool operator==(const ZeroChain&, const ZeroChain&) = default;
    friend bool operator<(const ZeroChain& a, const ZeroChain& b) { return a.entries_ < b.entries_; }

private:
    explicit ZeroChain(CFChain entries) : entries_(std::move(entries)) {}
    CFChain entries_;
};

// A zero chain bounded entrywise by the HJ data of a singularity; one per
// smoothing component.
struct ComponentChain {
    ZeroChain zero_chain;
    CFChain bound;
};

// True iff k and a have equal length, k <= a entrywise and k represents zero.
bool is_component_chain(const CFChain& k, const CFChain& a);

// Every zero chain k with 1 <= k_i <= a_i (a = hj_data(x)), lexicographic. The
// search is complete over the box prod [1, a_i] but prunes prefixes whose
// required tail value leaves (0, a_j]. For s = 1 the single component is [0].
std::vector<ComponentChain> enumerate_components(const QuotientSingularity& x);

inline constexpr int kMaxZeroChainLength = 9;

// Number of length-s positive chains representing zero with entries <= entry_bound
// (entry_bound = 0 means "use s"). Throws std::invalid_argument for s outside [1, 9].
std::uint64_t count_zero_chains(int s, int entry_bound = 0);

// Every positive zero chain of length s with entries <= entry_bound, lexicographic.
std::vector<CFChain> list_zero_chains(int s, int entry_bound = 0);

}  // namespace cqs
