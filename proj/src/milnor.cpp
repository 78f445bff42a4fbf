#include "cqs/milnor.hpp"

#include <stdexcept>

namespace cqs {

PlumbingGraph milnor_link_graph(const CFChain& a, const ZeroChain& k) {
    if (!is_component_chain(k.entries(), a)) {
        throw std::invalid_argument("chain " + k.entries().to_string() +
                                    " is not a component chain for " + a.to_string());
    }
    const std::vector<long long> kv = k.entries().to_ints();
    const std::vector<long long> av = a.to_ints();
    std::vector<Weight> weights(kv.begin(), kv.end());
    std::vector<std::int64_t> arrows(kv.size());
    for (std::size_t i = 0; i < kv.size(); ++i) {
        arrows[i] = av[i] - kv[i];
        if (kv[i] + arrows[i] < 2) {
            throw std::logic_error("milnor_link_graph: vertex " + std::to_string(i + 1) +
                                   " has k_i + f_i < 2");
        }
    }
    PlumbingGraph g = linear_chain_with_arrows(weights, arrows);

    const std::vector<Weight> a_weights(av.begin(), av.end());
    if (strip_arrows(g, StripMode::Absorb) != linear_chain(a_weights)) {
        throw std::logic_error("milnor_link_graph: absorbing arrows does not give the chain a");
    }
    if (!blows_down_to_zero(strip_arrows(g, StripMode::Delete))) {
        throw std::logic_error("milnor_link_graph: arrowless graph does not blow down to 0");
    }
    return g;
}

MilnorFibreReport milnor_report(const QuotientSingularity& x, const ZeroChain& k) {
    const CFChain a = hj_data(x);
    if (!is_component_chain(k.entries(), a)) {
        throw std::invalid_argument("chain " + k.entries().to_string() +
                                    " is not a component chain of X(" + std::to_string(x.n()) +
                                    "," + std::to_string(x.q()) + "), a = " + a.to_string());
    }
    BigInt r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] - k.entries()[i];
    const auto rr = static_cast<std::int64_t>(r);
    return MilnorFibreReport{
        .singularity = x,
        .a = a,
        .k = k,
        .r = rr,
        .b2 = rr - 1,
        .euler_characteristic = rr,
        .handles = HandleCounts{1, 1, rr},
        .boundary_link = LensSpace(x.n(), x.q()),
        .graph_m = milnor_link_graph(a, k),
        .pi1 = FundamentalGroup{},
    };
}

std::vector<MilnorFibreReport> all_reports(const QuotientSingularity& x) {
    std::vector<MilnorFibreReport> out;
    for (const auto& c : enumerate_components(x)) {
        out.push_back(milnor_report(x, c.zero_chain));
    }
    return out;
}

HomotopyDescription homotopy_description(const MilnorFibreReport& rep) {
    const std::int64_t r = rep.handles.two_handles;
    return HomotopyDescription{
        .cells = CellCounts{1, 1, r},
        .euler_characteristic = 1 - 1 + r,
        .statements =
            {
                "A = annulus x disk: one 0-handle and one 1-handle",
                "B = " + std::to_string(r) + " disjoint 2-handle(s), one per framed boundary torus of M",
                "CW model: 1-skeleton S^1 with " + std::to_string(r) + " 2-cell(s) attached",
                "pi_1 finite cyclic (order not determined), b_2 = " + std::to_string(r - 1),
            },
    };
}

}  // namespace cqs
