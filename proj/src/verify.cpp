#include "cqs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cqs/chains.hpp"
#include "cqs/milnor.hpp"
#include "cqs/plumbing.hpp"
#include "cqs/quotient.hpp"

namespace cqs {

namespace {

class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    template <typename Describe>
    void check(bool ok, Describe&& describe) {
        ++result_.checked;
        if (!ok) {
            if (result_.failed == 0) result_.first_failure = describe();
            ++result_.failed;
        }
    }

    SuiteResult finish(std::chrono::steady_clock::time_point start) {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result_;
    }

private:
    SuiteResult result_;
};

template <typename T>
std::string str(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

void for_each_singularity(int max_n, const std::function<void(const QuotientSingularity&)>& fn) {
    for (std::int64_t n = 2; n <= max_n; ++n) {
        for (std::int64_t q = 1; q < n; ++q) {
            if (std::gcd(n, q) == 1) fn(QuotientSingularity(n, q));
        }
    }
}

// Calls fn on every sequence of the given length with entries in [lo, hi].
void for_each_box(std::size_t length, Weight lo, Weight hi,
                  const std::function<void(const std::vector<Weight>&)>& fn) {
    std::vector<Weight> w(length, lo);
    for (;;) {
        fn(w);
        std::size_t pos = length;
        while (pos > 0) {
            --pos;
            if (w[pos] < hi) {
                ++w[pos];
                break;
            }
            w[pos] = lo;
            if (pos == 0) return;
        }
    }
}

CFChain as_chain(const std::vector<Weight>& w) {
    return CFChain(std::vector<BigInt>(w.begin(), w.end()));
}

SuiteResult exponent_oracle(int max_n) {
    const auto start = std::chrono::steady_clock::now();
    Tally t("exponent_oracle");
    for_each_singularity(max_n, [&](const QuotientSingularity& x) {
        t.check(invariant_exponents(x) == hilbert_basis_oracle(x), [&] { return str(x); });
    });
    return t.finish(start);
}

SuiteResult zero_chain_equivalence(int max_n) {
    const auto start = std::chrono::steady_clock::now();
    Tally t("zero_chain_equivalence");
    const int longest = std::min(7, max_n);
    for (int len = 2; len <= longest; ++len) {
        for_each_box(static_cast<std::size_t>(len), 1, len, [&](const std::vector<Weight>& w) {
            t.check(represents_zero(as_chain(w)) == blows_down_to_zero(linear_chain(w)),
                    [&] { return as_chain(w).to_string(); });
        });
    }
    return t.finish(start);
}

SuiteResult catalan(int max_n) {
    const auto start = std::chrono::steady_clock::now();
    Tally t("catalan");
    const int longest = std::min(7, max_n);
    // C_0 = 1, C_{m+1} = sum C_i C_{m-i}.
    std::vector<std::uint64_t> cat{1};
    while (static_cast<int>(cat.size()) < longest) {
        std::uint64_t next = 0;
        for (std::size_t i = 0; i < cat.size(); ++i) next += cat[i] * cat[cat.size() - 1 - i];
        cat.push_back(next);
    }
    for (int s = 2; s <= longest; ++s) {
        const auto tight = count_zero_chains(s, s);
        const auto loose = count_zero_chains(s, s + 2);
        t.check(tight == cat[static_cast<std::size_t>(s - 1)] && tight == loose, [&] {
            return "s=" + std::to_string(s) + " count=" + std::to_string(tight) +
                   " count(bound+2)=" + std::to_string(loose);
        });
    }
    return t.finish(start);
}

SuiteResult lens_uniqueness(int max_n) {
    const auto start = std::chrono::steady_clock::now();
    Tally t("lens_uniqueness");
    for_each_singularity(max_n, [&](const QuotientSingularity& x) {
        const auto a = hj_data(x).to_ints();
        const RecognitionResult r = recognize_lens(linear_chain(std::vector<Weight>(a.begin(), a.end())));
        t.check(r == RecognitionResult(LensSpace(x.n(), x.q())), [&] { return str(x) + " -> " + str(r); });
    });
    // Every chain with entries in [2, 8], length <= 8 and numerator n <= max_n.
    // The numerator (continuant) grows with each entry and with the length, so
    // the depth-first scan stops as soon as it exceeds max_n.
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::vector<Weight>>> found;
    std::vector<Weight> w;
    std::function<void(std::int64_t, std::int64_t)> extend = [&](std::int64_t p_prev, std::int64_t p) {
        for (Weight x = 2; x <= 8 && w.size() < 8; ++x) {
            const std::int64_t next = x * p - p_prev;
            if (next > max_n) break;
            w.push_back(x);
            const RecognitionResult r = recognize_lens(linear_chain(w));
            const auto* l = std::get_if<LensSpace>(&r);
            t.check(l != nullptr && l->n() == next,
                    [&] { return as_chain(w).to_string() + " -> " + str(r); });
            if (l) found[{l->n(), l->q()}].push_back(w);
            extend(p, next);
            w.pop_back();
        }
    };
    extend(0, 1);
    for (const auto& [nq, chains] : found) {
        const auto expected = hj_data(QuotientSingularity(nq.first, nq.second)).to_ints();
        t.check(chains.size() == 1 &&
                    chains.front() == std::vector<Weight>(expected.begin(), expected.end()),
                [&, nq = nq] {
                    return "L(" + std::to_string(nq.first) + "," + std::to_string(nq.second) +
                           ") has " + std::to_string(chains.size()) + " chain(s)";
                });
    }
    return t.finish(start);
}

SuiteResult negation_duality(int max_n) {
    const auto start = std::chrono::steady_clock::now();
    Tally t("negation_duality");
    for_each_singularity(max_n, [&](const QuotientSingularity& x) {
        const auto a = hj_data(x).to_ints();
        const auto r = recognize_lens(negate(linear_chain(std::vector<Weight>(a.begin(), a.end()))));
        const QuotientSingularity d = dual(x);
        t.check(r == RecognitionResult(LensSpace(d.n(), d.q())), [&] { return str(x) + " -> " + str(r); });
    });
    return t.finish(start);
}

SuiteResult report_consistency(int max_n) {
    const auto start = std::chrono::steady_clock::now();
    Tally t("report_consistency");
    for_each_singularity(max_n, [&](const QuotientSingularity& x) {
        for (const auto& rep : all_reports(x)) {
            const auto& g = rep.graph_m;
            BigInt r = 0;
            for (std::size_t i = 0; i < rep.a.size(); ++i) r += rep.a[i] - rep.k.entries()[i];
            const bool ok =
                recognize_lens(strip_arrows(g, StripMode::Absorb)) == RecognitionResult(rep.boundary_link) &&
                rep.boundary_link == LensSpace(x.n(), x.q()) &&
                blows_down_to_zero(strip_arrows(g, StripMode::Delete)) &&
                static_cast<std::int64_t>(g.arrow_count()) == rep.r && BigInt(rep.r) == r &&
                rep.r >= 1 && rep.b2 == rep.r - 1 && rep.euler_characteristic == rep.r &&
                rep.euler_characteristic == 1 - 0 + rep.b2;
            t.check(ok, [&] { return str(x) + " k=" + rep.k.entries().to_string(); });
        }
    });
    return t.finish(start);
}

}  // namespace

std::size_t VerifySummary::passed_suites() const {
    return static_cast<std::size_t>(
        std::count_if(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; }));
}

std::size_t VerifySummary::failed_suites() const { return suites.size() - passed_suites(); }

VerifySummary verify(int max_n) {
    if (max_n < 0 || max_n > kMaxVerifyN) {
        throw std::invalid_argument("verify: maxN must be in [0, " + std::to_string(kMaxVerifyN) +
                                    "] (got " + std::to_string(max_n) + ")");
    }
    using Suite = SuiteResult (*)(int);
    const Suite suites[] = {exponent_oracle, zero_chain_equivalence, catalan,
                            lens_uniqueness, negation_duality,       report_consistency};
    std::vector<std::future<SuiteResult>> pending;
    for (Suite s : suites) pending.push_back(std::async(std::launch::async, s, max_n));
    VerifySummary summary;
    summary.max_n = max_n;
    for (auto& f : pending) summary.suites.push_back(f.get());
    return summary;
}

}  // namespace cqs
