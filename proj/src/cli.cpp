#include "cqs/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cqs/chains.hpp"
#include "cqs/export.hpp"
#include "cqs/milnor.hpp"
#include "cqs/verify.hpp"

namespace cqs::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void report_error(std::ostream& err, const char* kind, const std::string& reason) {
    Json j;
    j["error"] = kind;
    j["reason"] = reason;
    err << j.dump() << '\n';
}

ZeroChain parse_component(const QuotientSingularity& x, const std::vector<long long>& k) {
    if (k.empty()) throw UsageError("--k needs at least one entry");
    CFChain chain = CFChain::from_ints(k);
    if (!is_component_chain(chain, hj_data(x))) {
        throw std::invalid_argument("k=" + chain.to_string() + " is not a component chain of X(" +
                                    std::to_string(x.n()) + "," + std::to_string(x.q()) +
                                    "), a=" + hj_data(x).to_string());
    }
    return ZeroChain::make(std::move(chain));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Smoothing components and Milnor fibres of cyclic quotient singularities", "cqs"};
    app.require_subcommand(1);

    std::string output_path;
    app.add_option("--output,-o", output_path, "Write the result to this file instead of stdout");

    std::int64_t n = 0;
    std::int64_t q = 0;
    std::vector<long long> k;
    std::vector<long long> weights;
    std::string format = "json";
    int max_n = 10;

    auto add_nq = [&](CLI::App* sub) {
        sub->add_option("n", n, "Group order n >= 2")->required();
        sub->add_option("q", q, "Weight q, 0 < q < n, coprime to n")->required();
    };

    auto* hj = app.add_subcommand("hj", "Continued fraction a = n/(n-q) and embedding dimension");
    add_nq(hj);
    auto* inv = app.add_subcommand("invariants", "Exponents (i_k, j_k) of the invariant monomials");
    add_nq(inv);
    auto* comps = app.add_subcommand("components", "Chains k <= a representing zero");
    add_nq(comps);
    auto* report = app.add_subcommand("report", "Milnor fibre report(s)");
    add_nq(report);
    report->add_option("--k,-k", k, "Single component chain (default: all components)");
    auto* graph = app.add_subcommand("graph", "Plumbing graph of M for one component");
    add_nq(graph);
    graph->add_option("--k,-k", k, "Component chain")->required();
    graph->add_option("--format,-f", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    auto* red = app.add_subcommand("reduce", "Reduce a linear chain by blow-downs and 0-absorption");
    red->add_option("weights", weights, "Chain weights (put negative weights after --)")->required();
    auto* rec = app.add_subcommand("recognize", "Recognize the lens space of a linear chain");
    rec->add_option("weights", weights, "Chain weights (put negative weights after --)")->required();
    auto* ver = app.add_subcommand("verify", "Run the cross-module self-check");
    ver->add_option("maxN", max_n, "Largest n to check (0..60)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report_error(err, "usage", e.what());
        return kExitUsage;
    }

    std::string text;
    int code = kExitOk;
    try {
        if (hj->parsed()) {
            QuotientSingularity x(n, q);
            Json j;
            j["n"] = n;
            j["q"] = q;
            j["a"] = to_json(hj_data(x));
            j["e"] = embedding_dimension(x);
            text = j.dump();
        } else if (inv->parsed()) {
            QuotientSingularity x(n, q);
            Json j;
            j["n"] = n;
            j["q"] = q;
            j["e"] = embedding_dimension(x);
            j["exponents"] = to_json(invariant_exponents(x));
            text = j.dump();
        } else if (comps->parsed()) {
            QuotientSingularity x(n, q);
            Json list = Json::array();
            for (const auto& c : enumerate_components(x)) list.push_back(to_json(c.zero_chain.entries()));
            Json j;
            j["components"] = std::move(list);
            text = j.dump();
        } else if (report->parsed()) {
            QuotientSingularity x(n, q);
            if (report->count("--k") > 0) {
                text = to_json(milnor_report(x, parse_component(x, k))).dump();
            } else {
                Json list = Json::array();
                for (const auto& rep : all_reports(x)) list.push_back(to_json(rep));
                Json j;
                j["reports"] = std::move(list);
                text = j.dump();
            }
        } else if (graph->parsed()) {
            QuotientSingularity x(n, q);
            const PlumbingGraph g = milnor_link_graph(hj_data(x), parse_component(x, k));
            if (format == "dot") {
                text = export_dot(g);
            } else {
                text = to_json(g).dump();
            }
        } else if (red->parsed()) {
            const std::vector<Weight> w(weights.begin(), weights.end());
            text = to_json(reduce(linear_chain(w))).dump();
        } else if (rec->parsed()) {
            const std::vector<Weight> w(weights.begin(), weights.end());
            text = to_json(recognize_lens(linear_chain(w))).dump();
        } else if (ver->parsed()) {
            const VerifySummary summary = verify(max_n);
            Json suites = Json::array();
            for (const auto& s : summary.suites) {
                Json js;
                js["name"] = s.name;
                js["checked"] = s.checked;
                js["failed"] = s.failed;
                js["passed"] = s.failed == 0;
                if (s.failed) js["first_failure"] = s.first_failure;
                suites.push_back(std::move(js));
            }
            Json j;
            j["max_n"] = summary.max_n;
            j["suites"] = std::move(suites);
            j["passed"] = summary.passed_suites();
            j["failed"] = summary.failed_suites();
            text = j.dump();
            if (!summary.ok()) code = kExitValidation;
        }
    } catch (const UsageError& e) {
        report_error(err, "usage", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        report_error(err, "validation", e.what());
        return kExitValidation;
    }

    if (!text.empty() && text.back() != '\n') text.push_back('\n');
    if (!output_path.empty()) {
        std::ofstream file(output_path, std::ios::binary);
        if (!file || !(file << text)) {
            report_error(err, "io", "cannot write " + output_path);
            return kExitValidation;
        }
    } else {
        out << text;
    }
    return code;
}

}  // namespace cqs::cli
