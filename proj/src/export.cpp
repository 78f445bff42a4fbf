#include "cqs/export.hpp"

#include <limits>
#include <sstream>

namespace cqs {

Json to_json(const CFChain& c) {
    Json arr = Json::array();
    // Entries are bounded by n or by user input; anything wider goes out as a string.
    for (const auto& k : c.entries()) {
        if (k <= std::numeric_limits<long long>::max() && k >= std::numeric_limits<long long>::min()) {
            arr.push_back(static_cast<long long>(k));
        } else {
            arr.push_back(k.str());
        }
    }
    return arr;
}

Json to_json(const ExponentTable& t) {
    Json arr = Json::array();
    for (const auto& p : t) arr.push_back(Json::array({p.i, p.j}));
    return arr;
}

Json to_json(const LensSpace& l) {
    Json j;
    j["type"] = "lens";
    j["n"] = l.n();
    j["q"] = l.q();
    return j;
}

Json to_json(const RecognitionResult& r) {
    if (const auto* l = std::get_if<LensSpace>(&r)) return to_json(*l);
    Json j;
    if (std::holds_alternative<SOneTimesSTwo>(r)) {
        j["type"] = "s1xs2";
    } else {
        j["type"] = "not_recognized";
        j["reason"] = std::get<NotRecognized>(r).reason;
    }
    return j;
}

Json to_json(const PlumbingGraph& g) {
    Json j;
    Json vertices = Json::array();
    for (const auto& v : g.vertices()) {
        Json jv;
        jv["id"] = v.id;
        jv["weight"] = v.weight;
        vertices.push_back(std::move(jv));
    }
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
    Json arrows = Json::array();
    for (const auto& a : g.arrows()) {
        Json ja;
        ja["vertex"] = a.vertex;
        ja["label"] = a.label;
        arrows.push_back(std::move(ja));
    }
    j["vertices"] = std::move(vertices);
    j["edges"] = std::move(edges);
    j["arrows"] = std::move(arrows);
    return j;
}

Json to_json(const HomotopyDescription& h) {
    Json j;
    j["cells"] = Json::array({h.cells.dim0, h.cells.dim1, h.cells.dim2});
    j["euler_characteristic"] = h.euler_characteristic;
    j["statements"] = h.statements;
    return j;
}

Json to_json(const MilnorFibreReport& rep) {
    Json j;
    j["n"] = rep.singularity.n();
    j["q"] = rep.singularity.q();
    j["a"] = to_json(rep.a);
    j["k"] = to_json(rep.k.entries());
    j["r"] = rep.r;
    j["b2"] = rep.b2;
    j["euler_characteristic"] = rep.euler_characteristic;
    Json handles;
    handles["zero"] = rep.handles.zero_handles;
    handles["one"] = rep.handles.one_handles;
    handles["two"] = rep.handles.two_handles;
    j["handles"] = std::move(handles);
    j["boundary_link"] = to_json(rep.boundary_link);
    Json pi1;
    pi1["description"] = rep.pi1.description;
    pi1["order"] = rep.pi1.order ? Json(*rep.pi1.order) : Json("UNKNOWN");
    j["pi1"] = std::move(pi1);
    j["homotopy"] = to_json(homotopy_description(rep));
    j["graph_M"] = to_json(rep.graph_m);
    return j;
}

std::string export_dot(const PlumbingGraph& g) {
    auto arrow_node = [](const std::string& label) {
        std::string id = "arr_" + label;
        for (char& c : id) {
            if (c == '.') c = '_';
        }
        return id;
    };
    std::ostringstream os;
    os << "graph plumbing {\n";
    for (const auto& v : g.vertices()) {
        os << "  v" << v.id << " [label=\"" << v.weight << "\"];\n";
    }
    for (const auto& a : g.arrows()) {
        os << "  " << arrow_node(a.label) << " [shape=point];\n";
    }
    for (const auto& [a, b] : g.edges()) {
        os << "  v" << a << " -- v" << b << ";\n";
    }
    for (const auto& a : g.arrows()) {
        os << "  v" << a.vertex << " -- " << arrow_node(a.label) << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace cqs
