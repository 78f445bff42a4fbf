#pragma once

// Serialization for the command-line tool: ordered JSON (fixed key order) and
// undirected Graphviz DOT.

#include <string>

#include "json.hpp"

#include "cqs/milnor.hpp"
#include "cqs/plumbing.hpp"
#include "cqs/quotient.hpp"

namespace cqs {

using Json = nlohmann::ordered_json;

Json to_json(const CFChain& c);
Json to_json(const ExponentTable& t);
Json to_json(const LensSpace& l);
Json to_json(const RecognitionResult& r);
Json to_json(const PlumbingGraph& g);
Json to_json(const MilnorFibreReport& rep);
Json to_json(const HomotopyDescription& h);

// Weighted vertices become `v<id> [label="<weight>"]`; each arrow becomes an
// edge to a point-shaped node `arr_<label>` (dots in labels become '_').
// Output is a function of the graph value only.
std::string export_dot(const PlumbingGraph& g);

}  // namespace cqs
