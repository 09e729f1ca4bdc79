#pragma once

#include <string>
#include <string_view>

#include "hopfgraph/multigraph.hpp"

namespace hopfgraph {

class GraphSum;
class BivarPoly;
class PolyInK;
class QSymElement;

/// "n=4; edges=0-1,0-2,3-3" (loops as v-v, empty edge list allowed).
std::string format_text(const Multigraph& g);

/// Accepts a named family (K5, C6, P4, star3, E7), the text format above,
/// or the JSON form {"n": int, "edges": [[u,v],...]}.
Multigraph parse_graph(std::string_view spec);

// JSON serializers (deterministic term order).
std::string graph_to_json(const Multigraph& g);
std::string graphsum_to_json(const GraphSum& s);
std::string bivar_to_json(const BivarPoly& p);
std::string polyk_to_json(const PolyInK& p);
std::string qsym_to_json(const QSymElement& q);

}  // namespace hopfgraph
