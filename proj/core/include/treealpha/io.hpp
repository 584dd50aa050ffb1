#pragma once

#include <string>

#include "treealpha/decomposition.hpp"
#include "treealpha/geometry.hpp"
#include "treealpha/graph.hpp"
#include "treealpha/layered.hpp"
#include "treealpha/ptas.hpp"

namespace treealpha {

/// All writers emit canonical JSON: object keys sorted, compact separators,
/// rational weights as "p" or "p/q" strings.  Re-serializing a parsed
/// document reproduces it byte for byte.

std::string instance_to_json(const ObjectCollection& c);
ObjectCollection instance_from_json(const std::string& text);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string family_to_json(const SubgraphFamily& fam);
SubgraphFamily family_from_json(const std::string& text);

std::string td_to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const std::string& text);

std::string layering_to_json(const Layering& l);
Layering layering_from_json(const std::string& text);

std::string layered_to_json(const LayeredDecomposition& d);
LayeredDecomposition layered_from_json(const std::string& text);

std::string cover_to_json(const GeneralCover& c);
GeneralCover cover_from_json(const std::string& text);

std::string solution_to_json(const DpSolution& s);
DpSolution solution_from_json(const std::string& text);

std::string report_to_json(const PtasReport& r);
PtasReport report_from_json(const std::string& text);

/// Undirected DIMACS ("p edge n m" header, 1-based "e u v" lines).
std::string graph_to_dimacs(const Graph& g);
Graph graph_from_dimacs(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace treealpha
