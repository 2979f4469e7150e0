#pragma once

#include <string>
#include <vector>

#include "cyclegraph/gamma.hpp"
#include "cyclegraph/invariants.hpp"

namespace cyclegraph {

/// "Z<order>#<idx>" with idx counting equal-order vertices in canonical order.
std::vector<std::string> vertex_labels(const GammaGraph& gamma);

/// Plain undirected DOT: nodes declared with label attributes, one edge per line.
std::string render_dot(const GammaGraph& gamma, const std::string& graph_name = "gamma");

std::string render_text(const Group& g, const GammaGraph& gamma, const InvariantSummary& summary);

std::string render_json(const Group& g, const GammaGraph& gamma, const InvariantSummary& summary);

}  // namespace cyclegraph
