#pragma once

#include "spanlab/graph.hpp"

#include <span>
#include <string>

namespace spanlab {

// Isomorphism certificate of the graph spanned by an edge list: two edge lists
// get the same certificate iff their spanned graphs are isomorphic. Uses colour
// refinement with individualisation, keeping the smallest leaf encoding.
// Intended for small graphs (a few dozen vertices).
std::string canonical_form(std::span<const Edge> edges);

}  // namespace spanlab
