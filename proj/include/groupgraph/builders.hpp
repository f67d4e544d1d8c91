#pragma once

#include "groupgraph/graph.hpp"
#include "groupgraph/group.hpp"

namespace groupgraph {

// All four graphs use vertex i for group element i.

// x ~ y iff xy = yx.
SimpleGraph commuting_graph(const FiniteGroup& g);
// x ~ y iff gcd(o(x), o(y)) = 1.
SimpleGraph coprime_graph(const FiniteGroup& g);
// x ~ y iff o(x) + o(y) > |G| (strict).
SimpleGraph order_sum_graph(const FiniteGroup& g);
// x ~ y iff y != x^-1.
SimpleGraph non_inverse_graph(const FiniteGroup& g);

SimpleGraph build_graph(const FiniteGroup& g, GraphKind kind);

}  // namespace groupgraph
