#pragma once

#include <vector>

#include "tml/types.hpp"

namespace tml {

struct Constraint {
    Type lhs, rhs;
};

// Most general unifier of a constraint set. Throws UnifyMismatch,
// OccursCheckError or TopoMismatch when no unifier exists.
Substitution mgu(std::vector<Constraint> constraints);
Substitution mgu(const Type& lhs, const Type& rhs);

// Topology unifier: identical topologies need nothing, a variable binds
// to the other side, distinct base topologies fail. Topologies are
// non-recursive, so no occurs check is needed.
Substitution mgu_topo(const Topology& lhs, const Topology& rhs);

}  // namespace tml
