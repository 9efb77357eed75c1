#pragma once

// Deliberately broken copies of the backward until search, for checking that
// the test oracles notice faults.

#include <vector>

#include "slcs/closure.hpp"
#include "slcs/point_set.hpp"
#include "slcs/space_graph.hpp"

namespace slcs::testing {

enum class UntilMutation {
    NoPropagation,   // removed points never join the frontier
    UnfilteredStep,  // removed points join the frontier even when they satisfy psi
};

inline PointSet mutated_until(const SpaceGraph& space, PointSet phi_set, const PointSet& psi_set,
                              UntilMutation mutation) {
    std::vector<PointId> frontier = boundary_plus(space, phi_set | psi_set).members();
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        for (PointId y : space.pred(frontier[head])) {
            if (!phi_set.contains(y)) continue;
            phi_set.erase(y);
            if (mutation == UntilMutation::UnfilteredStep) frontier.push_back(y);
        }
    }
    return phi_set;
}

} // namespace slcs::testing
