#pragma once

#include <chrono>
#include <cstddef>

#include "slcs/formula.hpp"
#include "slcs/model.hpp"
#include "slcs/point_set.hpp"
#include "slcs/space_graph.hpp"

namespace slcs {

enum class UnknownAtomPolicy {
    Error,  // throw SemanticError
    Empty,  // the letter holds nowhere
};

struct CheckOptions {
    UnknownAtomPolicy unknown_atoms = UnknownAtomPolicy::Error;
};

/// Work done by one backward until search.
struct UntilWork {
    std::size_t frontier_insertions = 0;  // points ever placed on the frontier
    std::size_t frontier_edges = 0;       // predecessor edges scanned from the frontier
    std::size_t boundary_edges = 0;       // edges scanned while computing the initial frontier
};

struct CheckStats {
    std::size_t subformulas_evaluated = 0;
    std::size_t points_visited = 0;
    std::size_t edges_traversed = 0;
    std::size_t until_calls = 0;
    std::size_t max_until_frontier_insertions = 0;
    std::size_t max_until_frontier_edges = 0;
    std::chrono::nanoseconds wall_time{0};
};

struct CheckOutcome {
    PointSet satisfying;
    CheckStats stats;
};

/// Global model checking: the set of points satisfying `f`.
///
/// Derived operators are desugared first. The core tree is hash-consed so that
/// every distinct subformula is evaluated exactly once per call.
CheckOutcome check(const ClosureModel& model, const Formula& f, const CheckOptions& options = {});

/// Points satisfying `phi U psi`.
PointSet check_until(const ClosureModel& model, const Formula& phi, const Formula& psi,
                     const CheckOptions& options = {});

/// Until over already-evaluated operand sets.
///
/// Starting from the frontier of phi_set | psi_set, walks predecessors backwards and
/// removes from phi_set every point that can step into a bad point; removed points
/// outside psi_set become bad themselves. Each point joins the frontier at most once
/// and each edge is scanned at most once by the frontier loop.
PointSet until_sets(const SpaceGraph& space, PointSet phi_set, const PointSet& psi_set,
                    UntilWork* work = nullptr);

} // namespace slcs
