#pragma once

#include <cstddef>

#include "slcs/point_set.hpp"
#include "slcs/space_graph.hpp"

namespace slcs {

/// Edge and point visits performed by a set operator, for work accounting.
struct WorkCounter {
    std::size_t points_visited = 0;
    std::size_t edges_traversed = 0;
};

/// C(A) = A plus every successor of a member of A.
PointSet closure(const SpaceGraph& space, const PointSet& a, WorkCounter* work = nullptr);

/// I(A) = complement of C(complement of A).
PointSet interior(const SpaceGraph& space, const PointSet& a, WorkCounter* work = nullptr);

/// B(A) = C(A) \ I(A).
PointSet boundary(const SpaceGraph& space, const PointSet& a);

/// Interior boundary: A \ I(A).
PointSet boundary_minus(const SpaceGraph& space, const PointSet& a);

/// Closure boundary (frontier): C(A) \ A.
PointSet boundary_plus(const SpaceGraph& space, const PointSet& a, WorkCounter* work = nullptr);

bool is_closed(const SpaceGraph& space, const PointSet& a);
bool is_open(const SpaceGraph& space, const PointSet& a);

/// {x} together with every point having an edge into x. Throws std::out_of_range for a bad x.
PointSet minimal_neighbourhood(const SpaceGraph& space, PointId x);

/// True iff the reflexive closure of R is transitive, which is exactly when C is idempotent.
bool is_idempotent(const SpaceGraph& space);

} // namespace slcs
