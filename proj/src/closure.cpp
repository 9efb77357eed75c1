#include "slcs/closure.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace slcs {

namespace {

void require_universe(const SpaceGraph& space, const PointSet& a) {
    if (a.universe() != space.point_count()) throw UniverseMismatch(space.point_count(), a.universe());
}

} // namespace

PointSet closure(const SpaceGraph& space, const PointSet& a, WorkCounter* work) {
    require_universe(space, a);
    PointSet out = a;
    std::size_t points = 0;
    std::size_t edges = 0;
    for (PointId x : a) {
        ++points;
        auto next = space.succ(x);
        edges += next.size();
        for (PointId y : next) out.insert(y);
    }
    if (work != nullptr) {
        work->points_visited += points;
        work->edges_traversed += edges;
    }
    return out;
}

PointSet interior(const SpaceGraph& space, const PointSet& a, WorkCounter* work) {
    require_universe(space, a);
    return closure(space, a.complement(), work).complement();
}

PointSet boundary(const SpaceGraph& space, const PointSet& a) {
    return closure(space, a) - interior(space, a);
}

PointSet boundary_minus(const SpaceGraph& space, const PointSet& a) {
    return a - interior(space, a);
}

PointSet boundary_plus(const SpaceGraph& space, const PointSet& a, WorkCounter* work) {
    return closure(space, a, work) - a;
}

bool is_closed(const SpaceGraph& space, const PointSet& a) {
    return closure(space, a) == a;
}

bool is_open(const SpaceGraph& space, const PointSet& a) {
    return interior(space, a) == a;
}

PointSet minimal_neighbourhood(const SpaceGraph& space, PointId x) {
    if (x >= space.point_count())
        throw std::out_of_range("point " + std::to_string(x) + " outside universe of size " +
                                std::to_string(space.point_count()));
    PointSet out = space.empty_set();
    out.insert(x);
    for (PointId y : space.pred(x)) out.insert(y);
    return out;
}

bool is_idempotent(const SpaceGraph& space) {
    // R= is transitive iff every two-step walk a -> b -> c with a != c is also an edge.
    const auto n = static_cast<PointId>(space.point_count());
    std::vector<PointId> mark(n, n);
    for (PointId a = 0; a < n; ++a) {
        mark[a] = a;
        for (PointId b : space.succ(a)) mark[b] = a;
        for (PointId b : space.succ(a))
            for (PointId c : space.succ(b))
                if (mark[c] != a) return false;
    }
    return true;
}

} // namespace slcs
