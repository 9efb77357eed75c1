#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "slcs/point_set.hpp"

namespace slcs {

using Edge = std::pair<PointId, PointId>;

/// A finite relation R over points {0, ..., n-1}, with both directions materialized.
///
/// Successor and predecessor lists are stored in compressed form. Parallel duplicate
/// edges are collapsed at construction; the surviving adjacency order follows the
/// first occurrence of each edge in the input. Immutable after construction.
class SpaceGraph {
public:
    SpaceGraph() = default;

    /// Throws std::out_of_range if an endpoint is >= point_count.
    SpaceGraph(std::size_t point_count, std::span<const Edge> edges);

    std::size_t point_count() const noexcept { return point_count_; }
    /// Number of distinct pairs in R.
    std::size_t edge_count() const noexcept { return succ_targets_.size(); }

    std::span<const PointId> succ(PointId x) const {
        return {succ_targets_.data() + succ_offsets_[x], succ_targets_.data() + succ_offsets_[x + 1]};
    }
    std::span<const PointId> pred(PointId x) const {
        return {pred_sources_.data() + pred_offsets_[x], pred_sources_.data() + pred_offsets_[x + 1]};
    }

    bool has_edge(PointId from, PointId to) const;

    /// All distinct edges, grouped by source in adjacency order.
    std::vector<Edge> edges() const;

    PointSet empty_set() const { return PointSet(point_count_); }
    PointSet full_set() const { return PointSet::full(point_count_); }

private:
    std::size_t point_count_ = 0;
    std::vector<std::size_t> succ_offsets_{0};
    std::vector<PointId> succ_targets_;
    std::vector<std::size_t> pred_offsets_{0};
    std::vector<PointId> pred_sources_;
};

} // namespace slcs
