#include "slcs/space_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slcs {

namespace {

// Counting-sort style CSR build; keeps the input order of each row.
void build_rows(std::size_t n, std::span<const Edge> edges, bool by_source,
                std::vector<std::size_t>& offsets, std::vector<PointId>& targets) {
    offsets.assign(n + 1, 0);
    for (const auto& [from, to] : edges) ++offsets[(by_source ? from : to) + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    targets.resize(edges.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [from, to] : edges) {
        const PointId row = by_source ? from : to;
        targets[cursor[row]++] = by_source ? to : from;
    }
}

} // namespace

SpaceGraph::SpaceGraph(std::size_t point_count, std::span<const Edge> edges) : point_count_(point_count) {
    for (const auto& [from, to] : edges) {
        if (from >= point_count || to >= point_count)
            throw std::out_of_range("edge (" + std::to_string(from) + ", " + std::to_string(to) +
                                    ") outside universe of size " + std::to_string(point_count));
    }

    // Collapse duplicates, keeping first occurrences in input order so that both
    // successor and predecessor rows reflect the caller's edge order.
    const bool already_unique =
        std::adjacent_find(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return !(a < b); }) ==
        edges.end();
    if (already_unique) {
        build_rows(point_count, edges, true, succ_offsets_, succ_targets_);
        build_rows(point_count, edges, false, pred_offsets_, pred_sources_);
        return;
    }

    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    std::vector<bool> keep(edges.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i)
        keep[order[i]] = i == 0 || edges[order[i]] != edges[order[i - 1]];

    std::vector<Edge> unique;
    unique.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (keep[i]) unique.push_back(edges[i]);

    build_rows(point_count, unique, true, succ_offsets_, succ_targets_);
    build_rows(point_count, unique, false, pred_offsets_, pred_sources_);
}

bool SpaceGraph::has_edge(PointId from, PointId to) const {
    if (from >= point_count_ || to >= point_count_) return false;
    auto row = succ(from);
    return std::find(row.begin(), row.end(), to) != row.end();
}

std::vector<Edge> SpaceGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (PointId x = 0; x < point_count_; ++x)
        for (PointId y : succ(x)) out.emplace_back(x, y);
    return out;
}

} // namespace slcs
