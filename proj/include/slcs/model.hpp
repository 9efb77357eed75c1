#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slcs/point_set.hpp"
#include "slcs/space_graph.hpp"

namespace slcs {

using Valuation = std::map<std::string, PointSet>;

/// A space together with the sets where each proposition letter holds.
///
/// Every point carries a display name (defaulting to its decimal id); names are
/// unique and are what the JSON formats use to refer to points.
class ClosureModel {
public:
    ClosureModel() = default;

    /// Throws UniverseMismatch when a valuation set is over the wrong universe and
    /// std::invalid_argument for a bad name list.
    ClosureModel(SpaceGraph space, Valuation valuation, std::vector<std::string> names = {});

    const SpaceGraph& space() const noexcept { return space_; }
    const Valuation& valuation() const noexcept { return valuation_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::size_t point_count() const noexcept { return space_.point_count(); }
    const std::string& name_of(PointId x) const { return names_.at(x); }
    std::optional<PointId> find(std::string_view name) const;

    /// nullptr when the letter is not in the valuation.
    const PointSet* letter(std::string_view name) const;

    /// Same names, same edge set, same valuation.
    bool operator==(const ClosureModel& other) const;

private:
    SpaceGraph space_;
    Valuation valuation_;
    std::vector<std::string> names_;
    std::map<std::string, PointId, std::less<>> index_;
};

/// Builds a model over points 0..n-1. Throws std::out_of_range for bad endpoints.
ClosureModel model_from_edges(std::size_t n, std::span<const Edge> edges,
                              const std::map<std::string, std::vector<PointId>>& valuation);

/// Parses the model JSON format:
///
///     {"nodes": [name...], "edges": [[from, to]...], "symmetric": bool,
///      "valuation": {letter: [name...]}}
///
/// `symmetric` (default false) mirrors every edge. Throws LoadError.
ClosureModel load_model(std::string_view json_text);

/// Serializes with sorted keys and every directed edge listed explicitly.
std::string save_model(const ClosureModel& model);

/// Points satisfying a formula, paired with the formula's source text.
struct ResultSet {
    std::string formula;
    PointSet members;

    bool operator==(const ResultSet&) const = default;
};

/// `{"formula":"...","points":[name...]}` with points in id order.
std::string save_result(const ResultSet& result, const ClosureModel& model);
ResultSet load_result(std::string_view json_text, const ClosureModel& model);

} // namespace slcs
