#include "slcs/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "slcs/errors.hpp"

namespace slcs {

using nlohmann::json;

ClosureModel::ClosureModel(SpaceGraph space, Valuation valuation, std::vector<std::string> names)
    : space_(std::move(space)), valuation_(std::move(valuation)), names_(std::move(names)) {
    const std::size_t n = space_.point_count();
    if (names_.empty()) {
        names_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i));
    }
    if (names_.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " point names, got " +
                                    std::to_string(names_.size()));
    for (std::size_t i = 0; i < n; ++i) {
        if (!index_.emplace(names_[i], static_cast<PointId>(i)).second)
            throw std::invalid_argument("duplicate point name '" + names_[i] + "'");
    }
    for (const auto& [letter, set] : valuation_) {
        if (letter.empty()) throw std::invalid_argument("empty proposition letter");
        if (set.universe() != n) throw UniverseMismatch(n, set.universe());
    }
}

std::optional<PointId> ClosureModel::find(std::string_view name) const {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    return std::nullopt;
}

const PointSet* ClosureModel::letter(std::string_view name) const {
    auto it = valuation_.find(std::string(name));
    return it == valuation_.end() ? nullptr : &it->second;
}

bool ClosureModel::operator==(const ClosureModel& other) const {
    if (names_ != other.names_ || valuation_ != other.valuation_) return false;
    auto a = space_.edges();
    auto b = other.space_.edges();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

ClosureModel model_from_edges(std::size_t n, std::span<const Edge> edges,
                              const std::map<std::string, std::vector<PointId>>& valuation) {
    Valuation sets;
    for (const auto& [letter, members] : valuation) sets.emplace(letter, PointSet::from_members(n, members));
    return ClosureModel(SpaceGraph(n, edges), std::move(sets));
}

namespace {

// Rejects duplicate keys in any JSON object, which nlohmann would otherwise
// resolve silently by keeping the last value.
json parse_strict(std::string_view text) {
    std::vector<std::set<std::string>> open_objects;
    auto callback = [&](int, json::parse_event_t event, json& parsed) {
        switch (event) {
        case json::parse_event_t::object_start:
            open_objects.emplace_back();
            break;
        case json::parse_event_t::object_end:
            open_objects.pop_back();
            break;
        case json::parse_event_t::key: {
            const auto& key = parsed.get_ref<const std::string&>();
            if (!open_objects.back().insert(key).second) throw LoadError("duplicate key '" + key + "'");
            break;
        }
        default:
            break;
        }
        return true;
    };
    try {
        return json::parse(text.begin(), text.end(), callback);
    } catch (const json::exception& e) {
        throw LoadError(std::string("malformed JSON: ") + e.what());
    }
}

PointId lookup(const std::map<std::string, PointId>& index, const json& name, const char* context) {
    if (!name.is_string()) throw LoadError(std::string(context) + ": node names must be strings");
    const auto& s = name.get_ref<const std::string&>();
    auto it = index.find(s);
    if (it == index.end()) throw LoadError(std::string(context) + " references undeclared node '" + s + "'");
    return it->second;
}

} // namespace

ClosureModel load_model(std::string_view json_text) {
    const json doc = parse_strict(json_text);
    if (!doc.is_object()) throw LoadError("model must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "nodes" && key != "edges" && key != "symmetric" && key != "valuation")
            throw LoadError("unknown model field '" + key + "'");
    }

    std::vector<std::string> names;
    std::map<std::string, PointId> index;
    if (doc.contains("nodes")) {
        const auto& nodes = doc["nodes"];
        if (!nodes.is_array()) throw LoadError("'nodes' must be an array");
        for (const auto& node : nodes) {
            if (!node.is_string()) throw LoadError("node names must be strings");
            const auto& name = node.get_ref<const std::string&>();
            if (!index.emplace(name, static_cast<PointId>(names.size())).second)
                throw LoadError("duplicate node '" + name + "'");
            names.push_back(name);
        }
    }

    bool symmetric = false;
    if (doc.contains("symmetric")) {
        if (!doc["symmetric"].is_boolean()) throw LoadError("'symmetric' must be a boolean");
        symmetric = doc["symmetric"].get<bool>();
    }

    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        const auto& list = doc["edges"];
        if (!list.is_array()) throw LoadError("'edges' must be an array");
        for (const auto& e : list) {
            if (!e.is_array() || e.size() != 2) throw LoadError("each edge must be a [from, to] pair");
            const PointId from = lookup(index, e[0], "edge");
            const PointId to = lookup(index, e[1], "edge");
            edges.emplace_back(from, to);
            if (symmetric) edges.emplace_back(to, from);
        }
    }

    Valuation valuation;
    if (doc.contains("valuation")) {
        const auto& v = doc["valuation"];
        if (!v.is_object()) throw LoadError("'valuation' must be an object");
        for (const auto& [letter, members] : v.items()) {
            if (letter.empty()) throw LoadError("empty proposition letter");
            if (!members.is_array()) throw LoadError("valuation of '" + letter + "' must be an array");
            PointSet set(names.size());
            for (const auto& m : members) set.insert(lookup(index, m, "valuation"));
            valuation.emplace(letter, std::move(set));
        }
    }

    SpaceGraph space(names.size(), edges);
    return ClosureModel(std::move(space), std::move(valuation), std::move(names));
}

std::string save_model(const ClosureModel& model) {
    json doc;
    doc["nodes"] = model.names();
    json edges = json::array();
    for (const auto& [from, to] : model.space().edges())
        edges.push_back(json::array({model.name_of(from), model.name_of(to)}));
    doc["edges"] = std::move(edges);
    doc["symmetric"] = false;
    json valuation = json::object();
    for (const auto& [letter, set] : model.valuation()) {
        json members = json::array();
        for (PointId x : set) members.push_back(model.name_of(x));
        valuation[letter] = std::move(members);
    }
    doc["valuation"] = std::move(valuation);
    return doc.dump();
}

std::string save_result(const ResultSet& result, const ClosureModel& model) {
    if (result.members.universe() != model.point_count())
        throw UniverseMismatch(model.point_count(), result.members.universe());
    json doc;
    doc["formula"] = result.formula;
    json points = json::array();
    for (PointId x : result.members) points.push_back(model.name_of(x));
    doc["points"] = std::move(points);
    return doc.dump();
}

ResultSet load_result(std::string_view json_text, const ClosureModel& model) {
    const json doc = parse_strict(json_text);
    if (!doc.is_object() || !doc.contains("formula") || !doc["formula"].is_string() ||
        !doc.contains("points") || !doc["points"].is_array())
        throw LoadError("result must be {\"formula\": string, \"points\": [name...]}");
    ResultSet out{doc["formula"].get<std::string>(), PointSet(model.point_count())};
    for (const auto& p : doc["points"]) {
        if (!p.is_string()) throw LoadError("point names must be strings");
        auto id = model.find(p.get_ref<const std::string&>());
        if (!id) throw LoadError("result references unknown point '" + p.get<std::string>() + "'");
        out.members.insert(*id);
    }
    return out;
}

} // namespace slcs
