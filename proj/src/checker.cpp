#include "slcs/checker.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "slcs/closure.hpp"
#include "slcs/errors.hpp"

namespace slcs {

PointSet until_sets(const SpaceGraph& space, PointSet phi_set, const PointSet& psi_set, UntilWork* work) {
    if (phi_set.universe() != space.point_count()) throw UniverseMismatch(space.point_count(), phi_set.universe());
    if (psi_set.universe() != space.point_count()) throw UniverseMismatch(space.point_count(), psi_set.universe());

    WorkCounter boundary_work;
    const PointSet start = boundary_plus(space, phi_set | psi_set, &boundary_work);

    std::vector<PointId> frontier = start.members();
    std::size_t edges = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        auto incoming = space.pred(frontier[head]);
        edges += incoming.size();
        for (PointId y : incoming) {
            if (!phi_set.contains(y)) continue;
            phi_set.erase(y);
            if (!psi_set.contains(y)) frontier.push_back(y);
        }
    }

    if (work != nullptr) {
        work->frontier_insertions += frontier.size();
        work->frontier_edges += edges;
        work->boundary_edges += boundary_work.edges_traversed;
    }
    return phi_set;
}

namespace {

// Core formula flattened into a DAG; children precede parents.
struct CoreNode {
    Op op;
    std::string letter;
    int lhs = -1;
    int rhs = -1;
};

class Compiler {
public:
    int add(const Formula& f) {
        if (auto it = by_identity_.find(f.id()); it != by_identity_.end()) return it->second;
        int lhs = -1;
        int rhs = -1;
        if (arity(f.op()) >= 1) lhs = add(f.lhs());
        if (arity(f.op()) == 2) rhs = add(f.rhs());
        auto key = std::make_tuple(f.op(), f.letter(), lhs, rhs);
        auto [it, inserted] = by_structure_.try_emplace(key, static_cast<int>(nodes_.size()));
        if (inserted) nodes_.push_back({f.op(), f.letter(), lhs, rhs});
        by_identity_.emplace(f.id(), it->second);
        return it->second;
    }

    const std::vector<CoreNode>& nodes() const { return nodes_; }

private:
    std::vector<CoreNode> nodes_;
    std::map<std::tuple<Op, std::string, int, int>, int> by_structure_;
    std::unordered_map<const void*, int> by_identity_;
};

PointSet atom_set(const ClosureModel& model, const std::string& letter, const CheckOptions& options) {
    if (const PointSet* set = model.letter(letter)) return *set;
    if (options.unknown_atoms == UnknownAtomPolicy::Empty) return PointSet(model.point_count());
    throw SemanticError("unknown proposition letter '" + letter + "'");
}

} // namespace

CheckOutcome check(const ClosureModel& model, const Formula& f, const CheckOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const SpaceGraph& space = model.space();

    Compiler compiler;
    const int root = compiler.add(desugar(f));
    const auto& nodes = compiler.nodes();

    CheckStats stats;
    WorkCounter work;
    std::vector<PointSet> results(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const CoreNode& node = nodes[i];
        switch (node.op) {
        case Op::Top:
            results[i] = space.full_set();
            break;
        case Op::Atom:
            results[i] = atom_set(model, node.letter, options);
            break;
        case Op::Not:
            results[i] = results[node.lhs].complement();
            break;
        case Op::And:
            results[i] = results[node.lhs] & results[node.rhs];
            break;
        case Op::Near:
            results[i] = closure(space, results[node.lhs], &work);
            break;
        case Op::Until: {
            UntilWork until_work;
            results[i] = until_sets(space, results[node.lhs], results[node.rhs], &until_work);
            ++stats.until_calls;
            stats.max_until_frontier_insertions =
                std::max(stats.max_until_frontier_insertions, until_work.frontier_insertions);
            stats.max_until_frontier_edges = std::max(stats.max_until_frontier_edges, until_work.frontier_edges);
            work.points_visited += until_work.frontier_insertions;
            work.edges_traversed += until_work.frontier_edges + until_work.boundary_edges;
            break;
        }
        default:
            throw std::logic_error("derived constructor survived desugaring");
        }
    }

    stats.subformulas_evaluated = nodes.size();
    stats.points_visited = work.points_visited;
    stats.edges_traversed = work.edges_traversed;
    stats.wall_time = std::chrono::steady_clock::now() - started;
    return {std::move(results[static_cast<std::size_t>(root)]), stats};
}

PointSet check_until(const ClosureModel& model, const Formula& phi, const Formula& psi,
                     const CheckOptions& options) {
    return check(model, Formula::until(phi, psi), options).satisfying;
}

} // namespace slcs
