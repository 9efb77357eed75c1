#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>

namespace slcs {

/// Formula constructors. The first six form the core logic; the rest are surface
/// forms that `desugar` rewrites into the core.
enum class Op {
    // core
    Atom,
    Top,
    Not,
    And,
    Near,   // closure modality
    Until,
    // derived
    Bot,
    Or,
    Interior,
    Boundary,
    IBoundary,  // interior boundary
    CBoundary,  // closure boundary
    Reach,      // dual of until
    Global,
    Future,
};

bool is_core_op(Op op) noexcept;
int arity(Op op) noexcept;

/// Immutable formula tree with shared subterms. Copying is cheap.
class Formula {
public:
    static Formula atom(std::string letter);
    static Formula top();
    static Formula bot();
    static Formula negate(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula near(Formula f);
    static Formula interior(Formula f);
    static Formula boundary(Formula f);
    static Formula iboundary(Formula f);
    static Formula cboundary(Formula f);
    static Formula until(Formula a, Formula b);
    static Formula reach(Formula a, Formula b);
    static Formula global(Formula f);
    static Formula future(Formula f);

    static Formula unary(Op op, Formula f);
    static Formula binary(Op op, Formula a, Formula b);

    Op op() const noexcept { return node_->op; }
    /// Proposition letter; empty unless op() == Op::Atom.
    const std::string& letter() const noexcept { return node_->letter; }
    Formula lhs() const { return Formula(node_->lhs); }
    Formula rhs() const { return Formula(node_->rhs); }

    /// Identity of the shared node; equal ids imply structural equality.
    const void* id() const noexcept { return node_.get(); }

    /// Structural equality.
    bool operator==(const Formula& other) const;

private:
    struct Node {
        Op op;
        std::string letter;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula make(Op op, std::string letter, const Formula* lhs, const Formula* rhs);

    std::shared_ptr<const Node> node_;
};

/// Rewrites every derived constructor into core ones. Idempotent.
Formula desugar(const Formula& f);

bool is_core(const Formula& f);

/// size(top) = size(p) = 1, unary = 1 + child, binary = 1 + both children.
/// Throws std::invalid_argument when f contains a derived constructor.
std::size_t formula_size(const Formula& f);

/// Number of nodes in the tree, counting every constructor (core or derived).
std::size_t node_count(const Formula& f);
std::size_t depth(const Formula& f);

std::set<std::string> atoms(const Formula& f);

/// Concrete syntax accepted by `parse`; parse(to_string(f)) == f.
std::string to_string(const Formula& f);

} // namespace slcs
