#include "slcs/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace slcs {

bool is_core_op(Op op) noexcept {
    switch (op) {
    case Op::Atom:
    case Op::Top:
    case Op::Not:
    case Op::And:
    case Op::Near:
    case Op::Until:
        return true;
    default:
        return false;
    }
}

int arity(Op op) noexcept {
    switch (op) {
    case Op::Atom:
    case Op::Top:
    case Op::Bot:
        return 0;
    case Op::And:
    case Op::Or:
    case Op::Until:
    case Op::Reach:
        return 2;
    default:
        return 1;
    }
}

Formula Formula::make(Op op, std::string letter, const Formula* lhs, const Formula* rhs) {
    auto node = std::make_shared<Node>();
    node->op = op;
    node->letter = std::move(letter);
    if (lhs != nullptr) node->lhs = lhs->node_;
    if (rhs != nullptr) node->rhs = rhs->node_;
    return Formula(std::move(node));
}

Formula Formula::atom(std::string letter) {
    if (letter.empty()) throw std::invalid_argument("proposition letter must be nonempty");
    return make(Op::Atom, std::move(letter), nullptr, nullptr);
}

Formula Formula::top() { return make(Op::Top, {}, nullptr, nullptr); }
Formula Formula::bot() { return make(Op::Bot, {}, nullptr, nullptr); }

Formula Formula::unary(Op op, Formula f) {
    if (arity(op) != 1) throw std::invalid_argument("operator is not unary");
    return make(op, {}, &f, nullptr);
}

Formula Formula::binary(Op op, Formula a, Formula b) {
    if (arity(op) != 2) throw std::invalid_argument("operator is not binary");
    return make(op, {}, &a, &b);
}

Formula Formula::negate(Formula f) { return unary(Op::Not, std::move(f)); }
Formula Formula::conj(Formula a, Formula b) { return binary(Op::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Op::Or, std::move(a), std::move(b)); }
Formula Formula::near(Formula f) { return unary(Op::Near, std::move(f)); }
Formula Formula::interior(Formula f) { return unary(Op::Interior, std::move(f)); }
Formula Formula::boundary(Formula f) { return unary(Op::Boundary, std::move(f)); }
Formula Formula::iboundary(Formula f) { return unary(Op::IBoundary, std::move(f)); }
Formula Formula::cboundary(Formula f) { return unary(Op::CBoundary, std::move(f)); }
Formula Formula::until(Formula a, Formula b) { return binary(Op::Until, std::move(a), std::move(b)); }
Formula Formula::reach(Formula a, Formula b) { return binary(Op::Reach, std::move(a), std::move(b)); }
Formula Formula::global(Formula f) { return unary(Op::Global, std::move(f)); }
Formula Formula::future(Formula f) { return unary(Op::Future, std::move(f)); }

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (op() != other.op() || letter() != other.letter()) return false;
    const int n = arity(op());
    if (n >= 1 && !(lhs() == other.lhs())) return false;
    if (n == 2 && !(rhs() == other.rhs())) return false;
    return true;
}

namespace {

class Desugarer {
public:
    Formula run(const Formula& f) {
        if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
        Formula out = rewrite(f);
        memo_.emplace(f.id(), out);
        return out;
    }

private:
    static Formula core_interior(const Formula& a) {
        return Formula::negate(Formula::near(Formula::negate(a)));
    }
    static Formula core_global(const Formula& a) {
        return Formula::until(a, Formula::negate(Formula::top()));
    }

    Formula rewrite(const Formula& f) {
        switch (f.op()) {
        case Op::Atom:
        case Op::Top:
            return f;
        case Op::Not:
        case Op::Near: {
            Formula a = run(f.lhs());
            return a.id() == f.lhs().id() ? f : Formula::unary(f.op(), a);
        }
        case Op::And:
        case Op::Until: {
            Formula a = run(f.lhs());
            Formula b = run(f.rhs());
            return a.id() == f.lhs().id() && b.id() == f.rhs().id() ? f : Formula::binary(f.op(), a, b);
        }
        case Op::Bot:
            return Formula::negate(Formula::top());
        case Op::Or:
            return Formula::negate(
                Formula::conj(Formula::negate(run(f.lhs())), Formula::negate(run(f.rhs()))));
        case Op::Interior:
            return core_interior(run(f.lhs()));
        case Op::Boundary: {
            Formula a = run(f.lhs());
            return Formula::conj(Formula::near(a), Formula::negate(core_interior(a)));
        }
        case Op::IBoundary: {
            Formula a = run(f.lhs());
            return Formula::conj(a, Formula::negate(core_interior(a)));
        }
        case Op::CBoundary: {
            Formula a = run(f.lhs());
            return Formula::conj(Formula::near(a), Formula::negate(a));
        }
        case Op::Reach:
            return Formula::negate(
                Formula::until(Formula::negate(run(f.rhs())), Formula::negate(run(f.lhs()))));
        case Op::Global:
            return core_global(run(f.lhs()));
        case Op::Future:
            return Formula::negate(core_global(Formula::negate(run(f.lhs()))));
        }
        throw std::logic_error("unhandled formula constructor");
    }

    std::unordered_map<const void*, Formula> memo_;
};

int precedence(Op op) {
    switch (op) {
    case Op::Until:
    case Op::Reach:
        return 0;
    case Op::Or:
        return 1;
    case Op::And:
        return 2;
    case Op::Atom:
    case Op::Top:
    case Op::Bot:
        return 4;
    default:
        return 3;
    }
}

const char* spelling(Op op) {
    switch (op) {
    case Op::Top: return "top";
    case Op::Bot: return "bot";
    case Op::Not: return "!";
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::Near: return "N";
    case Op::Interior: return "I";
    case Op::Boundary: return "B";
    case Op::IBoundary: return "Bi";
    case Op::CBoundary: return "Bp";
    case Op::Until: return "U";
    case Op::Reach: return "R";
    case Op::Global: return "G";
    case Op::Future: return "F";
    case Op::Atom: return "";
    }
    return "?";
}

void print(const Formula& f, int min_level, std::string& out) {
    const int level = precedence(f.op());
    const bool parens = level < min_level;
    if (parens) out += '(';
    switch (arity(f.op())) {
    case 0:
        out += f.op() == Op::Atom ? f.letter() : spelling(f.op());
        break;
    case 1:
        out += spelling(f.op());
        if (f.op() != Op::Not) out += ' ';
        print(f.lhs(), 3, out);
        break;
    default: {
        // U and R associate to the right; & and | to the left.
        const bool right_assoc = level == 0;
        print(f.lhs(), right_assoc ? level + 1 : level, out);
        out += ' ';
        out += spelling(f.op());
        out += ' ';
        print(f.rhs(), right_assoc ? level : level + 1, out);
        break;
    }
    }
    if (parens) out += ')';
}

} // namespace

Formula desugar(const Formula& f) {
    return Desugarer{}.run(f);
}

bool is_core(const Formula& f) {
    if (!is_core_op(f.op())) return false;
    const int n = arity(f.op());
    return (n < 1 || is_core(f.lhs())) && (n < 2 || is_core(f.rhs()));
}

std::size_t formula_size(const Formula& f) {
    if (!is_core_op(f.op()))
        throw std::invalid_argument("formula_size requires a desugared formula, found '" +
                                    std::string(spelling(f.op())) + "'");
    switch (arity(f.op())) {
    case 0: return 1;
    case 1: return 1 + formula_size(f.lhs());
    default: return 1 + formula_size(f.lhs()) + formula_size(f.rhs());
    }
}

std::size_t node_count(const Formula& f) {
    switch (arity(f.op())) {
    case 0: return 1;
    case 1: return 1 + node_count(f.lhs());
    default: return 1 + node_count(f.lhs()) + node_count(f.rhs());
    }
}

std::size_t depth(const Formula& f) {
    switch (arity(f.op())) {
    case 0: return 0;
    case 1: return 1 + depth(f.lhs());
    default: return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
    }
}

namespace {
void collect_atoms(const Formula& f, std::set<std::string>& out) {
    if (f.op() == Op::Atom) out.insert(f.letter());
    const int n = arity(f.op());
    if (n >= 1) collect_atoms(f.lhs(), out);
    if (n == 2) collect_atoms(f.rhs(), out);
}
} // namespace

std::set<std::string> atoms(const Formula& f) {
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

std::string to_string(const Formula& f) {
    std::string out;
    print(f, 0, out);
    return out;
}

} // namespace slcs
