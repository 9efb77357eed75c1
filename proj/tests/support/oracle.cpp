#include "oracle.hpp"

#include <deque>
#include <stdexcept>
#include <vector>

namespace slcs::oracle {

namespace {

using Bits = std::vector<bool>;

Bits to_bits(const PointSet& s) {
    Bits out(s.universe(), false);
    for (std::size_t i = 0; i < s.universe(); ++i) out[i] = s.contains(static_cast<PointId>(i));
    return out;
}

PointSet from_bits(const Bits& b) {
    PointSet out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i]) out.insert(static_cast<PointId>(i));
    return out;
}

// Forward search over walks starting at index 1 (successors of x). `step` decides,
// for a walk endpoint y at index >= 1, whether to stop with a verdict or continue.
enum class Visit { Continue, Stop, Found };

template <class StepFn>
bool search_from_successors(const SpaceGraph& space, PointId x, StepFn step) {
    const std::size_t n = space.point_count();
    Bits seen(n, false);
    std::deque<PointId> queue;
    for (PointId y : space.succ(x)) {
        if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
        }
    }
    while (!queue.empty()) {
        const PointId y = queue.front();
        queue.pop_front();
        switch (step(y)) {
        case Visit::Found:
            return true;
        case Visit::Stop:
            continue;
        case Visit::Continue:
            break;
        }
        for (PointId z : space.succ(y)) {
            if (!seen[z]) {
                seen[z] = true;
                queue.push_back(z);
            }
        }
    }
    return false;
}

Bits reachable_including(const SpaceGraph& space, PointId x) {
    Bits seen(space.point_count(), false);
    std::vector<PointId> stack{x};
    seen[x] = true;
    while (!stack.empty()) {
        const PointId y = stack.back();
        stack.pop_back();
        for (PointId z : space.succ(y)) {
            if (!seen[z]) {
                seen[z] = true;
                stack.push_back(z);
            }
        }
    }
    return seen;
}

} // namespace

PointSet until(const SpaceGraph& space, const PointSet& phi, const PointSet& psi) {
    const Bits in_phi = to_bits(phi);
    const Bits in_psi = to_bits(psi);
    Bits out(space.point_count(), false);
    for (PointId x = 0; x < space.point_count(); ++x) {
        if (!in_phi[x]) continue;
        const bool escapes = search_from_successors(space, x, [&](PointId y) {
            if (in_psi[y]) return Visit::Stop;
            if (!in_phi[y]) return Visit::Found;
            return Visit::Continue;
        });
        out[x] = !escapes;
    }
    return from_bits(out);
}

PointSet reach(const SpaceGraph& space, const PointSet& phi, const PointSet& psi) {
    const Bits in_phi = to_bits(phi);
    const Bits in_psi = to_bits(psi);
    Bits out(space.point_count(), false);
    for (PointId x = 0; x < space.point_count(); ++x) {
        if (in_psi[x]) {
            out[x] = true;
            continue;
        }
        out[x] = search_from_successors(space, x, [&](PointId y) {
            if (!in_phi[y]) return Visit::Stop;
            if (in_psi[y]) return Visit::Found;
            return Visit::Continue;
        });
    }
    return from_bits(out);
}

PointSet global(const SpaceGraph& space, const PointSet& phi) {
    const Bits in_phi = to_bits(phi);
    Bits out(space.point_count(), false);
    for (PointId x = 0; x < space.point_count(); ++x) {
        const Bits r = reachable_including(space, x);
        bool all = true;
        for (std::size_t y = 0; y < r.size() && all; ++y)
            if (r[y] && !in_phi[y]) all = false;
        out[x] = all;
    }
    return from_bits(out);
}

PointSet future(const SpaceGraph& space, const PointSet& phi) {
    const Bits in_phi = to_bits(phi);
    Bits out(space.point_count(), false);
    for (PointId x = 0; x < space.point_count(); ++x) {
        const Bits r = reachable_including(space, x);
        for (std::size_t y = 0; y < r.size(); ++y)
            if (r[y] && in_phi[y]) out[x] = true;
    }
    return from_bits(out);
}

PointSet until_by_definition(const SpaceGraph& space, const PointSet& phi, const PointSet& psi) {
    const std::vector<PointId> candidates = phi.members();
    if (candidates.size() > 20) throw std::invalid_argument("until_by_definition: phi set too large");
    const Bits in_psi = to_bits(psi);
    Bits out(space.point_count(), false);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << candidates.size()); ++mask) {
        Bits in_a(space.point_count(), false);
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if ((mask >> i) & 1U) in_a[candidates[i]] = true;
        bool frontier_ok = true;
        for (std::size_t i = 0; i < candidates.size() && frontier_ok; ++i) {
            if (!in_a[candidates[i]]) continue;
            for (PointId y : space.succ(candidates[i]))
                if (!in_a[y] && !in_psi[y]) frontier_ok = false;
        }
        if (!frontier_ok) continue;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (in_a[candidates[i]]) out[candidates[i]] = true;
    }
    return from_bits(out);
}

namespace {

// Points with at least one incoming edge from `sources`.
Bits has_pred_in(const SpaceGraph& space, const Bits& sources) {
    Bits out(space.point_count(), false);
    for (PointId a = 0; a < space.point_count(); ++a)
        if (sources[a])
            for (PointId x : space.succ(a)) out[x] = true;
    return out;
}

Bits negate(const Bits& b) {
    Bits out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = !b[i];
    return out;
}

Bits eval(const ClosureModel& model, const Formula& f) {
    const SpaceGraph& space = model.space();
    const std::size_t n = space.point_count();
    switch (f.op()) {
    case Op::Atom: {
        const PointSet* set = model.letter(f.letter());
        if (set == nullptr) throw std::invalid_argument("oracle: unknown letter " + f.letter());
        return to_bits(*set);
    }
    case Op::Top:
        return Bits(n, true);
    case Op::Bot:
        return Bits(n, false);
    case Op::Not:
        return negate(eval(model, f.lhs()));
    case Op::And:
    case Op::Or: {
        const Bits a = eval(model, f.lhs());
        const Bits b = eval(model, f.rhs());
        Bits out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = f.op() == Op::And ? (a[i] && b[i]) : (a[i] || b[i]);
        return out;
    }
    case Op::Near:
    case Op::Interior:
    case Op::Boundary:
    case Op::IBoundary:
    case Op::CBoundary: {
        const Bits s = eval(model, f.lhs());
        const Bits from_inside = has_pred_in(space, s);
        const Bits from_outside = has_pred_in(space, negate(s));
        Bits out(n);
        for (std::size_t x = 0; x < n; ++x) {
            const bool closure = s[x] || from_inside[x];
            const bool interior = s[x] && !from_outside[x];
            switch (f.op()) {
            case Op::Near: out[x] = closure; break;
            case Op::Interior: out[x] = interior; break;
            case Op::Boundary: out[x] = closure && !interior; break;
            case Op::IBoundary: out[x] = s[x] && from_outside[x]; break;
            default: out[x] = !s[x] && from_inside[x]; break;
            }
        }
        return out;
    }
    case Op::Until:
        return to_bits(until(space, from_bits(eval(model, f.lhs())), from_bits(eval(model, f.rhs()))));
    case Op::Reach:
        return to_bits(reach(space, from_bits(eval(model, f.lhs())), from_bits(eval(model, f.rhs()))));
    case Op::Global:
        return to_bits(global(space, from_bits(eval(model, f.lhs()))));
    case Op::Future:
        return to_bits(future(space, from_bits(eval(model, f.lhs()))));
    }
    throw std::logic_error("oracle: unhandled constructor");
}

} // namespace

PointSet satisfies(const ClosureModel& model, const Formula& f) {
    return from_bits(eval(model, f));
}

bool check_forward_theorem(const SpaceGraph& space, const PointSet& phi, const PointSet& psi,
                           const PointSet& reported) {
    const std::size_t n = space.point_count();
    const Bits in_phi = to_bits(phi);
    const Bits in_psi = to_bits(psi);
    for (PointId x : reported) {
        if (!in_phi[x]) return false;  // the length-0 walk already leaves phi
        // layer[y]: some walk of the current length from x ends at y with psi absent at
        // every index >= 1 so far.
        Bits layer(n, false);
        layer[x] = true;
        for (std::size_t length = 1; length <= n; ++length) {
            Bits next(n, false);
            bool any = false;
            for (PointId y = 0; y < n; ++y) {
                if (!layer[y]) continue;
                for (PointId z : space.succ(y)) {
                    if (in_psi[z]) continue;
                    if (!in_phi[z]) return false;
                    next[z] = true;
                    any = true;
                }
            }
            if (!any) break;
            layer = std::move(next);
        }
    }
    return true;
}

} // namespace slcs::oracle
