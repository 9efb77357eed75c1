#include "slcs/point_set.hpp"

#include <stdexcept>
#include <string>

namespace slcs {

PointSet::PointSet(std::size_t universe, std::initializer_list<PointId> members) : PointSet(universe) {
    for (PointId x : members) insert(x);
}

PointSet PointSet::full(std::size_t universe) {
    PointSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.clear_tail();
    return s;
}

PointSet PointSet::from_members(std::size_t universe, const std::vector<PointId>& members) {
    PointSet s(universe);
    for (PointId x : members) s.insert(x);
    return s;
}

std::size_t PointSet::count() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool PointSet::none() const noexcept {
    for (Word w : words_)
        if (w != 0) return false;
    return true;
}

void PointSet::insert(PointId x) {
    if (x >= universe_)
        throw std::out_of_range("point " + std::to_string(x) + " outside universe of size " +
                                std::to_string(universe_));
    words_[x / kWordBits] |= Word{1} << (x % kWordBits);
}

void PointSet::erase(PointId x) {
    if (x >= universe_)
        throw std::out_of_range("point " + std::to_string(x) + " outside universe of size " +
                                std::to_string(universe_));
    words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits));
}

PointSet PointSet::complement() const {
    PointSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.clear_tail();
    return s;
}

bool PointSet::is_subset_of(const PointSet& other) const {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
}

bool PointSet::intersects(const PointSet& other) const {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
}

PointSet& PointSet::operator|=(const PointSet& other) {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

std::vector<PointId> PointSet::members() const {
    std::vector<PointId> out;
    out.reserve(count());
    for (PointId x : *this) out.push_back(x);
    return out;
}

void PointSet::clear_tail() {
    const std::size_t used = universe_ % kWordBits;
    if (used != 0 && !words_.empty()) words_.back() &= (Word{1} << used) - 1;
}

} // namespace slcs
