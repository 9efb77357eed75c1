#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "slcs/errors.hpp"

namespace slcs {

using PointId = std::uint32_t;

/// A subset of a fixed universe {0, ..., n-1}, stored as a dense bit vector.
///
/// Boolean algebra runs word-at-a-time; iteration visits members only. Binary
/// operations require both operands to share the same universe size and throw
/// UniverseMismatch otherwise. Bits beyond `n` in the last word are always zero.
class PointSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = PointId;
        using difference_type = std::ptrdiff_t;
        using pointer = const PointId*;
        using reference = PointId;

        const_iterator() = default;
        const_iterator(const PointSet* set, std::size_t word) : set_(set), word_(word) {
            if (set_ != nullptr && word_ < set_->words_.size()) {
                current_ = set_->words_[word_];
                skip_empty();
            }
        }

        PointId operator*() const {
            return static_cast<PointId>(word_ * kWordBits + std::countr_zero(current_));
        }
        const_iterator& operator++() {
            current_ &= current_ - 1;
            skip_empty();
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& other) const {
            return word_ == other.word_ && current_ == other.current_;
        }

    private:
        void skip_empty() {
            while (current_ == 0) {
                if (++word_ >= set_->words_.size()) {
                    word_ = set_->words_.size();
                    return;
                }
                current_ = set_->words_[word_];
            }
        }

        const PointSet* set_ = nullptr;
        std::size_t word_ = 0;
        Word current_ = 0;
    };

    PointSet() = default;
    explicit PointSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}
    PointSet(std::size_t universe, std::initializer_list<PointId> members);

    static PointSet empty(std::size_t universe) { return PointSet(universe); }
    static PointSet full(std::size_t universe);
    static PointSet from_members(std::size_t universe, const std::vector<PointId>& members);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t count() const noexcept;
    bool none() const noexcept;
    bool any() const noexcept { return !none(); }

    bool contains(PointId x) const noexcept {
        return x < universe_ && ((words_[x / kWordBits] >> (x % kWordBits)) & 1U) != 0;
    }
    /// Throws std::out_of_range when x >= universe().
    void insert(PointId x);
    void erase(PointId x);

    PointSet complement() const;
    bool is_subset_of(const PointSet& other) const;
    bool intersects(const PointSet& other) const;

    PointSet& operator|=(const PointSet& other);
    PointSet& operator&=(const PointSet& other);
    PointSet& operator-=(const PointSet& other);

    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

    bool operator==(const PointSet& other) const = default;

    std::vector<PointId> members() const;

    const_iterator begin() const { return const_iterator(this, 0); }
    const_iterator end() const { return const_iterator(this, words_.size()); }

    std::size_t word_count() const noexcept { return words_.size(); }

private:
    static std::size_t word_count(std::size_t universe) {
        return (universe + kWordBits - 1) / kWordBits;
    }
    void require_same_universe(const PointSet& other) const {
        if (other.universe_ != universe_) throw UniverseMismatch(universe_, other.universe_);
    }
    void clear_tail();

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

} // namespace slcs
