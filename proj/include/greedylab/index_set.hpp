// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GREEDYLAB_INDEX_SET_HPP
#define GREEDYLAB_INDEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace greedylab {

/// Hard cap on the ambient dimension. Enumeration cost, not storage,
/// is the binding constraint everywhere below.
inline constexpr int kMaxDim = 16;

/// A finite set of 1-based indices in {1..kMaxDim}, stored as a bitmask.
/// Bit i of the mask corresponds to index i+1.
class IndexSet {
public:
    IndexSet() = default;

    static IndexSet from_mask(std::uint32_t mask) {
        IndexSet s;
        s.mask_ = mask;
        return s;
    }

    static IndexSet of(std::initializer_list<int> indices);
    static IndexSet of(const std::vector<int>& indices);

    /// {1..n}
    static IndexSet full(int n);

    std::uint32_t mask() const { return mask_; }
    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }

    bool contains(int n) const { return n >= 1 && n <= kMaxDim && (mask_ >> (n - 1)) & 1u; }

    /// Smallest / largest member; 0 on the empty set.
    int min() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }
    int max() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

    IndexSet with(int n) const { return from_mask(mask_ | (1u << (n - 1))); }
    IndexSet without(int n) const { return from_mask(mask_ & ~(1u << (n - 1))); }

    friend IndexSet operator|(IndexSet a, IndexSet b) { return from_mask(a.mask_ | b.mask_); }
    friend IndexSet operator&(IndexSet a, IndexSet b) { return from_mask(a.mask_ & b.mask_); }
    IndexSet setminus(IndexSet b) const { return from_mask(mask_ & ~b.mask_); }

    bool disjoint_with(IndexSet b) const { return (mask_ & b.mask_) == 0; }
    bool subset_of(IndexSet b) const { return (mask_ & ~b.mask_) == 0; }

    /// The order relation A < B: max A < min B. Vacuously true if either is empty.
    bool entirely_before(IndexSet b) const {
        return empty() || b.empty() || max() < b.min();
    }

    bool operator==(const IndexSet&) const = default;

    std::vector<int> indices() const;

    /// "{1 3 4}" (space separated so it survives CSV untouched)
    std::string to_string() const;

private:
    std::uint32_t mask_ = 0;
};

/// Calls fn(i) for every 1-based index i in the set, ascending.
template <typename Fn>
inline void for_each_index(IndexSet s, Fn&& fn) {
    std::uint32_t m = s.mask();
    while (m != 0) {
        int bit = std::countr_zero(m);
        fn(bit + 1);
        m &= m - 1;
    }
}

} // namespace greedylab

#endif
