#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "diamfam/set_mask.hpp"

namespace diamfam {

/// A duplicate-free family of subsets of [n].
///
/// Members are held as raw masks in strictly ascending numeric order, so
/// family equality is positional equality of the sorted sequences and
/// membership is a binary search.
class SetFamily {
   public:
    /// The empty family over [n].
    explicit SetFamily(GroundSize n) : n_(n.value()) {}

    /// Builds a family from masks in any order. Duplicates are rejected when
    /// `reject_duplicates` is set (the IO readers' contract) and silently
    /// merged otherwise (set-union semantics for builders).
    [[nodiscard]] static SetFamily from_masks(GroundSize n, std::vector<std::uint64_t> masks,
                                              bool reject_duplicates = false);

    [[nodiscard]] static SetFamily of(GroundSize n, std::initializer_list<std::initializer_list<int>> members);

    [[nodiscard]] int ground_size() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return masks_.size(); }
    [[nodiscard]] bool empty() const noexcept { return masks_.empty(); }

    [[nodiscard]] SetMask member(std::size_t i) const { return SetMask(GroundSize(n_), masks_.at(i)); }

    /// Raw sorted masks; bit i-1 encodes element i.
    [[nodiscard]] std::span<const std::uint64_t> masks() const noexcept { return masks_; }

    [[nodiscard]] bool contains(SetMask m) const;
    [[nodiscard]] bool contains_bits(std::uint64_t bits) const;

    /// True iff every member of this family is a member of `other`.
    [[nodiscard]] bool subfamily_of(const SetFamily& other) const;

    /// Adds a member; no-op if already present. Families stay sorted.
    void insert(SetMask m);
    void insert_bits(std::uint64_t bits);

    friend bool operator==(const SetFamily& a, const SetFamily& b) noexcept {
        return a.n_ == b.n_ && a.masks_ == b.masks_;
    }
    friend bool operator!=(const SetFamily& a, const SetFamily& b) noexcept { return !(a == b); }

   private:
    int n_;
    std::vector<std::uint64_t> masks_;
};

/// Pattern term for restricted subfamilies: one coordinate, tagged present or
/// absent. Present coordinates are removed from the matching members.
struct RestrictionTerm {
    int coordinate = 0;
    bool present = false;
};

/// Max pairwise Hamming distance; 0 for the empty family and singletons.
[[nodiscard]] int diameter(const SetFamily& f);

/// Max |F ∪ F'| over ordered pairs (F = F' included); 0 for the empty family.
/// The family is s-union iff the result is at most s.
[[nodiscard]] int max_union(const SetFamily& f);

/// F + S = {F + S : F ∈ f}: size and diameter preserved.
[[nodiscard]] SetFamily translate(const SetFamily& f, SetMask s);

/// Restricted subfamily for one or two coordinate conditions.
///
/// An absent term keeps the members avoiding the coordinate; a present term
/// keeps the members containing it and strips the coordinate from each. The
/// ground size is unchanged. Duplicate coordinates are a usage error.
[[nodiscard]] SetFamily restrict(const SetFamily& f, std::span<const RestrictionTerm> terms);
[[nodiscard]] SetFamily restrict(const SetFamily& f, RestrictionTerm a);
[[nodiscard]] SetFamily restrict(const SetFamily& f, RestrictionTerm a, RestrictionTerm b);

/// Members of size exactly k.
[[nodiscard]] SetFamily slice(const SetFamily& f, int k);

/// Every ordered pair of members meets in at least t elements; vacuously true
/// for the empty family.
[[nodiscard]] bool is_t_intersecting(const SetFamily& f, int t);

/// |F ∩ G| ≥ 1 for all cross pairs; vacuously true if either family is empty.
[[nodiscard]] bool is_cross_intersecting(const SetFamily& f, const SetFamily& g);

/// Downward closed under taking subsets.
[[nodiscard]] bool is_complex(const SetFamily& f);

}  // namespace diamfam
