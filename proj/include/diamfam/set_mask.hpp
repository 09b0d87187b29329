#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace diamfam {

/// Ground-set size for subsets of [n] = {1, ..., n}.
///
/// Capped at 64 so that any subset fits in one machine word; element i is
/// stored in bit i-1.
class GroundSize {
   public:
    explicit GroundSize(int n) : n_(n) {
        if (n < 1 || n > 64) {
            throw std::invalid_argument("ground-set size must be in [1, 64], got " + std::to_string(n));
        }
    }

    [[nodiscard]] int value() const noexcept { return n_; }

    /// Mask with all n low bits set.
    [[nodiscard]] std::uint64_t full_bits() const noexcept {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    friend bool operator==(GroundSize a, GroundSize b) noexcept { return a.n_ == b.n_; }
    friend bool operator!=(GroundSize a, GroundSize b) noexcept { return a.n_ != b.n_; }

   private:
    int n_;
};

/// One subset of [n] as a fixed-width bit vector.
///
/// Element i (1-based) is present iff bit i-1 is set. The ground size travels
/// with the mask; binary operations reject mismatched ground sizes.
class SetMask {
   public:
    SetMask() : bits_(0), n_(1) {}

    SetMask(GroundSize n, std::uint64_t bits) : bits_(bits), n_(static_cast<std::uint8_t>(n.value())) {
        if ((bits & ~n.full_bits()) != 0) {
            throw std::invalid_argument("set mask has bits above the ground-set size");
        }
    }

    [[nodiscard]] static SetMask empty_set(GroundSize n) { return SetMask(n, 0); }

    [[nodiscard]] static SetMask full_set(GroundSize n) { return SetMask(n, n.full_bits()); }

    /// Builds {elems...}; elements are 1-based and must lie in [1, n].
    [[nodiscard]] static SetMask of(GroundSize n, std::initializer_list<int> elems) {
        SetMask m = empty_set(n);
        for (int e : elems) m = m.with(e);
        return m;
    }

    [[nodiscard]] static SetMask of(GroundSize n, const std::vector<int>& elems) {
        SetMask m = empty_set(n);
        for (int e : elems) m = m.with(e);
        return m;
    }

    [[nodiscard]] std::uint64_t bits() const noexcept { return bits_; }
    [[nodiscard]] int ground_size() const noexcept { return n_; }
    [[nodiscard]] int size() const noexcept { return std::popcount(bits_); }
    [[nodiscard]] bool empty() const noexcept { return bits_ == 0; }

    [[nodiscard]] bool contains(int element) const {
        check_element(element);
        return (bits_ >> (element - 1)) & 1U;
    }

    [[nodiscard]] SetMask with(int element) const {
        check_element(element);
        return unchecked(n_, bits_ | (std::uint64_t{1} << (element - 1)));
    }

    [[nodiscard]] SetMask without(int element) const {
        check_element(element);
        return unchecked(n_, bits_ & ~(std::uint64_t{1} << (element - 1)));
    }

    /// Elements in ascending order, 1-based.
    [[nodiscard]] std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            out.push_back(std::countr_zero(b) + 1);
        }
        return out;
    }

    friend bool operator==(SetMask a, SetMask b) noexcept { return a.n_ == b.n_ && a.bits_ == b.bits_; }
    friend bool operator!=(SetMask a, SetMask b) noexcept { return !(a == b); }

   private:
    friend SetMask symmetric_difference(SetMask a, SetMask b);
    friend int distance(SetMask a, SetMask b);
    friend SetMask set_union(SetMask a, SetMask b);
    friend SetMask set_intersection(SetMask a, SetMask b);
    friend SetMask set_difference(SetMask a, SetMask b);
    friend SetMask complement(SetMask a);
    friend class SetFamily;

    static SetMask unchecked(std::uint8_t n, std::uint64_t bits) {
        SetMask m;
        m.bits_ = bits;
        m.n_ = n;
        return m;
    }

    void check_element(int element) const {
        if (element < 1 || element > n_) {
            throw std::out_of_range("element " + std::to_string(element) + " outside [1, " + std::to_string(int(n_)) + "]");
        }
    }

    static void check_same_ground(SetMask a, SetMask b) {
        if (a.n_ != b.n_) {
            throw std::invalid_argument("mismatched ground sizes (" + std::to_string(int(a.n_)) + " vs " + std::to_string(int(b.n_)) + ")");
        }
    }

    std::uint64_t bits_;
    std::uint8_t n_;
};

/// A + B = (A \ B) ∪ (B \ A). Commutative; A + A = ∅; A + ∅ = A.
[[nodiscard]] inline SetMask symmetric_difference(SetMask a, SetMask b) {
    SetMask::check_same_ground(a, b);
    return SetMask::unchecked(a.n_, a.bits_ ^ b.bits_);
}

/// Hamming distance d(A, B) = |A + B|.
[[nodiscard]] inline int distance(SetMask a, SetMask b) {
    SetMask::check_same_ground(a, b);
    return std::popcount(a.bits_ ^ b.bits_);
}

[[nodiscard]] inline SetMask set_union(SetMask a, SetMask b) {
    SetMask::check_same_ground(a, b);
    return SetMask::unchecked(a.n_, a.bits_ | b.bits_);
}

[[nodiscard]] inline SetMask set_intersection(SetMask a, SetMask b) {
    SetMask::check_same_ground(a, b);
    return SetMask::unchecked(a.n_, a.bits_ & b.bits_);
}

[[nodiscard]] inline SetMask set_difference(SetMask a, SetMask b) {
    SetMask::check_same_ground(a, b);
    return SetMask::unchecked(a.n_, a.bits_ & ~b.bits_);
}

[[nodiscard]] inline SetMask complement(SetMask a) {
    return SetMask::unchecked(a.n_, ~a.bits_ & GroundSize(a.n_).full_bits());
}

/// "{1,3,4}" rendering, elements ascending; "{}" for the empty set.
[[nodiscard]] std::string to_string(SetMask m);

}  // namespace diamfam
