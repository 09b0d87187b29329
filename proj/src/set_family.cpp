#include "diamfam/set_family.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace diamfam {

std::string to_string(SetMask m) {
    std::string out = "{";
    bool first = true;
    for (int e : m.elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    out += "}";
    return out;
}

SetFamily SetFamily::from_masks(GroundSize n, std::vector<std::uint64_t> masks, bool reject_duplicates) {
    const std::uint64_t full = n.full_bits();
    for (std::uint64_t m : masks) {
        if ((m & ~full) != 0) {
            throw std::invalid_argument("family member has bits above the ground-set size");
        }
    }
    std::sort(masks.begin(), masks.end());
    auto dup = std::adjacent_find(masks.begin(), masks.end());
    if (dup != masks.end()) {
        if (reject_duplicates) {
            throw std::invalid_argument("duplicate family member " + to_string(SetMask(n, *dup)));
        }
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    }
    SetFamily f{n};
    f.masks_ = std::move(masks);
    return f;
}

SetFamily SetFamily::of(GroundSize n, std::initializer_list<std::initializer_list<int>> members) {
    std::vector<std::uint64_t> masks;
    masks.reserve(members.size());
    for (const auto& elems : members) {
        masks.push_back(SetMask::of(n, elems).bits());
    }
    return from_masks(n, std::move(masks));
}

bool SetFamily::contains(SetMask m) const {
    if (m.ground_size() != n_) {
        throw std::invalid_argument("mismatched ground sizes");
    }
    return contains_bits(m.bits());
}

bool SetFamily::contains_bits(std::uint64_t bits) const {
    return std::binary_search(masks_.begin(), masks_.end(), bits);
}

bool SetFamily::subfamily_of(const SetFamily& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("mismatched ground sizes");
    }
    return std::includes(other.masks_.begin(), other.masks_.end(), masks_.begin(), masks_.end());
}

void SetFamily::insert(SetMask m) {
    if (m.ground_size() != n_) {
        throw std::invalid_argument("mismatched ground sizes");
    }
    insert_bits(m.bits());
}

void SetFamily::insert_bits(std::uint64_t bits) {
    auto it = std::lower_bound(masks_.begin(), masks_.end(), bits);
    if (it == masks_.end() || *it != bits) {
        masks_.insert(it, bits);
    }
}

int diameter(const SetFamily& f) {
    int best = 0;
    const auto ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            best = std::max(best, std::popcount(ms[i] ^ ms[j]));
        }
    }
    return best;
}

int max_union(const SetFamily& f) {
    int best = 0;
    const auto ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i; j < ms.size(); ++j) {
            best = std::max(best, std::popcount(ms[i] | ms[j]));
        }
    }
    return best;
}

SetFamily translate(const SetFamily& f, SetMask s) {
    if (s.ground_size() != f.ground_size()) {
        throw std::invalid_argument("mismatched ground sizes");
    }
    std::vector<std::uint64_t> out;
    out.reserve(f.size());
    for (std::uint64_t m : f.masks()) {
        out.push_back(m ^ s.bits());
    }
    return SetFamily::from_masks(GroundSize(f.ground_size()), std::move(out));
}

SetFamily restrict(const SetFamily& f, std::span<const RestrictionTerm> terms) {
    if (terms.empty() || terms.size() > 2) {
        throw std::invalid_argument("restriction pattern names one or two coordinates");
    }
    const int n = f.ground_size();
    std::uint64_t required = 0;   // coordinates that must be present (and get removed)
    std::uint64_t forbidden = 0;  // coordinates that must be absent
    for (const RestrictionTerm& t : terms) {
        if (t.coordinate < 1 || t.coordinate > n) {
            throw std::out_of_range("restriction coordinate outside [1, n]");
        }
        const std::uint64_t bit = std::uint64_t{1} << (t.coordinate - 1);
        if ((required | forbidden) & bit) {
            throw std::invalid_argument("duplicate coordinate in restriction pattern");
        }
        (t.present ? required : forbidden) |= bit;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : f.masks()) {
        if ((m & required) == required && (m & forbidden) == 0) {
            out.push_back(m & ~required);
        }
    }
    return SetFamily::from_masks(GroundSize(n), std::move(out));
}

SetFamily restrict(const SetFamily& f, RestrictionTerm a) {
    const RestrictionTerm terms[] = {a};
    return restrict(f, std::span<const RestrictionTerm>(terms));
}

SetFamily restrict(const SetFamily& f, RestrictionTerm a, RestrictionTerm b) {
    const RestrictionTerm terms[] = {a, b};
    return restrict(f, std::span<const RestrictionTerm>(terms));
}

SetFamily slice(const SetFamily& f, int k) {
    if (k < 0 || k > f.ground_size()) {
        throw std::out_of_range("slice size outside [0, n]");
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : f.masks()) {
        if (std::popcount(m) == k) out.push_back(m);
    }
    return SetFamily::from_masks(GroundSize(f.ground_size()), std::move(out));
}

bool is_t_intersecting(const SetFamily& f, int t) {
    if (t < 1) {
        throw std::invalid_argument("intersection threshold must be positive");
    }
    const auto ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i; j < ms.size(); ++j) {
            if (std::popcount(ms[i] & ms[j]) < t) return false;
        }
    }
    return true;
}

bool is_cross_intersecting(const SetFamily& f, const SetFamily& g) {
    if (f.ground_size() != g.ground_size()) {
        throw std::invalid_argument("mismatched ground sizes");
    }
    for (std::uint64_t a : f.masks()) {
        for (std::uint64_t b : g.masks()) {
            if ((a & b) == 0) return false;
        }
    }
    return true;
}

bool is_complex(const SetFamily& f) {
    // Downward closure holds iff removing any single element stays inside.
    for (std::uint64_t m : f.masks()) {
        for (std::uint64_t b = m; b != 0; b &= b - 1) {
            if (!f.contains_bits(m ^ (b & -b))) return false;
        }
    }
    return true;
}

}  // namespace diamfam
