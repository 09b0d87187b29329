#include "diamfam/compression.hpp"

#include <bit>
#include <stdexcept>

namespace diamfam {

namespace {

// Down-shift with move counting; membership tests run against the input
// family throughout one application.
SetFamily down_shift_counted(const SetFamily& f, int j, std::size_t& moved) {
    const int n = f.ground_size();
    if (j < 1 || j > n) {
        throw std::out_of_range("down-shift coordinate outside [1, n]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    std::vector<std::uint64_t> out;
    out.reserve(f.size());
    moved = 0;
    for (std::uint64_t m : f.masks()) {
        if ((m & bit) != 0 && !f.contains_bits(m ^ bit)) {
            out.push_back(m ^ bit);
            ++moved;
        } else {
            out.push_back(m);
        }
    }
    return SetFamily::from_masks(GroundSize(n), std::move(out));
}

}  // namespace

SetFamily down_shift(const SetFamily& f, int j) {
    std::size_t moved = 0;
    return down_shift_counted(f, j, moved);
}

std::pair<SetFamily, CompressionTrace> compress_to_complex(const SetFamily& f) {
    SetFamily current = f;
    CompressionTrace trace;
    const int n = f.ground_size();
    // The potential sum of member sizes drops by `moved` at each productive
    // step, so the sweep terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 1; j <= n; ++j) {
            std::size_t moved = 0;
            SetFamily next = down_shift_counted(current, j, moved);
            if (moved > 0) {
                trace.steps.push_back({j, moved});
                current = std::move(next);
                changed = true;
            }
        }
    }
    trace.fixpoint = is_complex(current);
    return {std::move(current), trace};
}

std::pair<SetFamily, SetMask> normalize_translation(const SetFamily& f) {
    const int n = f.ground_size();
    const std::size_t total = f.size();
    std::uint64_t shift = 0;
    for (int i = 1; i <= n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << (i - 1);
        std::size_t with_i = 0;
        for (std::uint64_t m : f.masks()) {
            if (m & bit) ++with_i;
        }
        if (2 * with_i > total) shift |= bit;
    }
    SetMask s(GroundSize(n), shift);
    return {translate(f, s), s};
}

}  // namespace diamfam
