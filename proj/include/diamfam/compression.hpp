#pragma once

#include <utility>
#include <vector>

#include "diamfam/set_family.hpp"

namespace diamfam {

/// One productive pass of the iterated compression: which coordinate was
/// shifted and how many members actually moved.
struct CompressionStep {
    int coordinate = 0;
    std::size_t moved = 0;
};

struct CompressionTrace {
    std::vector<CompressionStep> steps;
    bool fixpoint = false;  ///< true iff the final family is a complex
};

/// Down-shift (squashing) at coordinate j: each member containing j moves to
/// its j-removed version when that version is absent from the original
/// family. Size-preserving; diameter never increases.
[[nodiscard]] SetFamily down_shift(const SetFamily& f, int j);

/// Iterated down-shifts, sweeping j = 1..n round-robin until a full pass
/// changes nothing. The result is a complex of the same size with diameter
/// at most diameter(f). Traces are sweep-order dependent; only the fixpoint
/// properties are contractual.
[[nodiscard]] std::pair<SetFamily, CompressionTrace> compress_to_complex(const SetFamily& f);

/// Translates by S = {i : more members contain i than avoid it}, after which
/// every coordinate is in at most half of the members. Applying it twice
/// yields S = empty on the second run.
[[nodiscard]] std::pair<SetFamily, SetMask> normalize_translation(const SetFamily& f);

}  // namespace diamfam
