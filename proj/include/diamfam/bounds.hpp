#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace diamfam {

/// C(a, b) with the convention C(a, b) = 0 when b < 0 or a < b (so terms like
/// "n-5d-1 choose d" vanish uniformly at small n). Exact for 0 <= a <= 64.
[[nodiscard]] std::uint64_t binomial(int a, int b);

/// Theorem-level formula identifiers.
///
/// EKR / HM / HK take (n, k); the union and diameter bounds take (n, s);
/// GLX_A / GLX_B take odd s = 2d+1. KATONA and KLEITMAN share one formula
/// pair, as do FRANKL_UNION and FRANKL_DIAM; they are kept as distinct ids
/// because their validity windows are stated separately.
enum class BoundId {
    EKR,
    HM,
    HK,
    KATONA,
    FRANKL_UNION,
    LI_WU,
    KLEITMAN,
    FRANKL_DIAM,
    GLX_A,
    GLX_B,
    SECOND_STAB,
};

[[nodiscard]] std::string to_string(BoundId id);
[[nodiscard]] std::optional<BoundId> bound_id_from_string(const std::string& name);

struct BoundParams {
    int n = 0;
    int s = -1;  ///< diameter / union parameter
    int k = -1;  ///< uniformity, for EKR / HM / HK
};

struct BoundValue {
    std::uint64_t value = 0;
    bool in_validity_window = false;
    /// Both expressions of the odd second-stability maximum, largest first
    /// role: (ladder expression, chain expression). Present only for
    /// SECOND_STAB with odd s >= 5.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> branches;
};

/// Evaluates the cited formula exactly. Out-of-window parameters do not
/// abort: the formula is still evaluated and the window flag cleared.
[[nodiscard]] BoundValue evaluate_bound(BoundId id, const BoundParams& params);

/// Stability ladder at (n, s): maximum size, second level, and (for s >= 3)
/// third level. Strict monotonicity is asserted.
struct BoundLadder {
    int n = 0;
    int s = 0;
    std::uint64_t kleitman = 0;
    std::uint64_t frankl_diam = 0;
    std::optional<std::uint64_t> second_stab;  ///< absent for s == 2
};

/// Requires 2 <= s <= n-2.
[[nodiscard]] BoundLadder bound_ladder(int n, int s);

}  // namespace diamfam
