#include "diamfam/bounds.hpp"

#include <array>
#include <stdexcept>

namespace diamfam {

namespace {

constexpr int kPascalCap = 64;

// Pascal triangle for a <= 64; every entry fits u64 (the largest is C(64,32)).
const std::array<std::array<std::uint64_t, kPascalCap + 1>, kPascalCap + 1>& pascal_table() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kPascalCap + 1>, kPascalCap + 1> t{};
        for (int a = 0; a <= kPascalCap; ++a) {
            t[a][0] = 1;
            for (int b = 1; b <= a; ++b) {
                t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? t[a - 1][b] : 0);
            }
        }
        return t;
    }();
    return table;
}

using Wide = __int128;

std::uint64_t narrow(Wide v) {
    if (v < 0) {
        throw std::logic_error("bound formula evaluated negative");
    }
    if (v > Wide(~std::uint64_t{0})) {
        throw std::overflow_error("bound value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(v);
}

Wide choose(int a, int b) { return Wide(binomial(a, b)); }

// Hamming-ball size: sum of C(n, i) for 0 <= i <= d.
Wide ball(int n, int d) {
    Wide sum = 0;
    for (int i = 0; i <= d; ++i) sum += choose(n, i);
    return sum;
}

Wide ball_shifted(int n, int d) {
    Wide sum = 0;
    for (int i = 0; i <= d; ++i) sum += choose(n - 1, i);
    return sum;
}

bool diameter_window(int n, int s) { return 2 <= s && s <= n - 2; }

}  // namespace

std::uint64_t binomial(int a, int b) {
    if (b < 0 || a < b || a < 0) return 0;
    if (a > kPascalCap) {
        throw std::invalid_argument("binomial supports a <= 64, got a = " + std::to_string(a));
    }
    return pascal_table()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::string to_string(BoundId id) {
    switch (id) {
        case BoundId::EKR: return "EKR";
        case BoundId::HM: return "HM";
        case BoundId::HK: return "HK";
        case BoundId::KATONA: return "KATONA";
        case BoundId::FRANKL_UNION: return "FRANKL_UNION";
        case BoundId::LI_WU: return "LI_WU";
        case BoundId::KLEITMAN: return "KLEITMAN";
        case BoundId::FRANKL_DIAM: return "FRANKL_DIAM";
        case BoundId::GLX_A: return "GLX_A";
        case BoundId::GLX_B: return "GLX_B";
        case BoundId::SECOND_STAB: return "SECOND_STAB";
    }
    throw std::invalid_argument("unknown bound id");
}

std::optional<BoundId> bound_id_from_string(const std::string& name) {
    for (BoundId id : {BoundId::EKR, BoundId::HM, BoundId::HK, BoundId::KATONA, BoundId::FRANKL_UNION,
                       BoundId::LI_WU, BoundId::KLEITMAN, BoundId::FRANKL_DIAM, BoundId::GLX_A,
                       BoundId::GLX_B, BoundId::SECOND_STAB}) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

BoundValue evaluate_bound(BoundId id, const BoundParams& params) {
    const int n = params.n;
    const int s = params.s;
    const int k = params.k;
    if (n < 1) {
        throw std::invalid_argument("bound evaluation requires n >= 1");
    }

    BoundValue out;
    switch (id) {
        case BoundId::EKR: {
            if (k < 0) throw std::invalid_argument("EKR requires k");
            out.value = narrow(choose(n - 1, k - 1));
            out.in_validity_window = k >= 2 && n >= 2 * k;
            return out;
        }
        case BoundId::HM: {
            if (k < 0) throw std::invalid_argument("HM requires k");
            out.value = narrow(choose(n - 1, k - 1) - choose(n - k - 1, k - 1) + 1);
            out.in_validity_window = k >= 2 && n >= 2 * k + 1;
            return out;
        }
        case BoundId::HK: {
            if (k < 0) throw std::invalid_argument("HK requires k");
            out.value = narrow(choose(n - 1, k - 1) - choose(n - k - 1, k - 1) - choose(n - k - 2, k - 2) + 2);
            out.in_validity_window = k >= 3 && n >= 2 * k + 1;
            return out;
        }
        default: break;
    }

    if (s < 0) throw std::invalid_argument(to_string(id) + " requires s");
    const int d = s / 2;
    const bool odd = (s % 2) != 0;

    switch (id) {
        case BoundId::KATONA:
        case BoundId::KLEITMAN: {
            Wide v = ball(n, d);
            if (odd) v += choose(n - 1, d);
            out.value = narrow(v);
            out.in_validity_window = diameter_window(n, s);
            return out;
        }
        case BoundId::FRANKL_UNION:
        case BoundId::FRANKL_DIAM: {
            Wide v = odd ? ball(n, d) + choose(n - 1, d) - choose(n - d - 2, d) + 1
                         : ball(n, d) - choose(n - d - 1, d) + 1;
            out.value = narrow(v);
            out.in_validity_window = diameter_window(n, s);
            return out;
        }
        case BoundId::LI_WU: {
            Wide v = odd ? ball(n, d) + choose(n - 1, d) - choose(n - d - 2, d) - choose(n - d - 3, d - 1) + 2
                         : ball(n, d) - choose(n - d - 1, d) - choose(n - d - 2, d - 1) + 2;
            out.value = narrow(v);
            out.in_validity_window = 4 <= s && s <= n - 2;
            return out;
        }
        case BoundId::GLX_A: {
            out.value = narrow(2 * ball(n, d) - 2 * choose(n - 5 * d - 1, d));
            out.in_validity_window = odd && diameter_window(n, s);
            return out;
        }
        case BoundId::GLX_B: {
            out.value = narrow(2 * ball_shifted(n, d) - choose(n - d - 2, d) + 1);
            out.in_validity_window = odd && diameter_window(n, s);
            return out;
        }
        case BoundId::SECOND_STAB: {
            out.in_validity_window = 3 <= s && s <= n - 2;
            if (s == 3) {
                out.value = 8;
                return out;
            }
            if (!odd) {
                out.value = narrow(ball(n, d) - choose(n - d - 1, d) - choose(n - d - 2, d - 1) + 2);
                return out;
            }
            const Wide base = ball(n, d) + choose(n - 1, d) - choose(n - d - 2, d);
            const std::uint64_t a = narrow(base - choose(n - d - 3, d - 1) + 2);
            const std::uint64_t b = narrow(base - choose(n - d - 3, d) + 1);
            out.branches = {a, b};
            out.value = a > b ? a : b;
            return out;
        }
        default: break;
    }
    throw std::invalid_argument("unknown bound id");
}

BoundLadder bound_ladder(int n, int s) {
    if (!(2 <= s && s <= n - 2)) {
        throw std::invalid_argument("bound ladder requires 2 <= s <= n-2");
    }
    BoundLadder ladder;
    ladder.n = n;
    ladder.s = s;
    ladder.kleitman = evaluate_bound(BoundId::KLEITMAN, {.n = n, .s = s}).value;
    ladder.frankl_diam = evaluate_bound(BoundId::FRANKL_DIAM, {.n = n, .s = s}).value;
    if (s >= 3) {
        ladder.second_stab = evaluate_bound(BoundId::SECOND_STAB, {.n = n, .s = s}).value;
    }
    if (ladder.kleitman <= ladder.frankl_diam ||
        (ladder.second_stab && ladder.frankl_diam <= *ladder.second_stab)) {
        throw std::logic_error("stability ladder is not strictly decreasing at (" + std::to_string(n) + ", " +
                               std::to_string(s) + ")");
    }
    return ladder;
}

}  // namespace diamfam
