#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diamfam/set_family.hpp"

namespace diamfam {

/// Named parametrized extremal constructions.
///
/// K, H, R, Q take the diameter parameter s (even or odd as each family
/// requires); Hstar, Rstar, Ustar are the s = 4 specials; T5 / T3 / V / M are
/// fixed-shape; HM is the k-uniform near-star; Lex is the lexicographic
/// prefix family.
enum class TemplateKind { K, H, Hstar, T5, T3, HM, R, Rstar, Ustar, V, Q, M, Lex };

[[nodiscard]] std::string to_string(TemplateKind kind);
[[nodiscard]] std::optional<TemplateKind> template_kind_from_string(const std::string& name);

/// A construction instance. Unused fields are left at their defaults; the
/// factory functions below fill the conventional distinguished coordinates
/// (1, {1,2}, {1,2,3}, ...) so builds are deterministic.
///
/// `dset` holds the kind's distinguished set: D for H and Q, the (d+2)-set
/// for R, {a,b,c} for V, the special pair for Hstar / Rstar / Ustar, the
/// triple for T5 / T3, and the k-set base for HM. The fixed coordinates in
/// the usual definitions of Hstar / Rstar / Ustar / T5 / T3 / HM are exposed
/// as parameters because the classification theorems treat relabeled copies
/// as the same class; the defaults reproduce the usual definitions.
struct Template {
    TemplateKind kind = TemplateKind::K;
    int n = 0;
    int s = -1;              ///< diameter parameter (K, H, R, Q)
    int k = -1;              ///< uniformity (HM, Lex)
    std::uint64_t m = 0;     ///< prefix length (Lex)
    std::vector<int> dset;   ///< distinguished set, see above
    int y = 0;               ///< distinguished point (odd K/H, R, Rstar, Ustar, Q; HM center)
    int j = 0, x0 = 0, x1 = 0;  ///< extra points for M and Q

    [[nodiscard]] static Template k_family(int n, int s, int y = 1);
    [[nodiscard]] static Template h_family(int n, int s, std::vector<int> dset = {}, int y = 0);
    [[nodiscard]] static Template h_star(int n, std::vector<int> pair = {1, 2});
    [[nodiscard]] static Template t_family5(int n, std::vector<int> triple = {1, 2, 3});
    [[nodiscard]] static Template t_family3(int n, std::vector<int> triple = {1, 2, 3});
    [[nodiscard]] static Template hilton_milner(int n, int k, int center = 1, std::vector<int> base = {});
    [[nodiscard]] static Template r_family(int n, int s, std::vector<int> rset = {}, int y = 0);
    [[nodiscard]] static Template r_star(int n, int y = 3, std::vector<int> pair = {1, 2});
    [[nodiscard]] static Template u_star(int n, int y = 3, std::vector<int> pair = {1, 2});
    [[nodiscard]] static Template v_family(int n, int a = 1, int b = 2, int c = 3);
    [[nodiscard]] static Template q_family(int n, int s, int j = 0, int y = 0, std::vector<int> dset = {});
    [[nodiscard]] static Template m_family(int n, int j = 1, int y = 2, int x0 = 3, int x1 = 4);
    [[nodiscard]] static Template lex(int n, int k, std::uint64_t m);

    /// Throws std::invalid_argument naming the violated parameter constraint.
    void validate() const;

    /// "H(6,4) D={1,2,3}" style rendering for reports.
    [[nodiscard]] std::string describe() const;
};

/// The exact family of the instance's definition; deterministic and sorted.
/// Builders are total on their parameter domains; theorem validity windows
/// are not enforced here.
[[nodiscard]] SetFamily build(const Template& t);

/// Closed-form cardinality of build(t).
[[nodiscard]] std::uint64_t expected_size(const Template& t);

/// First m k-sets of [n] in lexicographic order (F before G iff
/// min(F \ G) < min(G \ F)). Requires 0 <= m <= C(n, k).
[[nodiscard]] SetFamily lex_family(int n, int k, std::uint64_t m);

/// All k-subsets of [n] as masks, ascending.
[[nodiscard]] std::vector<std::uint64_t> layer_masks(int n, int k);

}  // namespace diamfam
