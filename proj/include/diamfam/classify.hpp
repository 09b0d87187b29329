#pragma once

#include <optional>
#include <vector>

#include "diamfam/bounds.hpp"
#include "diamfam/constructions.hpp"
#include "diamfam/set_family.hpp"

namespace diamfam {

/// Isometry placing a family inside a template instance: first relabel
/// coordinates with `perm` (perm[i-1] is the image of coordinate i), then
/// translate by `shift`.
struct IsometryWitness {
    SetMask shift;
    std::vector<int> perm;
};

/// Result of a template-membership test: the instance the family embeds
/// into plus the isometry, or nothing.
struct ClassLabel {
    std::optional<Template> instance;
    std::optional<IsometryWitness> witness;

    [[nodiscard]] bool fits() const noexcept { return instance.has_value(); }
};

enum class FitMode {
    translate_only,         ///< quantifies over translations and the template's own parameters
    translate_and_permute,  ///< additionally quantifies over coordinate permutations
};

/// Hard cap for canonical_form and permute-mode searches: the orbit has size
/// 2^n * n!, prunable at desk scale but not beyond.
inline constexpr int kCanonicalCap = 10;

/// Distinguished orbit representative under translation x coordinate
/// permutation: the minimum sorted mask sequence over the orbit, sequences
/// compared lexicographically. Two families have equal canonical forms iff
/// one is a translated, relabeled copy of the other.
[[nodiscard]] SetFamily canonical_form(const SetFamily& f);

/// Some center c with every member within distance d of c, i.e. containment
/// in a translated radius-d Hamming ball; the numerically smallest valid
/// center is returned. Requires a nonempty family.
[[nodiscard]] std::optional<SetMask> fits_ball(const SetFamily& f, int d);

/// All parameter instances of `kind` at ground size n (and diameter s where
/// the kind is s-parametrized), in ascending parameter order.
[[nodiscard]] std::vector<Template> instance_grid(TemplateKind kind, int n, int s);

/// Does some instance of `kind` contain an isometric copy of f?
/// translate_only enumerates translations and template parameters exactly as
/// the classification theorems quantify; permute mode adds coordinate
/// permutations (equivalent for these templates, whose parameters absorb
/// relabeling). `s` selects the instance size for K / H / R / Q and is
/// ignored by the fixed-diameter kinds.
[[nodiscard]] ClassLabel fits_template(const SetFamily& f, TemplateKind kind, int s, FitMode mode);

/// Extremal hierarchy levels: 1 = inside a translated maximum family,
/// 2 = inside one of the listed second-level classes, 3 = outside all of
/// them (compared against the third-level size bound).
struct ExtremalLevelReport {
    int level = 0;
    ClassLabel label;                           ///< set for levels 1 and 2
    std::uint64_t family_size = 0;
    std::optional<std::uint64_t> level3_bound;  ///< SECOND_STAB(n, s), level 3 only
    bool within_level3_bound = true;
};

/// The second-level class kinds for diameter s, in report order.
[[nodiscard]] std::vector<TemplateKind> second_level_kinds(int s);

/// Requires diameter(f) <= s.
[[nodiscard]] ExtremalLevelReport classify_extremal(const SetFamily& f, int s);

}  // namespace diamfam
