#pragma once

#include <iosfwd>
#include <string>

#include "diamfam/set_family.hpp"

namespace diamfam {

/// Text format: a header line "n=<int>", then one member per line as either a
/// brace list "{1,3,4}" or a bitstring of length n whose j-th character is
/// element j+1. Blank lines and lines starting with '#' are ignored.
/// Duplicate members are rejected.
[[nodiscard]] SetFamily read_family_text(std::istream& in);
[[nodiscard]] SetFamily parse_family_text(const std::string& text);
void write_family_text(std::ostream& out, const SetFamily& f);
[[nodiscard]] std::string family_to_text(const SetFamily& f);

/// JSON form: {"n": int, "members": [[ints]]}. Extra keys (e.g. construction
/// metadata) are ignored on read. Duplicate members are rejected.
[[nodiscard]] SetFamily parse_family_json(const std::string& text);
[[nodiscard]] std::string family_to_json(const SetFamily& f);

/// Dispatches on extension: ".json" uses the JSON form, anything else text.
[[nodiscard]] SetFamily load_family(const std::string& path);
void save_family(const std::string& path, const SetFamily& f);

}  // namespace diamfam
