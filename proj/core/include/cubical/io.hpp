#pragma once

// Text format for presheaves and presheaf maps. Output is byte-stable:
// object keys sorted, dimensions ascending.

#include <string>
#include <string_view>

#include "cubical/presheaf.hpp"

namespace cubical {

std::string serialize_presheaf(const Presheaf& x);
/// Throws ParseError on malformed input and ValidationError when the
/// tables violate an identity.
Presheaf parse_presheaf(std::string_view text);

std::string serialize_map(const PresheafMap& f);
PresheafMap parse_map(std::string_view text);

}  // namespace cubical
