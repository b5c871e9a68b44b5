#pragma once

// The .topo file format (UTF-8, line oriented):
//
//   points <n>
//   nbhd <i>: <j1> <j2> ...     one line per point, members sorted ascending
//   label <i>: <text>           optional
//
// '#' starts a comment; blank lines are ignored. parse_space and
// serialize_space are exact inverses on Space values, labels included.

#include <string>
#include <string_view>

#include "topo/space.hpp"

namespace topo {

/// Throws SyntaxError (with the 1-based line number) on malformed input and
/// ValidationError when the table violates the space invariants.
Space parse_space(std::string_view text);

std::string serialize_space(const Space& s);

}  // namespace topo
