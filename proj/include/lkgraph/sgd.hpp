#pragma once

#include <string>
#include <string_view>

#include "lkgraph/diagram.hpp"

namespace lkgraph {

/// Parses SGD text. Throws ParseError on syntax errors, duplicate or
/// unknown identifiers, and invalid passage numbering.
Diagram parse_sgd(std::string_view text);

/// Syntax-only parse: references and passage numbering are not checked, so
/// the result may violate diagram invariants. Pair with validate().
Diagram parse_sgd_unchecked(std::string_view text);

/// Canonical SGD text: sorted identifiers, fixed field order, '\n' endings.
std::string serialize_sgd(const Diagram& d);

/// Throws Error if the file cannot be read.
std::string read_text_file(const std::string& path);
Diagram read_sgd_file(const std::string& path);

}  // namespace lkgraph
