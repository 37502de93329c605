#pragma once

// line-oriented TSV exchange format for relations

#include <string>

#include "rgc/relation.hpp"

namespace rgc {

// Reads a relation.  The first content line must be the header
// "#mode=undirected|directed|mixed"; later lines hold either a lone taxon
// or "a<TAB>b<TAB>sym|dir|zero".  zero pairs merge transitively into
// classes, dir means the arc a to b.  Later '#' lines are comments.
// Structural problems raise ParseError, semantic ones InvariantError, both
// naming the line.
RelationGraph parse_relation(const std::string& text);

// canonical TSV: header, sorted taxon lines, zero lines from each class
// representative, sorted sym then dir lines; parses back to an equal graph
std::string serialize_relation(const RelationGraph& rel);

}  // namespace rgc
