#pragma once

// Elaboration of DSL expressions into TL morphisms.
//
// Root-only atoms (jw2n1, jwhat, tjw) need a root-of-unity ring. jw(k)
// dispatches to whichever projector construction exists for k.

#include <string_view>

#include "skein/diagram.hpp"
#include "skein/dsl.hpp"

namespace skein {

// Signature mismatches and root-only atoms in generic mode throw
// ElaborationError; other errors keep their code and gain the source position.
TLMorphism evaluate(const Expr& expr, const Ring& ring);

// parse_expression followed by evaluate.
TLMorphism evaluate_source(std::string_view source, const Ring& ring);

}  // namespace skein
