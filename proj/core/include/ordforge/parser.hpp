#pragma once

#include <string>

#include "ordforge/term.hpp"

namespace ordforge {

// Parses the shared term syntax into a raw tree. Formation invariants
// are not enforced here; each system validates after parsing.
//
//   0
//   2^@a + 2^@b
//   e[@u]   w^t   t + t
//   phi[@u](t)   G[@u]
//   th(t)   Om   E[@x]   E{c}(t1,...,tn)
//   Om_n   OmW   OmW*@u   th_n(t)
//   el[@x]   c_n   den{c}(@a,@b)
//
// Throws ParseError with a 1-based column on malformed input.
TermPtr parse_term(const std::string& text);

}  // namespace ordforge
