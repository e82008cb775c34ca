#pragma once

// Parsing of algebra names.  Accepts the canonical spellings produced by
// RealForm::name() / RealReductiveType::name() plus common variants:
// braces and parentheses around subscripts are optional ("su_{4,2}",
// "su(4,2)", "su_4,2"), case is ignored, and "gl_n(R)/gl_n(C)" are accepted
// as sl+center shorthands.  Unparseable names raise std::invalid_argument
// with a hint at nearby valid spellings.

#include <minorb/realform.hpp>

#include <string>

namespace minorb {

// A single non-compact simple real form (complex simple algebras viewed as
// real count as such).  Compact, abelian or non-simple inputs are rejected
// with a message saying what the input is.
RealForm parse_real_form(const std::string& s);

// A '+'-separated sum of simple real forms, compact simple algebras and
// abelian summands ("R", "C", "so_2").  "0" is the zero algebra.
RealReductiveType parse_real_reductive(const std::string& s);

}  // namespace minorb
