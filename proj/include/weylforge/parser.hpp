#pragma once

#include "weylforge/algebra.hpp"

#include <stdexcept>
#include <string>

namespace weylforge {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Grammar:
///   expr     := term (("+"|"-") term)*
///   term     := factor (("*"|"/")? factor)*
///   factor   := atom ("^" nat)?
///   atom     := rational | ident | "(" expr ")"
///   rational := int ("/" posint)?
///   ident    := letter (letter|digit)*
/// Juxtaposition multiplies in written order (noncommutative). "/" requires
/// an invertible scalar divisor. Identifiers that are not variables of the
/// signature denote symbolic parameters.
NCPoly parse_expression(const std::string& src, const SignaturePtr& sig);

/// Deglex-descending canonical text; re-parseable, deterministic.
std::string format_canonical(const NCPoly& f);

}  // namespace weylforge
