#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mps/polynomial.hpp"

namespace mps {

/// Parses a polynomial over `ring`.
///
/// Grammar: rational literals (`3`, `7/2`), variables
/// `[A-Za-z_][A-Za-z0-9_]*` with an optional copy suffix `@l` or trailing
/// apostrophes (`x'` is `x@2`, `x''` is `x@3`), binary `+ - *`, unary `-`,
/// `^` with a nonnegative integer literal exponent, parentheses. `^` binds
/// tightest, then `*`, then `+ -`. There is no implicit multiplication.
///
/// A bare name resolves to copy 0 if the table has it, else to copy 1.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Renders terms in descending order of the ring's order, e.g. `x^2 - 7/2*x*y' + 1`.
std::string render_poly(const Polynomial& p, NameStyle style = NameStyle::Primes);

/// Parses a single variable token (`x`, `x@3`, `y''`) into (base, copy).
/// Bare names get copy 0.
Variable parse_variable_token(std::string_view token);

/// Parses a comma- or whitespace-separated declaration list. A bare name
/// becomes copy 1 when the same base is also declared with a copy >= 2
/// (`x, x'` is `x@1, x@2`), and copy 0 otherwise.
std::vector<Variable> parse_variable_list(std::string_view text);

/// Looks up a variable written in any accepted spelling.
std::optional<std::size_t> resolve_variable(const VariableTable& table, std::string_view token);

}  // namespace mps
