#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jetforge/polynomial.hpp"

namespace jetforge {

/// Declared names of ambient variables and parameters, in declaration order.
/// Names are identifiers ([A-Za-z_][A-Za-z0-9_]*) and pairwise distinct.
class Symbols {
 public:
  Symbols() = default;
  /// Throws InputError on an invalid or repeated name.
  Symbols(std::vector<std::string> variables, std::vector<std::string> parameters = {});

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<std::string>& parameters() const { return parameters_; }

 private:
  std::vector<std::string> variables_;
  std::vector<std::string> parameters_;
};

bool is_identifier(std::string_view name);

/// Parses the polynomial grammar
///
///   poly   ::= sign? term (('+'|'-') term)*
///   term   ::= coeff? ('*'? factor)*        (at least one of the two)
///   coeff  ::= integer | integer '/' posint
///   factor ::= name ('^' posint)?
///
/// where a name is a declared variable or parameter. Whitespace is ignored.
/// Throws ParseError (with the offending position) on malformed input.
FamilyPoly parse(std::string_view text, const Symbols& symbols);

/// Parses a parameter-free polynomial.
Polynomial<Rational> parse_rational(std::string_view text, const std::vector<std::string>& variables);

/// Canonical rendering: terms in decreasing graded lexicographic order of
/// the ambient monomial, unit coefficients suppressed, zero printed as "0".
/// The output reparses to an equal polynomial.
std::string to_string(const FamilyPoly& f, const Symbols& symbols);
std::string to_string(const Polynomial<Rational>& f, const std::vector<std::string>& variables);
/// Coefficients are printed as canonical residues in [0, q).
std::string to_string(const Polynomial<ModInt>& f, const std::vector<std::string>& variables);

}  // namespace jetforge
