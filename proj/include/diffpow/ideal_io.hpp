#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "diffpow/monomial_ideal.hpp"

namespace diffpow {

/// Variable naming in ideal expressions: letters x, y, z, w for up to
/// four variables, or indexed names x1..xd.
enum class NamingConvention { Letters, Indexed };

NamingConvention default_convention(int d);
std::string variable_name(int i, NamingConvention convention);

/// A parsed ideal expression such as "(x^2*y^5, x^4 y^3, x^5 y)".
/// Whitespace and '*' both separate factors; repeated variables in a
/// term multiply. The dimension is inferred from the variables used
/// unless overridden.
struct IdealExpression {
  std::string source;
  int d = 0;
  NamingConvention convention = NamingConvention::Letters;
  std::vector<ExponentVector> raw_generators;  // as written, zero terms dropped
  MonomialIdeal ideal;                         // canonical form
};

IdealExpression parse_ideal(std::string_view text, std::optional<int> vars_override = {});

/// A single monomial (one term of the grammar) in a ring of known
/// dimension; "1" parses to the zero exponent vector.
ExponentVector parse_monomial(std::string_view text, int d);

std::string print_monomial(const ExponentVector& m, NamingConvention convention);
std::string print_ideal(const MonomialIdeal& ideal, NamingConvention convention);
std::string print_ideal(const MonomialIdeal& ideal);

nlohmann::json exponents_to_json(const ExponentVector& m);
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);

}  // namespace diffpow
