#include "diffpow/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace diffpow {

namespace {

constexpr std::string_view kLetterNames = "xyzw";

/// Recursive-descent reader for the ideal-expression grammar.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  struct Term {
    std::map<int, std::int64_t> exponents;
    bool is_zero = false;
  };

  std::vector<Term> read_ideal() {
    skip_ws();
    expect('(', "expected '('");
    std::vector<Term> terms;
    terms.push_back(read_term());
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      terms.push_back(read_term());
      skip_ws();
    }
    expect(')', "expected ')' or ','");
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input after ')'", pos_);
    return terms;
  }

  Term read_standalone_term() {
    Term t = read_term();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input after monomial", pos_);
    return t;
  }

  int max_index() const { return max_index_; }
  std::optional<NamingConvention> convention() const { return convention_; }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c, const char* msg) {
    if (peek() != c) throw ParseError(msg, pos_);
    ++pos_;
  }

  bool at_factor_start() const {
    const char c = peek();
    return c == 'x' || c == 'y' || c == 'z' || c == 'w' || c == '0' || c == '1';
  }

  std::int64_t read_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a number", pos_);
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxExponent) throw ParseError("number exceeds exponent cap", pos_);
      ++pos_;
    }
    return value;
  }

  void set_convention(NamingConvention c, std::size_t at) {
    if (convention_ && *convention_ != c)
      throw ParseError("cannot mix letter variables with indexed variables", at);
    convention_ = c;
  }

  Term read_term() {
    skip_ws();
    Term term;
    bool first = true;
    while (true) {
      skip_ws();
      if (!at_factor_start()) {
        if (first) throw ParseError("expected a monomial", pos_);
        break;
      }
      read_factor(term);
      first = false;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!at_factor_start()) throw ParseError("expected a factor after '*'", pos_);
      }
    }
    return term;
  }

  void read_factor(Term& term) {
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '0') {
      ++pos_;
      term.is_zero = true;
      return;
    }
    if (c == '1') {
      ++pos_;
      return;
    }
    ++pos_;
    int index;
    if (c == 'x' && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::int64_t k = read_uint();
      if (k < 1) throw ParseError("indexed variables start at x1", start);
      if (k > (1 << 20)) throw ParseError("variable index too large", start);
      set_convention(NamingConvention::Indexed, start);
      index = static_cast<int>(k) - 1;
    } else {
      if (std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("only 'x' may carry a variable index", pos_);
      set_convention(NamingConvention::Letters, start);
      index = static_cast<int>(kLetterNames.find(c));
    }
    max_index_ = std::max(max_index_, index);
    std::int64_t e = 1;
    if (peek() == '^') {
      ++pos_;
      e = read_uint();
    }
    auto& slot = term.exponents[index];
    slot += e;  // repeated variables multiply
    if (slot > kMaxExponent) throw ParseError("exponent cap exceeded", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_index_ = -1;
  std::optional<NamingConvention> convention_;
};

ExponentVector term_to_vector(const Reader::Term& term, int d) {
  std::vector<std::int64_t> entries(static_cast<std::size_t>(d), 0);
  for (const auto& [index, e] : term.exponents) entries[static_cast<std::size_t>(index)] = e;
  return ExponentVector(std::move(entries));
}

}  // namespace

NamingConvention default_convention(int d) {
  return d <= 4 ? NamingConvention::Letters : NamingConvention::Indexed;
}

std::string variable_name(int i, NamingConvention convention) {
  if (convention == NamingConvention::Letters && i < 4)
    return std::string(1, kLetterNames[static_cast<std::size_t>(i)]);
  return "x" + std::to_string(i + 1);
}

IdealExpression parse_ideal(std::string_view text, std::optional<int> vars_override) {
  Reader reader(text);
  const auto terms = reader.read_ideal();

  int d;
  if (vars_override) {
    if (*vars_override < 1) throw ParseError("--vars must be at least 1", 0);
    d = *vars_override;
    if (reader.max_index() >= d)
      throw ParseError("expression uses a variable beyond the requested dimension", 0);
  } else if (reader.max_index() >= 0) {
    d = reader.max_index() + 1;
  } else {
    throw ParseError("cannot infer the variable count; pass --vars", 0);
  }

  IdealExpression expr{std::string(text), d,
                       reader.convention().value_or(default_convention(d)),
                       {},
                       MonomialIdeal::zero(d)};
  if (d > 4) expr.convention = NamingConvention::Indexed;
  for (const auto& term : terms) {
    if (term.is_zero) continue;  // a zero generator adds nothing
    expr.raw_generators.push_back(term_to_vector(term, d));
  }
  expr.ideal = MonomialIdeal::from_generators(d, expr.raw_generators);
  return expr;
}

ExponentVector parse_monomial(std::string_view text, int d) {
  Reader reader(text);
  const auto term = reader.read_standalone_term();
  if (term.is_zero) throw ParseError("expected a nonzero monomial", 0);
  if (reader.max_index() >= d)
    throw ParseError("monomial uses a variable beyond the ring dimension", 0);
  return term_to_vector(term, d);
}

std::string print_monomial(const ExponentVector& m, NamingConvention convention) {
  if (m.is_zero()) return "1";
  std::string out;
  for (int i : m.support()) {
    if (!out.empty()) out += ' ';
    out += variable_name(i, convention);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string print_ideal(const MonomialIdeal& ideal, NamingConvention convention) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += print_monomial(ideal.generators()[i], convention);
  }
  return out + ")";
}

std::string print_ideal(const MonomialIdeal& ideal) {
  return print_ideal(ideal, default_convention(ideal.dim()));
}

nlohmann::json exponents_to_json(const ExponentVector& m) {
  return nlohmann::json(m.entries());
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const ExponentVector& g : ideal.generators()) gens.push_back(exponents_to_json(g));
  return nlohmann::json{{"d", ideal.dim()}, {"gens", std::move(gens)}};
}

}  // namespace diffpow
