#include "jetforge/text.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

#include "jetforge/error.hpp"

namespace jetforge {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  const auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Symbols::Symbols(std::vector<std::string> variables, std::vector<std::string> parameters)
    : variables_(std::move(variables)), parameters_(std::move(parameters)) {
  std::set<std::string> seen;
  for (const auto* list : {&variables_, &parameters_}) {
    for (const auto& name : *list) {
      if (!is_identifier(name)) throw InputError("'" + name + "' is not a valid name");
      if (!seen.insert(name).second) throw InputError("name '" + name + "' declared twice");
    }
  }
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Symbols& symbols) : text_(text), symbols_(symbols) {}

  FamilyPoly parse() {
    const auto ring = family_ring(symbols_.variables().size(), symbols_.parameters().size());
    std::vector<FamilyPoly::Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative, ring));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-', ring));
    }
    return FamilyPoly::from_terms(ring, std::move(terms));
  }

 private:
  using Term = FamilyPoly::Term;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t positive_integer(const char* what) {
    skip_space();
    if (peek() == '-') fail(std::string("negative ") + what);
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.empty()) fail(std::string("expected a positive integer ") + what);
    std::uint64_t value = 0;
    for (char c : d) {
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        pos_ = start;
        fail(std::string(what) + " too large");
      }
    }
    if (value == 0) {
      pos_ = start;
      fail(std::string("zero ") + what);
    }
    return static_cast<std::uint32_t>(value);
  }

  Term term(bool negative, const FamilyPoly::Domain& ring) {
    skip_space();
    const std::size_t nvars = symbols_.variables().size();
    const std::size_t nparams = symbols_.parameters().size();
    ExponentVector e(nvars);
    ExponentVector pe(nparams);
    Rational coeff(1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip_space();
      if (peek() == '/') {
        ++pos_;
        const std::uint32_t den = positive_integer("denominator");
        coeff = Rational::from_string(num + "/" + std::to_string(den));
      } else {
        coeff = Rational::from_string(num);
      }
      any = true;
    }
    while (true) {
      skip_space();
      bool star = false;
      if (peek() == '*') {
        ++pos_;
        star = true;
        skip_space();
      }
      if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
        if (star) fail("expected a name after '*'");
        break;
      }
      factor(e, pe);
      any = true;
    }
    if (!any) fail("expected a term");
    if (negative) coeff = -coeff;
    return {std::move(e), ParamPoly::monomial(ring.coefficients, std::move(pe), coeff)};
  }

  void factor(ExponentVector& e, ExponentVector& pe) {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    std::uint32_t power = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      power = positive_integer("exponent");
    }
    const auto& vars = symbols_.variables();
    const auto& params = symbols_.parameters();
    if (auto it = std::find(vars.begin(), vars.end(), name); it != vars.end()) {
      e[static_cast<std::size_t>(it - vars.begin())] += power;
    } else if (auto jt = std::find(params.begin(), params.end(), name); jt != params.end()) {
      pe[static_cast<std::size_t>(jt - params.begin())] += power;
    } else {
      throw ParseError("unknown identifier '" + name + "'", start);
    }
  }

  std::string_view text_;
  const Symbols& symbols_;
  std::size_t pos_ = 0;
};

struct FlatTerm {
  Rational coefficient;
  std::vector<std::pair<std::string_view, std::uint32_t>> factors;
};

std::string render(const std::vector<FlatTerm>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = t.coefficient.sign() < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = t.coefficient.abs();
    bool wrote = false;
    if (!magnitude.is_one() || t.factors.empty()) {
      out << magnitude;
      wrote = true;
    }
    for (const auto& [name, power] : t.factors) {
      if (wrote) out << '*';
      out << name;
      if (power != 1) out << '^' << power;
      wrote = true;
    }
  }
  return out.str();
}

void append_factors(FlatTerm& t, const ExponentVector& e, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) t.factors.emplace_back(names.at(i), e[i]);
}

void check_names(std::size_t expected, const std::vector<std::string>& names) {
  if (names.size() != expected)
    throw InputError("expected " + std::to_string(expected) + " variable names, got " +
                     std::to_string(names.size()));
}

}  // namespace

FamilyPoly parse(std::string_view text, const Symbols& symbols) {
  return Parser(text, symbols).parse();
}

Polynomial<Rational> parse_rational(std::string_view text, const std::vector<std::string>& variables) {
  return drop_parameters(parse(text, Symbols(variables)));
}

std::string to_string(const FamilyPoly& f, const Symbols& symbols) {
  check_names(f.variable_count(), symbols.variables());
  check_names(f.coefficient_domain().variables, symbols.parameters());
  std::vector<FlatTerm> flat;
  for (const auto& [e, c] : f.terms()) {
    for (const auto& [pe, pc] : c.terms()) {
      FlatTerm t{pc, {}};
      append_factors(t, pe, symbols.parameters());
      append_factors(t, e, symbols.variables());
      flat.push_back(std::move(t));
    }
  }
  return render(flat);
}

std::string to_string(const Polynomial<Rational>& f, const std::vector<std::string>& variables) {
  check_names(f.variable_count(), variables);
  std::vector<FlatTerm> flat;
  for (const auto& [e, c] : f.terms()) {
    FlatTerm t{c, {}};
    append_factors(t, e, variables);
    flat.push_back(std::move(t));
  }
  return render(flat);
}

std::string to_string(const Polynomial<ModInt>& f, const std::vector<std::string>& variables) {
  check_names(f.variable_count(), variables);
  std::vector<FlatTerm> flat;
  for (const auto& [e, c] : f.terms()) {
    FlatTerm t{Rational(static_cast<long>(c.value())), {}};
    append_factors(t, e, variables);
    flat.push_back(std::move(t));
  }
  return render(flat);
}

}  // namespace jetforge
