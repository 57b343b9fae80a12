#include "gg2x/param_poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "gg2x/errors.hpp"

namespace gg2x {

ParamPoly ParamPoly::constant(Rational value) {
  ParamPoly p;
  p.add_term(kUnitExponents, value);
  return p;
}

ParamPoly ParamPoly::variable(Sym s, int exponent) {
  Exponents e{};
  e[static_cast<int>(s)] = static_cast<std::int16_t>(exponent);
  return monomial(Rational(1), e);
}

ParamPoly ParamPoly::monomial(Rational coefficient, const Exponents& exponents) {
  ParamPoly p;
  p.add_term(exponents, coefficient);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == kUnitExponents);
}

Rational ParamPoly::constant_term() const {
  const auto it = terms_.find(kUnitExponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPoly::as_constant() const {
  if (!is_constant()) {
    throw std::logic_error("as_constant on non-constant polynomial: " + str());
  }
  return constant_term();
}

void ParamPoly::add_term(const Exponents& exponents,
                         const Rational& coefficient) {
  if (coefficient == 0) return;
  const auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
  for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, coeff);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
  for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, -coeff);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) {
  ParamPoly product;
  for (const auto& [le, lc] : terms_) {
    for (const auto& [re, rc] : rhs.terms_) {
      Exponents sum;
      for (int i = 0; i < kSymbolCount; ++i) {
        sum[i] = static_cast<std::int16_t>(le[i] + re[i]);
      }
      product.add_term(sum, lc * rc);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly negated;
  for (const auto& [exps, coeff] : terms_) {
    negated.terms_.emplace(exps, -coeff);
  }
  return negated;
}

ParamPoly ParamPoly::scaled(const Rational& factor) const {
  ParamPoly out;
  if (factor == 0) return out;
  for (const auto& [exps, coeff] : terms_) {
    out.terms_.emplace(exps, coeff * factor);
  }
  return out;
}

ParamPoly ParamPoly::pow(int exponent) const {
  if (exponent < 0) {
    throw UnsupportedForm("negative power of a general polynomial");
  }
  ParamPoly acc = constant(Rational(1));
  for (int i = 0; i < exponent; ++i) acc *= *this;
  return acc;
}

bool ParamPoly::depends_on(Sym s) const {
  const int idx = static_cast<int>(s);
  for (const auto& [exps, coeff] : terms_) {
    if (exps[idx] != 0) return true;
  }
  return false;
}

int ParamPoly::max_exponent_in(Sym s) const {
  const int idx = static_cast<int>(s);
  int best = 0;
  for (const auto& [exps, coeff] : terms_) best = std::max(best, int(exps[idx]));
  return best;
}

int ParamPoly::min_exponent_in(Sym s) const {
  const int idx = static_cast<int>(s);
  int best = 0;
  for (const auto& [exps, coeff] : terms_) best = std::min(best, int(exps[idx]));
  return best;
}

std::map<int, ParamPoly> ParamPoly::collect(Sym s) const {
  const int idx = static_cast<int>(s);
  std::map<int, ParamPoly> groups;
  for (const auto& [exps, coeff] : terms_) {
    Exponents reduced = exps;
    reduced[idx] = 0;
    groups[exps[idx]].add_term(reduced, coeff);
  }
  return groups;
}

ParamPoly ParamPoly::coefficient_of(Sym s, int exponent) const {
  const int idx = static_cast<int>(s);
  ParamPoly out;
  for (const auto& [exps, coeff] : terms_) {
    if (exps[idx] != exponent) continue;
    Exponents reduced = exps;
    reduced[idx] = 0;
    out.add_term(reduced, coeff);
  }
  return out;
}

ParamPoly ParamPoly::substitute(Sym s, const ParamPoly& replacement) const {
  if (min_exponent_in(s) < 0) {
    throw UnsupportedForm("substitute into a negative power of " +
                          std::string(symbol_name(s)));
  }
  ParamPoly out;
  for (const auto& [degree, coeff] : collect(s)) {
    out += coeff * replacement.pow(degree);
  }
  return out;
}

ParamPoly ParamPoly::substitute_squares(Sym s,
                                        const ParamPoly& replacement) const {
  ParamPoly out;
  for (const auto& [degree, coeff] : collect(s)) {
    if (degree < 0 || degree % 2 != 0) {
      throw UnsupportedForm("substitute_squares needs even powers of " +
                            std::string(symbol_name(s)));
    }
    out += coeff * replacement.pow(degree / 2);
  }
  return out;
}

ParamPoly ParamPoly::divided_by_monomial(const ParamPoly& divisor) const {
  if (!divisor.is_monomial()) {
    throw UnsupportedForm("division requires a single-term divisor");
  }
  const auto& [div_exps, div_coeff] = *divisor.terms_.begin();
  ParamPoly out;
  for (const auto& [exps, coeff] : terms_) {
    Exponents quotient;
    for (int i = 0; i < kSymbolCount; ++i) {
      quotient[i] = static_cast<std::int16_t>(exps[i] - div_exps[i]);
    }
    out.terms_.emplace(quotient, coeff / div_coeff);
  }
  return out;
}

std::optional<ParamPoly> ParamPoly::monomial_sqrt() const {
  if (!is_monomial()) return std::nullopt;
  const auto& [exps, coeff] = *terms_.begin();
  const auto root = rational_sqrt(coeff);
  if (!root) return std::nullopt;
  Exponents half;
  for (int i = 0; i < kSymbolCount; ++i) {
    if (exps[i] % 2 != 0) return std::nullopt;
    half[i] = static_cast<std::int16_t>(exps[i] / 2);
  }
  return monomial(*root, half);
}

namespace {

void append_magnitude(std::ostringstream& out, const Exponents& exps,
                      const Rational& magnitude) {
  bool printed = false;
  if (magnitude != 1) {
    out << rational_str(magnitude);
    printed = true;
  }
  for (int i = 0; i < kSymbolCount; ++i) {
    if (exps[i] == 0) continue;
    if (printed) out << '*';
    out << symbol_name(static_cast<Sym>(i));
    if (exps[i] != 1) out << '^' << exps[i];
    printed = true;
  }
  if (!printed) out << '1';
}

}  // namespace

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    if (first) {
      if (coeff < 0) out << '-';
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    append_magnitude(out, exps, abs(coeff));
  }
  return out.str();
}

namespace {

/// Minimal scanner for the canonical polynomial text form.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  ParamPoly parse() {
    ParamPoly total;
    skip_space();
    bool negative = consume_sign();
    while (true) {
      total += parse_term(negative);
      skip_space();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      negative = (c == '-');
      skip_space();
    }
    return total;
  }

 private:
  ParamPoly parse_term(bool negative) {
    Rational coeff = negative ? Rational(-1) : Rational(1);
    Exponents exps{};
    bool expect_factor = true;
    while (expect_factor) {
      skip_space();
      if (pos_ < text_.size() && std::isdigit(unsigned(text_[pos_]))) {
        coeff *= parse_rational();
      } else {
        const auto [sym, exponent] = parse_symbol_power();
        exps[static_cast<int>(sym)] =
            static_cast<std::int16_t>(exps[static_cast<int>(sym)] + exponent);
      }
      skip_space();
      expect_factor = pos_ < text_.size() && text_[pos_] == '*';
      if (expect_factor) ++pos_;
    }
    return ParamPoly::monomial(coeff, exps);
  }

  Rational parse_rational() {
    const Integer num = parse_integer_digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const Integer den = parse_integer_digits();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Integer parse_integer_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(unsigned(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::pair<Sym, int> parse_symbol_power() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(unsigned(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const auto name = text_.substr(start, pos_ - start);
    const auto sym = symbol_from_name(name);
    if (!sym) fail("unknown symbol '" + std::string(name) + "'");
    int exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      bool negative = pos_ < text_.size() && text_[pos_] == '-';
      if (negative) ++pos_;
      exponent = static_cast<int>(parse_integer_digits());
      if (negative) exponent = -exponent;
    }
    return {*sym, exponent};
  }

  bool consume_sign() {
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const bool negative = text_[pos_] == '-';
      ++pos_;
      skip_space();
      return negative;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(unsigned(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at offset " +
                                std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamPoly ParamPoly::parse(std::string_view text) {
  PolyParser parser(text);
  ParamPoly p = parser.parse();
  // "0" parses as the monomial 0*1, which add_term already drops.
  return p;
}

}  // namespace gg2x
