#include "tropkit/parse.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "tropkit/error.hpp"

namespace tropkit {

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, bool allow_y) : text_(text), allow_y_(allow_y) {}

  std::map<Monomial, Rational> parse() {
    std::map<Monomial, Rational> out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    while (true) {
      parse_term(out);
      skip_space();
      if (at_end()) break;
      expect('+');
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_number() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+';
  }

  // Returns nullopt for -inf.
  std::optional<Rational> parse_number() {
    skip_space();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    skip_space();
    if (text_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      if (text_[start] != '-') fail("only -inf is allowed as an infinite coefficient");
      return std::nullopt;
    }
    std::string buf(text_.substr(start, pos_ - start));
    std::size_t digits = 0;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '/')) {
      buf.push_back(peek());
      ++pos_;
      ++digits;
    }
    if (digits == 0) fail("expected a number");
    std::string cleaned;
    for (char c : buf) {
      if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
    }
    return parse_rational(cleaned);
  }

  int parse_exponent() {
    skip_space();
    if (peek() != '^') return 1;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void parse_term(std::map<Monomial, Rational>& out) {
    skip_space();
    std::optional<Rational> coef = Rational(0);
    bool have_coef = false;
    if (peek() == '(') {
      ++pos_;
      coef = parse_number();
      expect(')');
      have_coef = true;
    } else if (starts_number()) {
      coef = parse_number();
      have_coef = true;
    }
    skip_space();
    if (have_coef && peek() == '*') {
      ++pos_;
      skip_space();
    }
    Monomial m{0, 0};
    bool have_var = false;
    while (true) {
      skip_space();
      char c = peek();
      if (c == 'x' || c == 'y') {
        if (c == 'y' && !allow_y_) fail("variable y not allowed in a univariate polynomial");
        ++pos_;
        int e = parse_exponent();
        (c == 'x' ? m.first : m.second) += e;
        have_var = true;
        skip_space();
        if (peek() == '*') {
          ++pos_;
          skip_space();
          if (peek() != 'x' && peek() != 'y') fail("expected variable after '*'");
        }
      } else {
        break;
      }
    }
    if (!have_coef && !have_var) fail("expected a term");
    if (!coef) return;
    auto [it, inserted] = out.emplace(m, *coef);
    if (!inserted && *coef > it->second) it->second = *coef;
  }

  std::string_view text_;
  bool allow_y_;
  std::size_t pos_ = 0;
};

}  // namespace

std::map<Monomial, Rational> parse_polynomial_terms(std::string_view text, bool allow_y) {
  return TermParser(text, allow_y).parse();
}

std::string format_polynomial_terms(const std::map<Monomial, Rational>& terms) {
  std::map<std::pair<int, int>, const Rational*> ordered;
  for (const auto& [m, c] : terms) ordered[{m.second, m.first}] = &c;
  std::string out;
  for (const auto& [key, coef] : ordered) {
    int i = key.second;
    int j = key.first;
    if (!out.empty()) out += " + ";
    std::string mono;
    if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j > 0) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string("y") : "y^" + std::to_string(j));
    std::string c = to_string(*coef);
    if (mono.empty()) {
      out += *coef < 0 ? "(" + c + ")" : c;
    } else if (*coef == 0) {
      out += mono;
    } else {
      out += (*coef < 0 ? "(" + c + ")" : c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace tropkit
