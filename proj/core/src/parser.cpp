#include "ordforge/parser.hpp"

#include <cctype>

namespace ordforge {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  TermPtr parse() {
    skip_ws();
    TermPtr t = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' " + what);
  }

  bool starts_with(const char* s) const {
    return text_.compare(pos_, std::string(s).size(), s) == 0;
  }

  std::string parse_label() {
    size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a label");
    return text_.substr(start, pos_ - start);
  }

  std::string parse_index_token() {
    size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_' || peek() == '.' || peek() == '-' ||
                      peek() == '^' || peek() == '@' || peek() == '+' ||
                      peek() == ' '))
      ++pos_;
    if (pos_ == start) fail("expected a shape index");
    return text_.substr(start, pos_ - start);
  }

  int parse_number() {
    size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  std::string parse_at_label() {
    expect('@', "before a base label");
    return parse_label();
  }

  std::string parse_bracket_label() {
    expect('[', "before a base label");
    std::string l = parse_at_label();
    expect(']', "after the base label");
    return l;
  }

  TermPtr parse_sum() {
    std::vector<TermPtr> parts;
    parts.push_back(parse_item());
    skip_ws();
    while (consume('+')) {
      skip_ws();
      parts.push_back(parse_item());
      skip_ws();
    }
    return mk_sum(std::move(parts));
  }

  TermPtr parse_exponent() {
    if (consume('(')) {
      skip_ws();
      TermPtr t = parse_sum();
      skip_ws();
      expect(')', "to close the exponent");
      return t;
    }
    return parse_item();
  }

  TermPtr parse_item() {
    skip_ws();
    if (eof()) fail("unexpected end of input");

    if (consume('0')) return mk_zero();

    if (peek() == '2') {
      ++pos_;
      expect('^', "after '2'");
      return mk_atom(Head::Pow2, parse_at_label());
    }

    if (peek() == 'w') {
      ++pos_;
      expect('^', "after 'w'");
      return mk_unary(Head::Power, parse_exponent());
    }

    if (peek() == 'e' && !starts_with("el")) {
      ++pos_;
      return mk_atom(Head::Eps, parse_bracket_label());
    }

    if (starts_with("el")) {
      pos_ += 2;
      return mk_atom(Head::Elem, parse_bracket_label());
    }

    if (starts_with("phi")) {
      pos_ += 3;
      std::string u = parse_bracket_label();
      expect('(', "after the phi index");
      TermPtr arg = parse_sum();
      skip_ws();
      expect(')', "to close phi");
      return mk_unary(Head::Phi, arg, u);
    }

    if (peek() == 'G') {
      ++pos_;
      return mk_atom(Head::Gamma, parse_bracket_label());
    }

    if (starts_with("th")) {
      pos_ += 2;
      if (consume('_')) {
        int n = parse_number();
        expect('(', "after the collapsing level");
        TermPtr arg = parse_sum();
        skip_ws();
        expect(')', "to close th_n");
        return mk_unary(Head::ThetaN, arg, "", n);
      }
      expect('(', "after 'th'");
      TermPtr arg = parse_sum();
      skip_ws();
      expect(')', "to close th");
      return mk_unary(Head::Theta, arg);
    }

    if (starts_with("OmW")) {
      pos_ += 3;
      if (consume('*')) return mk_atom(Head::OmegaWTimes, parse_at_label());
      return mk_atom(Head::OmegaW);
    }

    if (starts_with("Om")) {
      pos_ += 2;
      if (consume('_')) return mk_atom(Head::OmegaN, "", parse_number());
      return mk_atom(Head::Omega);
    }

    if (peek() == 'E') {
      ++pos_;
      if (peek() == '[') return mk_atom(Head::EpsX, parse_bracket_label());
      expect('{', "after 'E'");
      std::string c = parse_index_token();
      expect('}', "after the shape index");
      expect('(', "before the coefficients");
      std::vector<TermPtr> coeffs;
      skip_ws();
      if (!consume(')')) {
        coeffs.push_back(parse_sum());
        skip_ws();
        while (consume(',')) {
          skip_ws();
          coeffs.push_back(parse_sum());
          skip_ws();
        }
        expect(')', "to close the coefficients");
      }
      return mk_node(Head::EpsD, c, 0, std::move(coeffs));
    }

    if (peek() == 'c') {
      ++pos_;
      expect('_', "after 'c'");
      return mk_atom(Head::Const, "", parse_number());
    }

    if (starts_with("den")) {
      pos_ += 3;
      expect('{', "after 'den'");
      std::string c = parse_index_token();
      expect('}', "after the shape index");
      expect('(', "before the coefficients");
      std::vector<TermPtr> coeffs;
      skip_ws();
      if (!consume(')')) {
        coeffs.push_back(mk_atom(Head::Elem, parse_at_label()));
        skip_ws();
        while (consume(',')) {
          skip_ws();
          coeffs.push_back(mk_atom(Head::Elem, parse_at_label()));
          skip_ws();
        }
        expect(')', "to close the coefficients");
      }
      return mk_node(Head::Den, c, 0, std::move(coeffs));
    }

    fail("unrecognized term");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(const std::string& text) { return Parser(text).parse(); }

}  // namespace ordforge
