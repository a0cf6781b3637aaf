#include "ncalg/parse.hpp"

#include <cctype>
#include <string>

#include "ncalg/errors.hpp"

namespace ncalg {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Polynomial parse() {
    Polynomial result;
    skip_space();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1 : 1;
    }
    parse_term(result, sign);
    while (true) {
      skip_space();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      get();
      parse_term(result, op == '-' ? -1 : 1);
    }
    return result;
  }

 private:
  void parse_term(Polynomial& out, int sign) {
    skip_space();
    Scalar coeff = sign;
    Word word;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= parse_coefficient();
      skip_space();
      if (peek() != '*') {
        out.add_term(word, coeff);
        return;
      }
      get();
    }
    word *= parse_factor();
    while (true) {
      skip_space();
      if (peek() != '*') break;
      get();
      word *= parse_factor();
    }
    out.add_term(word, coeff);
  }

  Scalar parse_coefficient() {
    BigInt num = parse_natural();
    skip_space();
    if (peek() != '/') return Scalar(num);
    std::size_t slash = pos_;
    get();
    skip_space();
    BigInt den = parse_natural();
    if (den == 0) throw ParseError("zero denominator", slash);
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }

  BigInt parse_natural() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Word parse_factor() {
    skip_space();
    std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected a variable");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    auto letter = alphabet_.index_of(name);
    if (!letter) throw ParseError("unknown variable '" + std::string(name) + "'", start);
    skip_space();
    std::size_t exponent = 1;
    if (peek() == '^') {
      get();
      std::size_t exp_pos = pos_;
      BigInt e = parse_natural();
      if (!e.fits_ulong_p() || e > 4096) throw ParseError("exponent too large", exp_pos);
      exponent = e.get_ui();
    }
    return Word::power(*letter, exponent);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    if (at_end()) throw ParseError(what + ", found end of input", pos_);
    throw ParseError(what + ", found '" + std::string(1, text_[pos_]) + "'", pos_);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

}  // namespace ncalg
