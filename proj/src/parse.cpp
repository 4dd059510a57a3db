#include "bkl/parse.hpp"

#include <cctype>
#include <string>

namespace bkl {
namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      std::string msg = "expected '";
      msg += c;
      msg += "'";
      throw ParseError(msg, pos_);
    }
    ++pos_;
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer", start);
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (get() - '0');
      if (value > 1'000'000'000L) throw ParseError("integer too large", start);
    }
    return negative ? -value : value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Parsed {
  BandWord band;
  ArtinWord artin;
  bool artin_only = true;
};

Parsed parse(std::string_view text) {
  Lexer lex(text);
  lex.skip_space();
  if (lex.peek() != 'B') throw ParseError("word must start with header B<n>:", lex.pos());
  lex.get();
  const std::size_t n_pos = lex.pos();
  const long n = lex.integer();
  if (n < 1 || n > kMaxStrands)
    throw ParseError("strand count must be in [1, " + std::to_string(kMaxStrands) + "]", n_pos);
  lex.expect(':');

  Parsed out;
  out.band = BandWord{static_cast<int>(n), 0, {}};
  out.artin = ArtinWord{static_cast<int>(n), {}};

  while (!lex.done()) {
    const std::size_t tok_pos = lex.pos();
    const char kind = lex.get();
    int i = 0;
    int j = 0;
    switch (kind) {
      case 'a':
      case 'A': {
        lex.expect('(');
        i = static_cast<int>(lex.integer());
        lex.expect(',');
        j = static_cast<int>(lex.integer());
        lex.expect(')');
        if (i >= j) {
          std::string msg = "band indices must satisfy i<j";
          if (i > j)
            msg += ", did you mean " + std::string(1, kind) + "(" + std::to_string(j) + "," +
                   std::to_string(i) + ")?";
          throw ParseError(msg, tok_pos);
        }
        if (i < 1 || j > n)
          throw ParseError("band index out of range for B" + std::to_string(n), tok_pos);
        break;
      }
      case 's':
      case 'S': {
        lex.expect('(');
        i = static_cast<int>(lex.integer());
        lex.expect(')');
        if (i < 1 || i >= n)
          throw ParseError("Artin index out of range for B" + std::to_string(n), tok_pos);
        break;
      }
      case 'd':
      case 'D':
        break;
      default:
        throw ParseError(std::string("unexpected character '") + kind + "'", tok_pos);
    }

    long exponent = 1;
    lex.skip_space();
    if (lex.peek() == '^') {
      lex.get();
      exponent = lex.integer();
    }
    if (std::isupper(static_cast<unsigned char>(kind))) exponent = -exponent;

    if (kind == 'd' || kind == 'D') {
      out.artin_only = false;
      out.band = concat(out.band, BandWord{out.band.n, static_cast<int>(exponent), {}});
      continue;
    }
    const int sign = exponent < 0 ? -1 : 1;
    const long reps = exponent < 0 ? -exponent : exponent;
    if (kind == 's' || kind == 'S') {
      for (long r = 0; r < reps; ++r) {
        out.artin.letters.push_back({i, sign});
        out.band.letters.push_back({i, i + 1, sign});
      }
    } else {
      out.artin_only = false;
      for (long r = 0; r < reps; ++r) out.band.letters.push_back({i, j, sign});
    }
  }
  return out;
}

}  // namespace

std::variant<BandWord, ArtinWord> parse_word(std::string_view text) {
  Parsed p = parse(text);
  if (p.artin_only && !p.artin.letters.empty()) return p.artin;
  return p.band;
}

BandWord parse_band_word(std::string_view text) { return parse(text).band; }

}  // namespace bkl
