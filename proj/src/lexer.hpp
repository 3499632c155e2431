#pragma once

// Tokenizer shared by the coefficient and element parsers.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckhopf::detail {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Tensor, End };

struct Token {
  Tok kind;
  std::string text;
};

inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Name, s.substr(i, j - i)});
      i = j;
    } else if (s.compare(i, 3, "(x)") == 0) {
      out.push_back({Tok::Tensor, "(x)"});
      i += 3;
    } else {
      Tok k;
      switch (ch) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
          throw std::invalid_argument("unexpected character '" + std::string(1, ch) + "' in: " + s);
      }
      out.push_back({k, std::string(1, ch)});
      ++i;
    }
  }
  out.push_back({Tok::End, ""});
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(const std::string& text) : text_(text), toks_(tokenize(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument(msg + " at token '" + peek().text + "' in: " + text_);
  }

  /// Optional `^ [-]int` suffix.
  int exponent() {
    if (!accept(Tok::Caret)) return 1;
    bool neg = accept(Tok::Minus);
    if (peek().kind != Tok::Number) fail("expected integer exponent");
    int v = std::stoi(next().text);
    return neg ? -v : v;
  }

 private:
  std::string text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace ckhopf::detail
