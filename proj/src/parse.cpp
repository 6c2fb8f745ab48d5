#include "recip/parse.hpp"

#include <cctype>
#include <utility>

namespace recip {

namespace {

std::string format(const Int& a, const Int& b, const char* sym) {
  if (b == 0) return a.get_str();
  std::string wterm;
  if (b == 1)
    wterm = sym;
  else if (b == -1)
    wterm = std::string("-") + sym;
  else
    wterm = b.get_str() + "*" + sym;
  if (a == 0) return wterm;
  return a.get_str() + (b > 0 ? "+" : "") + wterm;
}

[[noreturn]] void fail(const std::string& text, std::size_t pos, const std::string& why) {
  throw DomainError("parse-error", "bad ring literal \"" + text + "\": " + why +
                                       " at position " + std::to_string(pos + 1));
}

// Signed sums of terms; a term is INT, INT*sym, or sym.
std::pair<Int, Int> parse_pair(const std::string& text, char sym) {
  if (text.empty()) throw DomainError("parse-error", "empty ring literal");
  Int a = 0, b = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      if (pos == text.size()) fail(text, pos, "dangling sign");
    }
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      Int value(text.substr(start, pos - start));
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        if (pos == text.size() || text[pos] != sym)
          fail(text, pos, std::string("expected '") + sym + "' after '*'");
        ++pos;
        b += sign * value;
      } else {
        a += sign * value;
      }
    } else if (text[pos] == sym) {
      ++pos;
      b += sign;
    } else {
      fail(text, pos, "unexpected character");
    }
    if (pos < text.size() && text[pos] != '+' && text[pos] != '-')
      fail(text, pos, "expected '+' or '-'");
  }
  return {std::move(a), std::move(b)};
}

}  // namespace

std::string eis_to_string(const Eisenstein& x) { return format(x.a, x.b, "w"); }
std::string gauss_to_string(const GaussianInt& x) { return format(x.a, x.b, "i"); }

Eisenstein parse_eisenstein(const std::string& text) {
  auto [a, b] = parse_pair(text, 'w');
  return {std::move(a), std::move(b)};
}

GaussianInt parse_gaussian(const std::string& text) {
  auto [a, b] = parse_pair(text, 'i');
  return {std::move(a), std::move(b)};
}

}  // namespace recip
