#include "asw/text.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "asw/error.hpp"

namespace asw {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

unsigned parse_unsigned(std::string_view s, const char* what) {
  s = trim(s);
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", 0);
  return v;
}

// Recursive descent over the Laurent grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := power ('*'? power)*
//   power  := atom ('^' ['-'] digits)?
//   atom   := digits | 'g' | 't' | 'O(' expr ')' | '(' expr ')'
class LaurentParser {
 public:
  LaurentParser(std::string_view text, const FqField& field)
      : s_(text), field_(field), zero_(LaurentFq(field.zero())) {}

  LaurentFq parse() {
    LaurentFq f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::optional<char> peek() {
    skip();
    if (pos_ >= s_.size()) return std::nullopt;
    return s_[pos_];
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long digits() {
    skip();
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  LaurentFq expr() {
    LaurentFq acc = zero_;
    bool negate = accept('-');
    if (!negate) accept('+');
    for (;;) {
      LaurentFq t = term();
      acc = negate ? acc - t : acc + t;
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return acc;
      }
    }
  }

  bool starts_atom() {
    auto c = peek();
    return c && (std::isdigit(static_cast<unsigned char>(*c)) || *c == 'g' || *c == 't' || *c == 'O' || *c == '(');
  }

  LaurentFq term() {
    LaurentFq acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (starts_atom()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  LaurentFq power() {
    const std::size_t at = pos_;
    LaurentFq base = atom();
    if (!accept('^')) return base;
    const bool neg = accept('-');
    const long e = digits();
    if (!neg) return base.pow(static_cast<std::uint64_t>(e));
    if (!base.is_exact() || !base.is_monomial()) {
      pos_ = at;
      fail("negative power of a non-monomial");
    }
    const FqElem c = base.leading_coefficient().pow(static_cast<std::uint64_t>(e)).inverse();
    return LaurentFq::monomial(c, -static_cast<int>(e) * *base.valuation());
  }

  LaurentFq atom() {
    auto c = peek();
    if (!c) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(*c))) return LaurentFq::constant(field_.from_integer(digits()));
    if (*c == 'g') {
      ++pos_;
      return LaurentFq::constant(field_.generator());
    }
    if (*c == 't') {
      ++pos_;
      return LaurentFq::monomial(field_.one(), 1);
    }
    if (*c == 'O') {
      ++pos_;
      expect('(');
      expect('t');
      int n = 1;
      if (accept('^')) {
        const bool neg = accept('-');
        n = static_cast<int>(digits());
        if (neg) n = -n;
      }
      expect(')');
      return LaurentFq(field_.zero(), n);
    }
    if (*c == '(') {
      ++pos_;
      LaurentFq inner = expr();
      expect(')');
      return inner;
    }
    fail("unexpected '" + std::string(1, *c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const FqField& field_;
  LaurentFq zero_;
};

}  // namespace

const FqField& field_from_params(unsigned p, unsigned e, const std::vector<unsigned>& modulus) {
  if (modulus.empty()) return FqField::conway(p, e);
  if (modulus.size() != e + 1)
    throw DomainError("modulus has degree " + std::to_string(modulus.size() - 1) + " but e=" + std::to_string(e));
  return FqField::with_modulus(p, modulus);
}

const FqField& parse_field_spec(std::string_view spec) {
  std::optional<unsigned> p;
  unsigned e = 1;
  std::vector<unsigned> modulus;
  // The modulus list is comma-separated too, so it must come last.
  const auto mod_at = spec.find("modulus=");
  std::string_view head = spec.substr(0, mod_at);
  if (mod_at != std::string_view::npos) {
    for (auto c : split(spec.substr(mod_at + 8), ',')) modulus.push_back(parse_unsigned(c, "modulus coefficient"));
  }
  for (auto item : split(head, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value in field spec", 0);
    const auto key = trim(item.substr(0, eq));
    if (key == "p") {
      p = parse_unsigned(item.substr(eq + 1), "p");
    } else if (key == "e") {
      e = parse_unsigned(item.substr(eq + 1), "e");
    } else {
      throw ParseError("unknown field spec key '" + std::string(key) + "'", 0);
    }
  }
  if (!p) throw ParseError("field spec needs p=<prime>", 0);
  return field_from_params(*p, e, modulus);
}

std::string field_spec_string(const FqField& field) {
  std::string s = "p=" + std::to_string(field.characteristic()) + ",e=" + std::to_string(field.degree()) + ",modulus=";
  const auto m = field.modulus();
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s;
}

LaurentFq parse_laurent(std::string_view text, const FqField& field) { return LaurentParser(text, field).parse(); }

FqElem parse_fq(std::string_view text, const FqField& field) {
  const LaurentFq f = parse_laurent(text, field);
  if (!f.is_exact() || (!f.is_zero() && (f.lowest_exponent() != 0 || f.highest_exponent() != 0)))
    throw ParseError("expected a field element", 0);
  return f.is_zero() ? field.zero() : f.leading_coefficient();
}

WittK parse_witt(std::string_view text, const FqField& field) {
  std::size_t open = 0;
  while (open < text.size() && std::isspace(static_cast<unsigned char>(text[open]))) ++open;
  std::size_t close = text.size();
  while (close > open && std::isspace(static_cast<unsigned char>(text[close - 1]))) --close;
  if (open >= close || text[open] != '(' || text[close - 1] != ')')
    throw ParseError("Witt vector must be written as (a0; a1; ...)", open);
  std::vector<LaurentFq> comps;
  int depth = 0;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i < close - 1; ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced ')'", i);
    if (text[i] == ';' && depth == 0) {
      try {
        comps.push_back(parse_laurent(text.substr(start, i - start), field));
      } catch (const ParseError& err) {
        throw ParseError(err.message(), start + err.position());
      }
      start = i + 1;
    }
  }
  try {
    comps.push_back(parse_laurent(text.substr(start, close - 1 - start), field));
  } catch (const ParseError& err) {
    throw ParseError(err.message(), start + err.position());
  }
  return WittK(std::move(comps));
}

}  // namespace asw
