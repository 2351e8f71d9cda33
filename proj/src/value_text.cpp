#include "cgt/value_text.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace cgt {

namespace {

std::string render_canonical(Game k) {
  if (auto [ls, rs] = k.stops(); ls == rs && ls.is_integer()) {
    // Integers in canonical form are recognized by value; non-integer
    // numbers fall through to the braces form.
    Game n = integer_game(ls.numerator());
    if (n == k) return std::to_string(ls.numerator());
  }
  if (k == star()) return "*";
  int b = k.birthday();
  for (int n = 1; n <= b; ++n) {
    std::string prefix = n == 1 ? "" : std::to_string(n);
    if (k == up_multiple(n)) return prefix + "^";
    if (k == up_star_multiple(n)) return prefix + "^*";
    if (k == down_multiple(n)) return prefix + "v";
    if (k == down_star_multiple(n)) return prefix + "v*";
  }
  std::string out = "{";
  bool first = true;
  for (Game gl : k.left_options()) {
    if (!first) out += ",";
    first = false;
    out += render_canonical(gl);
  }
  out += "|";
  first = true;
  for (Game gr : k.right_options()) {
    if (!first) out += ",";
    first = false;
    out += render_canonical(gr);
  }
  out += "}";
  return out;
}

}  // namespace

std::string render_value(Game g) { return render_canonical(g.canonical()); }

std::string render_tree(Game g) {
  if (g == zero_game()) return "0";
  std::string out = "{";
  bool first = true;
  for (Game gl : g.left_options()) {
    if (!first) out += ",";
    first = false;
    out += render_tree(gl);
  }
  out += "|";
  first = true;
  for (Game gr : g.right_options()) {
    if (!first) out += ",";
    first = false;
    out += render_tree(gr);
  }
  out += "}";
  return out;
}

namespace {

class ValueParser {
 public:
  explicit ValueParser(std::string_view s) : s_(s) {}

  Game parse() {
    Game g = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return g;
  }

 private:
  Game parse_expr() {
    Game g = parse_term();
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '+') {
        ++pos_;
        g = g + parse_term();
      } else {
        return g;
      }
    }
  }

  Game parse_term() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a game term");
    char c = s_[pos_];
    if (c == '{') return parse_braces();
    if (c == '*') {
      ++pos_;
      return star();
    }
    if (c == '^' || c == 'v') {
      ++pos_;
      return finish_multiple(1, c);
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
      return parse_number();
    fail("expected a game term");
  }

  Game parse_braces() {
    ++pos_;  // '{'
    std::vector<Game> left = parse_list('|');
    expect('|');
    std::vector<Game> right = parse_list('}');
    expect('}');
    return Game::make(left, right);
  }

  std::vector<Game> parse_list(char stop) {
    std::vector<Game> res;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == stop) return res;
    res.push_back(parse_expr());
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        res.push_back(parse_expr());
      } else {
        return res;
      }
    }
  }

  Game parse_number() {
    bool negative = false;
    if (s_[pos_] == '-') {
      negative = true;
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected digits after '-'");
    }
    long long n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == '^' || s_[pos_] == 'v')) {
      char kind = s_[pos_];
      ++pos_;
      if (negative || n < 1) fail("multiple atoms require a positive count");
      return finish_multiple(static_cast<int>(n), kind);
    }
    return integer_game(negative ? -n : n);
  }

  Game finish_multiple(int n, char kind) {
    bool with_star = pos_ < s_.size() && s_[pos_] == '*';
    if (with_star) ++pos_;
    if (kind == '^')
      return with_star ? up_star_multiple(n) : up_multiple(n);
    return with_star ? down_star_multiple(n) : down_multiple(n);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line_, static_cast<int>(pos_ - line_start_) + 1, msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

Game parse_value(std::string_view text) { return ValueParser(text).parse(); }

}  // namespace cgt
