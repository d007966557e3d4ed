#include "target_parser.hpp"

#include <cctype>

#include "bgr/colored_bigraph.hpp"

namespace bgr::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string s) : s_(std::move(s)) {}

  TargetGraph parse() {
    if (s_.empty()) fail("empty target");
    TargetGraph h;
    for (;;) {
      term(h);
      if (pos_ == s_.size()) break;
      if (s_[pos_] != '+') fail("expected '+'");
      ++pos_;
    }
    return h;
  }

 private:
  void term(TargetGraph& h) {
    int count = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      count = number();
      if (peek() != 'x' && peek() != '*') fail("expected 'x' after a copy count");
      ++pos_;
      if (count < 1) fail("copy count must be positive");
    }
    const Component c = component();
    for (int i = 0; i < count; ++i) h.add(c);
  }

  Component component() {
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(peek())));
    ++pos_;
    if (kind == 'P') return PathV{number()};
    if (kind == 'C') {
      const int n = number();
      if (n % 2 != 0) {
        fail("C" + std::to_string(n) + " is an odd cycle, which is not bipartite");
      }
      return EvenCycle{n};
    }
    if (kind == 'K') {
      int s = number();
      if (peek() != ',') fail("expected ',' in K s,t");
      ++pos_;
      int t = number();
      if (s > t) std::swap(s, t);
      if (s == 1) return Star{t};
      return Biclique{s, t};
    }
    --pos_;
    fail("expected P, C or K");
  }

  int number() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(v);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("target '" + s_ + "' at position " + std::to_string(pos_) + ": " + why);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

TargetGraph parseTarget(const std::string& text) {
  std::string cleaned;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '_' || c == '{' || c == '}') continue;
    cleaned += c;
  }
  return Parser(cleaned).parse();
}

}  // namespace bgr::cli
