#include <cctype>
#include <string>

#include "f1zeta/catalog.hpp"
#include "f1zeta/errors.hpp"

namespace f1zeta {

namespace {

const std::vector<std::string> kTermKeywords{"P(", "A(", "T(", "Gr(", "GL(", "SL(", "Flag(", "Group("};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += "'" + items[i] + "'";
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SchemeDescriptor parse_expr() {
    SchemeDescriptor lhs = parse_term();
    for (;;) {
      skip_blanks();
      if (at_end()) return lhs;
      const char c = text_[pos_];
      if (c != 'x' && c != 'X') fail({"x", "end of input"});
      ++pos_;
      lhs = SchemeDescriptor::product(std::move(lhs), parse_term());
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_blanks() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const { fail_at(pos_, std::move(expected)); }

  [[noreturn]] void fail_at(std::size_t offset, std::vector<std::string> expected) const {
    std::string found = offset < text_.size() ? "'" + std::string(1, text_[offset]) + "'" : "end of input";
    std::string msg =
        "parse error at offset " + std::to_string(offset) + ": expected " + join(expected) + ", found " + found;
    throw ParseError(offset, std::move(expected), msg);
  }

  void expect(char c) {
    skip_blanks();
    if (at_end() || text_[pos_] != c) fail({std::string(1, c)});
    ++pos_;
  }

  bool accept(char c) {
    skip_blanks();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int parse_int() {
    skip_blanks();
    const std::size_t start = pos_;
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw InvalidRank("integer parameter at offset " + std::to_string(start) + " is too large");
      ++pos_;
    }
    if (pos_ == start) fail({"integer"});
    return static_cast<int>(value);
  }

  Family parse_family() {
    skip_blanks();
    if (at_end()) fail({"A", "B", "C", "D", "E", "F", "G"});
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_])));
    if (c < 'A' || c > 'G') fail({"A", "B", "C", "D", "E", "F", "G"});
    ++pos_;
    return family_from_letter(c);
  }

  void expect_word(std::string_view word) {
    skip_blanks();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    if (lower(text_.substr(start, end - start)) != word) fail({std::string(word)});
    pos_ = end;
  }

  SchemeDescriptor parse_term() {
    skip_blanks();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    const std::string word = lower(text_.substr(start, end - start));
    pos_ = end;

    if (word == "p" || word == "a" || word == "t" || word == "gl" || word == "sl") {
      expect('(');
      const int n = parse_int();
      expect(')');
      if (word == "p") return SchemeDescriptor::projective_space(n);
      if (word == "a") return SchemeDescriptor::affine_space(n);
      if (word == "t") return SchemeDescriptor::torus(n);
      if (word == "gl") return SchemeDescriptor::general_linear(n);
      return SchemeDescriptor::special_linear(n);
    }
    if (word == "gr") {
      expect('(');
      const int k = parse_int();
      expect(',');
      const int n = parse_int();
      expect(')');
      return SchemeDescriptor::grassmannian(k, n);
    }
    if (word == "flag" || word == "group") {
      expect('(');
      const Family family = parse_family();
      const int rank = parse_int();
      int torus = 0;
      if (word == "group" && accept(',')) {
        expect_word("torus");
        expect('=');
        torus = parse_int();
      }
      expect(')');
      RootSystemSpec root = RootSystemSpec::make({{family, rank}});
      if (word == "flag") return SchemeDescriptor::flag_variety(std::move(root));
      return SchemeDescriptor::reductive_group(std::move(root), torus);
    }
    fail_at(start, kTermKeywords);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SchemeDescriptor parse(std::string_view text) { return Parser(text).parse_expr(); }

std::string format_parse_error(std::string_view text, std::size_t offset, const std::string& message) {
  std::string out(text);
  out += "\n";
  out += std::string(offset, ' ');
  out += "^\n";
  out += message;
  return out;
}

}  // namespace f1zeta
