#include "term_parser.hpp"

#include <cctype>

namespace hspecht::detail {

namespace {

class Lexer {
 public:
  Lexer(const std::string& text, std::string_view symbols) : symbols_(symbols) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) compact_ += c;
    }
  }

  std::vector<ParsedTerm> run() {
    if (compact_.empty()) throw InvalidInput("empty expression");
    std::vector<ParsedTerm> terms;
    terms.push_back(term());
    while (pos_ < compact_.size()) {
      char c = compact_[pos_];
      if (c != '+' && c != '-') fail();
      terms.push_back(term());
    }
    return terms;
  }

 private:
  [[noreturn]] void fail() const {
    std::size_t end = pos_;
    while (end < compact_.size() && compact_[end] != '+' && compact_[end] != '-' && compact_[end] != '*') ++end;
    std::string token = pos_ < compact_.size() ? compact_.substr(pos_, std::max<std::size_t>(end - pos_, 1)) : "<end>";
    throw InvalidInput("unexpected token '" + token + "' in expression '" + compact_ + "'");
  }

  bool at_digit() const { return pos_ < compact_.size() && std::isdigit(static_cast<unsigned char>(compact_[pos_])); }

  std::string digits() {
    if (!at_digit()) fail();
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return compact_.substr(start, pos_ - start);
  }

  ParsedTerm term() {
    ParsedTerm t;
    if (pos_ < compact_.size() && (compact_[pos_] == '+' || compact_[pos_] == '-')) {
      t.sign = compact_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    t.factors.push_back(factor());
    while (pos_ < compact_.size() && compact_[pos_] == '*') {
      ++pos_;
      t.factors.push_back(factor());
    }
    return t;
  }

  Factor factor() {
    Factor f;
    if (at_digit()) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ < compact_.size() && compact_[pos_] == '/') {
        ++pos_;
        den = digits();
      }
      f.is_number = true;
      f.value = parse_rational(num + "/" + den);
      return f;
    }
    if (pos_ >= compact_.size() || symbols_.find(compact_[pos_]) == std::string_view::npos) fail();
    f.symbol = compact_[pos_++];
    f.index = std::stoi(digits());
    if (f.index < 1) fail();
    if (pos_ < compact_.size() && compact_[pos_] == '^') {
      ++pos_;
      f.power = std::stoi(digits());
    }
    return f;
  }

  std::string compact_;
  std::string_view symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_sum(const std::string& text, std::string_view symbols) {
  try {
    return Lexer(text, symbols).run();
  } catch (const std::out_of_range&) {
    throw InvalidInput("number out of range in expression '" + text + "'");
  }
}

}  // namespace hspecht::detail
