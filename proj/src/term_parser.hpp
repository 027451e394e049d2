#ifndef HSPECHT_SRC_TERM_PARSER_HPP
#define HSPECHT_SRC_TERM_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hspecht/common.hpp"

namespace hspecht::detail {

// One factor of a product term: a rational literal or symbol^power such as x3^2.
struct Factor {
  bool is_number = false;
  Rational value;
  char symbol = 0;
  int index = 0;
  int power = 1;
};

struct ParsedTerm {
  int sign = 1;
  std::vector<Factor> factors;
};

// Grammar: sum := term (('+'|'-') term)*, term := ['+'|'-'] factor ('*' factor)*,
// factor := integer ['/' integer] | symbol index ['^' integer].
// `symbols` lists the accepted symbol letters. Whitespace is ignored.
std::vector<ParsedTerm> parse_sum(const std::string& text, std::string_view symbols);

}  // namespace hspecht::detail

#endif
