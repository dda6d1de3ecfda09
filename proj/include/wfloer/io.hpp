#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "wfloer/ainfty.hpp"

namespace wfloer {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented records:
//   field Q | field <prime>
//   chord <id> weight=<int> degree=<int> [action=<rational>] [from=<id>] [to=<id>]
//         [winding=<int>] [location=inside|outside]
//   const d=<int> F=<list>|- w=<list> in=<list> out=<id> value=<scalar>
//   empty <id>
// '#' starts a comment. Lists are comma separated.
struct Document {
  Field field = Field::rationals();
  ChordSet chords;
  ConstantsTable table;
  std::set<std::string> formal_points;
};

Document parse_document(const std::string& text);
Document read_document(const std::string& path);  // throws std::runtime_error if unreadable
std::string serialize(const Document& doc);

bool same_document(const Document& a, const Document& b);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace wfloer
