#pragma once

// Plain-text instance formats.
//
//   graph:      "n m" header, then m lines "u v"
//   bicolored:  graph lines plus "c u v b" (b in {0,1}) and "k <int>"
//   annotated:  graph lines plus "s v", "k <int>", "pattern cycle|path <l>"
//   edit list:  "del u v" / "add u v"
//
// '#' starts a comment line; blank lines are ignored.

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cokernel/gadgets.hpp"
#include "cokernel/graph.hpp"
#include "cokernel/kernelizer.hpp"

namespace cokernel {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Graph parse_graph(std::string_view text);
BicoloredInstance parse_bicolored(std::string_view text);
AnnotatedInstance parse_annotated(std::string_view text);
/// Pairs must be legal for `variant` on g (checked by the caller); the
/// keywords only have to agree with whether the pair is currently an edge.
EditSet parse_edit_list(std::string_view text, Variant variant);

std::string format_graph(const Graph& g);
std::string format_bicolored(const BicoloredInstance& inst);
std::string format_annotated(const AnnotatedInstance& inst);
/// "del u v" for pairs that are edges of g, "add u v" otherwise.
std::string format_edit_list(const Graph& g, const EditSet& f);

nlohmann::json to_json(const RuleApplication& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace cokernel
