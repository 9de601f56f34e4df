#pragma once
// Text formats for modules, submodules, pattern-completion problems, upset
// families, and bar lists.  All serializers emit a canonical form (sorted,
// zero entries omitted) so that serialize ∘ parse ∘ serialize is stable.

#include <iosfwd>
#include <string>

#include "pmod/ci.hpp"
#include "pmod/distances.hpp"
#include "pmod/module.hpp"

namespace pmod {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CommutativityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// module text format:
//   pmod 1
//   field <p>
//   axes <d>
//   size <n1> ... <nd>
//   point <c1> ... <cd> <dim>          (omitted when dim = 0)
//   edge <c1> ... <cd> <axis> <entries row-major>   (omitted when zero)
std::string serialize_module(const Module& M);
ModPtr parse_module(const std::string& text);  // validates commutativity

// submodule text format (ambient stored separately):
//   pmodsub 1
//   point <c1> ... <cd> <k> <entries row-major, dim(q) x k>
std::string serialize_submodule(const Submodule& s);
Submodule parse_submodule(const std::string& text, ModPtr ambient);

// pattern problem:
//   ciproblem 1
//   n <n>
//   P        (n rows of '*'/'.')
//   Q        (n rows)
std::string serialize_ci(const CIProblem& prob);
CIProblem parse_ci(const std::string& text);

// upset family: one upset per line, generators as "x,y" pairs;
//   upsets 1
//   axes <d>
//   upset <g1...> ; <g2...> ; ...
std::string serialize_upsets(const std::vector<UpsetShape>& U);
std::vector<UpsetShape> parse_upsets(const std::string& text);

// bars: "bar <a> <b>" per line
std::string serialize_bars(const std::vector<Bar>& bars);
std::vector<Bar> parse_bars(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pmod
