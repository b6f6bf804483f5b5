#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "prolong/monomial_comb.hpp"
#include "prolong/phylo.hpp"
#include "prolong/secant.hpp"

namespace prolong::io {

using Json = nlohmann::json;

// Malformed input file or document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path);  // "-" reads stdin
void write_text(const std::string& path, const std::string& text);  // "-" writes stdout
Json parse_json(const std::string& text, const std::string& what);
// Two-space indented with a trailing newline.
std::string dump(const Json& j);

VarSet varset_from_json(const Json& j);
Monomial parse_monomial(const std::string& text, const VarSet& vars);

// {"vars": [...], "degree": d, "basis": [...]}; any spanning set is accepted.
FormSpace formspace_from_json(const Json& j);
Json to_json(const FormSpace& A);

// {"vars": [...], "degree": d, "monomials": [...]}
MonomialSpace monomialspace_from_json(const Json& j);
Json to_json(const MonomialSpace& M);

// {"params": [...], "targets": [...], "images": {"<target>": "<monomial>"}}
MonomialMap monomialmap_from_json(const Json& j);
Json to_json(const MonomialMap& map);

Json to_json(const SecantReport& rep, const VarSet& targets);

// One edge "u v" per line; blank lines and '#' comments skipped.
Tree parse_tree(const std::string& text);

Json to_json(const Tree& tree, const FrameSystem& sys);

}  // namespace prolong::io
