#include "prolong/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace prolong::io {

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw InputError(std::string("field \"") + key + "\" must hold strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

unsigned degree_field(const Json& j) {
  const Json& v = field(j, "degree");
  if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("field \"degree\" must be a non-negative integer");
  return v.get<unsigned>();
}

VarSet make_varset(std::vector<std::string> names) {
  try {
    return VarSet(std::move(names));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Polynomial parse_or_throw(const std::string& text, const VarSet& vars) {
  try {
    return parse_polynomial(text, vars);
  } catch (const ParseError& e) {
    throw InputError("cannot parse \"" + text + "\": " + e.what());
  }
}

std::string edge_name(const Tree& tree, std::size_t e) {
  return std::to_string(tree.edges()[e].first) + "-" + std::to_string(tree.edges()[e].second);
}

}  // namespace

VarSet varset_from_json(const Json& j) { return make_varset(string_list(j, "vars")); }

Monomial parse_monomial(const std::string& text, const VarSet& vars) {
  Polynomial p = parse_or_throw(text, vars);
  if (p.size() != 1 || p.leading_coefficient() != 1) throw InputError("\"" + text + "\" is not a monomial");
  return p.leading_monomial();
}

FormSpace formspace_from_json(const Json& j) {
  VarSet vars = varset_from_json(j);
  unsigned d = degree_field(j);
  std::vector<Polynomial> polys;
  for (const auto& s : string_list(j, "basis")) polys.push_back(parse_or_throw(s, vars));
  try {
    return make_formspace(vars, d, polys);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json to_json(const FormSpace& A) {
  Json basis = Json::array();
  for (const auto& b : A.basis()) basis.push_back(b.to_string());
  return Json{{"vars", A.vars().names()}, {"degree", A.degree()}, {"basis", basis}};
}

MonomialSpace monomialspace_from_json(const Json& j) {
  VarSet vars = varset_from_json(j);
  unsigned d = degree_field(j);
  std::vector<Monomial> mons;
  for (const auto& s : string_list(j, "monomials")) mons.push_back(parse_monomial(s, vars));
  try {
    return MonomialSpace(vars, d, std::move(mons));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json to_json(const MonomialSpace& M) {
  Json mons = Json::array();
  for (const auto& m : M.monomials) mons.push_back(format_monomial(m, M.vars));
  return Json{{"vars", M.vars.names()}, {"degree", M.degree}, {"monomials", mons}};
}

MonomialMap monomialmap_from_json(const Json& j) {
  VarSet params = make_varset(string_list(j, "params"));
  VarSet targets = make_varset(string_list(j, "targets"));
  const Json& imgs = field(j, "images");
  if (!imgs.is_object()) throw InputError("field \"images\" must be an object");
  std::vector<Monomial> images;
  for (const auto& t : targets.names()) {
    if (!imgs.contains(t) || !imgs.at(t).is_string()) throw InputError("no image for target " + t);
    images.push_back(parse_monomial(imgs.at(t).get<std::string>(), params));
  }
  if (imgs.size() != targets.size()) throw InputError("images name unknown targets");
  return MonomialMap(params, targets, std::move(images));
}

Json to_json(const MonomialMap& map) {
  Json imgs = Json::object();
  for (std::size_t i = 0; i < map.targets.size(); ++i)
    imgs[map.targets.name(i)] = format_monomial(map.images[i], map.params);
  return Json{{"params", map.params.names()}, {"targets", map.targets.names()}, {"images", imgs}};
}

Json to_json(const SecantReport& rep, const VarSet& targets) {
  Json w = nullptr;
  if (rep.witness) {
    Json point = Json::object();
    for (std::size_t i = 0; i < targets.size(); ++i) point[targets.name(i)] = to_string(rep.witness->point[i]);
    w = Json{{"trial", rep.witness->trial}, {"value", to_string(rep.witness->value)}, {"point", point}};
  }
  return Json{{"trials", rep.trials}, {"zero", rep.zero}, {"nonzero", rep.nonzero}, {"witness", w}};
}

Tree parse_tree(const std::string& text) {
  std::vector<std::pair<long long, long long>> edges;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) throw InputError("tree line " + std::to_string(lineno) + ": expected \"u v\"");
    edges.emplace_back(u, v);
  }
  try {
    return load_tree(edges);
  } catch (const TreeError& e) {
    throw InputError(e.what());
  }
}

Json to_json(const Tree& tree, const FrameSystem& sys) {
  Json frames = Json::array();
  for (const auto& f : sys.frames) {
    Json labels = Json::object();
    for (const auto& [e, l] : f.labels) labels[edge_name(tree, e)] = l;
    frames.push_back(labels);
  }
  Json efun = Json::object();
  for (const auto& [p, e] : sys.efun) efun[std::to_string(p.first + 1) + "," + std::to_string(p.second + 1)] = edge_name(tree, e);
  Json classes = Json::array();
  for (const auto& c : sys.classes) {
    auto h = hanging_labelings(tree, sys.frames[c.members.front()], c.edge);
    Json hedges = Json::array(), members = Json::array(), labs = Json::array();
    for (std::size_t e : h.edges) hedges.push_back(edge_name(tree, e));
    for (std::size_t i : c.members) members.push_back(i + 1);
    for (const auto& lab : c.completions) {
      std::string bits;
      for (Label l : lab) bits += l ? '1' : '0';
      labs.push_back(bits);
    }
    classes.push_back({{"edge", edge_name(tree, c.edge)}, {"members", members}, {"hanging_edges", hedges}, {"labelings", labs}});
  }
  return Json{{"frames", frames}, {"efun", efun}, {"completions", classes}};
}

}  // namespace prolong::io
