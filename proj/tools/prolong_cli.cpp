// prolong: command-line front end. Exit codes: 0 ok, 1 check failed, 2 bad input.
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>

#include "prolong/io.hpp"
#include "prolong/monomial_comb.hpp"
#include "prolong/phylo.hpp"
#include "prolong/prolong.hpp"
#include "prolong/secant.hpp"

namespace {

using prolong::io::Json;
namespace io = prolong::io;

struct Globals {
  std::size_t cap = 200000;
  unsigned threads = 1;
};

// Mathematical check failed: exit code 1 after printing the result.
struct CheckFailed {};

prolong::Polynomial read_poly(const std::string& path, const prolong::VarSet& vars) {
  std::string text = io::read_text(path);
  try {
    return prolong::parse_polynomial(text, vars);
  } catch (const prolong::ParseError& e) {
    throw io::InputError(path + ": " + e.what());
  }
}

prolong::Strategy strategy_of(const std::string& name) {
  auto s = prolong::parse_strategy(name);
  if (!s) throw io::InputError("unknown strategy " + name);
  return *s;
}

Json blocks_json(const prolong::SupportDecomposition& dec, const prolong::VarSet& vars) {
  Json blocks = Json::array();
  for (std::size_t k = 0; k < dec.blocks.size(); ++k) {
    Json mons = Json::array();
    for (const auto& m : dec.blocks[k]) mons.push_back(prolong::format_monomial(m, vars));
    blocks.push_back({{"monomials", mons}, {"dimension", dec.spaces[k].dimension()},
                      {"basis", io::to_json(dec.spaces[k])["basis"]}});
  }
  return Json{{"blocks", blocks}, {"minimally_generated_by_circuits", dec.minimally_generated_by_circuits}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prolongations of spaces of forms, secant checks and phylogenetic frame systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--cap", g.cap, "Maximum ambient monomial count of S_{d+r}")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for sampling trials")->capture_default_str();

  std::string in, out = "-", alg = "derivative", space, poly, map, tree, dims;
  unsigned r = 1, deg = 2, d = 3, check_below = 0;
  std::size_t trials = 20, limit = 0, points = 0, batches = 8;
  std::uint64_t seed = 0, range = 97;
  bool dump_systems = false;

  auto* c_prolong = app.add_subcommand("prolong", "Compute A^(r) of a FormSpace");
  c_prolong->add_option("--in", in, "FormSpace JSON")->required();
  c_prolong->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  c_prolong->add_option("--alg", alg)->check(CLI::IsMember({"derivative", "catalecticant", "tensor"}));
  c_prolong->add_option("--out", out, "Output path, - for stdout");

  auto* c_mprolong = app.add_subcommand("mprolong", "Monomial prolongation of M(A) or a MonomialSpace");
  c_mprolong->add_option("--in", in, "MonomialSpace or FormSpace JSON, - for stdin")->required();
  c_mprolong->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  c_mprolong->add_option("--out", out);

  auto* c_circuits = app.add_subcommand("circuits", "Support blocks and the circuit flag");
  c_circuits->add_option("--in", in)->required();

  auto* c_diff = app.add_subcommand("diffpower", "Differential-power membership of a form");
  c_diff->add_option("--space", space)->required();
  c_diff->add_option("--poly", poly, "File holding the polynomial text")->required();
  c_diff->add_option("--r", r)->required()->check(CLI::PositiveNumber);

  auto* c_secant = app.add_subcommand("secant-check", "Sample the r-th secant variety and evaluate a form");
  c_secant->add_option("--map", map)->required();
  c_secant->add_option("--poly", poly)->required();
  c_secant->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  c_secant->add_option("--trials", trials)->capture_default_str();
  c_secant->add_option("--seed", seed)->capture_default_str();
  c_secant->add_option("--range", range)->capture_default_str()->check(CLI::PositiveNumber);

  auto* c_interp = app.add_subcommand("interpolate", "Degree-m forms vanishing on sampled secant points");
  c_interp->add_option("--map", map)->required();
  c_interp->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  c_interp->add_option("--deg", deg)->required();
  c_interp->add_option("--seed", seed)->capture_default_str();
  c_interp->add_option("--range", range)->capture_default_str()->check(CLI::PositiveNumber);
  c_interp->add_option("--points", points, "Points per batch (0: largest fibre + 2)")->capture_default_str();
  c_interp->add_option("--batches", batches, "Maximum number of batches")->capture_default_str();
  c_interp->add_option("--check-below", check_below, "Also confirm no form of degree D-1 vanishes on X");

  auto* c_pideal = app.add_subcommand("phylo-ideal", "The quadric space A_T of a tree");
  c_pideal->add_option("--tree", tree)->required();
  c_pideal->add_option("--out", out);

  auto* c_pprolong = app.add_subcommand("phylo-prolong", "A_T^(r) of a tree");
  c_pprolong->add_option("--tree", tree)->required();
  c_pprolong->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  c_pprolong->add_option("--alg", alg)->check(CLI::IsMember({"derivative", "catalecticant", "tensor"}));

  auto* c_frames = app.add_subcommand("phylo-frames", "Frame polynomials of degree d and their span");
  c_frames->add_option("--tree", tree)->required();
  c_frames->add_option("--d", d)->required()->check(CLI::Range(2u, 16u));
  c_frames->add_option("--limit", limit, "Stop after this many frame systems (0: all)")->capture_default_str();
  c_frames->add_flag("--dump-systems", dump_systems, "Include every frame system in the output");

  auto* c_no3 = app.add_subcommand("no3way", "Quartic binomials of the no-three-way-interaction model");
  c_no3->add_option("--dims", dims, "l,m,n")->required();
  c_no3->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    prolong::ProlongOptions opts;
    opts.cap = g.cap;
    opts.strategy = strategy_of(alg);

    if (c_prolong->parsed()) {
      auto A = io::formspace_from_json(io::parse_json(io::read_text(in), in));
      io::write_text(out, io::dump(io::to_json(prolong::prolong(A, r, opts))));
    } else if (c_mprolong->parsed()) {
      Json j = io::parse_json(io::read_text(in), in);
      auto M = j.contains("basis") ? prolong::monomial_support(io::formspace_from_json(j))
                                   : io::monomialspace_from_json(j);
      io::write_text(out, io::dump(io::to_json(prolong::monomial_prolong(M, r))));
    } else if (c_circuits->parsed()) {
      auto A = io::formspace_from_json(io::parse_json(io::read_text(in), in));
      std::cout << io::dump(blocks_json(prolong::circuits_and_decomposition(A), A.vars()));
    } else if (c_diff->parsed()) {
      auto A = io::formspace_from_json(io::parse_json(io::read_text(space), space));
      auto f = read_poly(poly, A.vars());
      if (!f.is_homogeneous() || (!f.is_zero() && f.total_degree() != A.degree() + r))
        throw io::InputError("polynomial must be homogeneous of degree " + std::to_string(A.degree() + r));
      bool member = prolong::differential_power_member(f, A, r);
      std::cout << io::dump(Json{{"member", member}, {"r", r}});
      if (!member) throw CheckFailed{};
    } else if (c_secant->parsed()) {
      auto M = io::monomialmap_from_json(io::parse_json(io::read_text(map), map));
      auto f = read_poly(poly, M.targets);
      auto rep = prolong::secant_vanish_check(f, M, r, trials, {seed, range}, g.threads);
      std::cout << io::dump(io::to_json(rep, M.targets));
      if (!rep.passed()) throw CheckFailed{};
    } else if (c_interp->parsed()) {
      auto M = io::monomialmap_from_json(io::parse_json(io::read_text(map), map));
      prolong::SampleConfig cfg{seed, range};
      auto res = prolong::interpolate_vanishing_piece(M, r, deg, cfg, points, batches);
      Json j{{"space", io::to_json(res.space)}, {"dimension", res.space.dimension()}, {"points", res.points},
             {"batch_size", res.batch_size}, {"batches", res.batches}, {"largest_fibre", res.largest_fibre},
             {"status", res.status}, {"warnings", res.warnings}};
      if (check_below > 0) j["no_forms_below_degree"] = prolong::no_forms_vanish_below(M, check_below - 1, cfg);
      for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << io::dump(j);
    } else if (c_pideal->parsed()) {
      auto T = io::parse_tree(io::read_text(tree));
      io::write_text(out, io::dump(io::to_json(prolong::phylo_quadrics(T))));
    } else if (c_pprolong->parsed()) {
      auto T = io::parse_tree(io::read_text(tree));
      auto B = prolong::prolong(prolong::phylo_quadrics(T), r, opts);
      std::cout << io::dump(Json{{"dimension", B.dimension()}, {"prolongation", io::to_json(B)}});
    } else if (c_frames->parsed()) {
      auto T = io::parse_tree(io::read_text(tree));
      auto A = prolong::phylo_quadrics(T);
      auto systems = prolong::enumerate_frame_systems(T, d, limit);
      std::vector<prolong::Polynomial> polys;
      std::set<std::string> seen;
      Json dumped = Json::array();
      for (const auto& sys : systems) {
        auto p = prolong::frame_polynomial(T, sys);
        if (dump_systems) {
          Json s = io::to_json(T, sys);
          s["polynomial"] = p.to_string();
          dumped.push_back(s);
        }
        if (!p.is_zero() && seen.insert(prolong::normalized(p).to_string()).second) polys.push_back(p);
      }
      auto span = prolong::make_formspace(A.vars(), d, polys);
      Json j{{"systems", systems.size()}, {"distinct_polynomials", polys.size()},
             {"span_dimension", span.dimension()}, {"tree_leaves", T.leaves()}};
      Json plist = Json::array();
      for (const auto& p : polys) plist.push_back(p.to_string());
      j["polynomials"] = plist;
      if (d >= 3) {
        auto P = prolong::prolong(A, d - 2, opts);
        bool contained = P.contains(span);
        j["prolongation_dimension"] = P.dimension();
        j["contained"] = contained;
        j["dimension_gap"] = P.dimension() - (contained ? span.dimension() : 0);
      } else {
        j["contained"] = A.contains(span);
      }
      if (dump_systems) j["frame_systems"] = dumped;
      std::cout << io::dump(j);
      if (!j["contained"].get<bool>()) throw CheckFailed{};
    } else if (c_no3->parsed()) {
      std::vector<std::size_t> lmn;
      std::stringstream ss(dims);
      std::string part;
      while (std::getline(ss, part, ',')) {
        try {
          std::size_t pos = 0;
          long long v = std::stoll(part, &pos);
          if (pos != part.size() || v < 1) throw std::invalid_argument(part);
          lmn.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
          throw io::InputError("--dims expects three positive integers l,m,n");
        }
      }
      if (lmn.size() != 3) throw io::InputError("--dims expects three positive integers l,m,n");
      io::write_text(out, io::dump(io::to_json(prolong::no_three_way_quartics(lmn[0], lmn[1], lmn[2]))));
    }
  } catch (const CheckFailed&) {
    return 1;
  } catch (const prolong::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise with --cap)\n";
    return 2;
  } catch (const io::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
