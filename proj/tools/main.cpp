#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zpp/json_io.hpp"

namespace {

using zpp::Json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw zpp::InputError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Json& doc, const std::string& out_path) {
  std::string text = doc.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw zpp::InputError("cannot open output file: " + out_path);
  out << text;
}

zpp::LinMap load_map(const std::string& in_path) {
  return zpp::linmap_from_json(zpp::parse_json(read_input(in_path)));
}

zpp::FieldDesc make_field(const std::string& kind, std::uint64_t p) {
  if (kind == "q") return zpp::FieldDesc::rationals();
  if (kind == "gf") return zpp::FieldDesc::gf(p);
  throw zpp::InputError("unknown field kind \"" + kind + "\" (use gf or q)");
}

int run(int argc, char** argv) {
  CLI::App app{
      "zpp: exact decision procedures and canonical decompositions for "
      "zero-product preservers between matrix algebras"};
  app.require_subcommand(1);

  std::string in_path = "-", out_path = "-";
  std::string property = "zpp";
  std::uint64_t seed = 0, trials = 1000;

  // check
  auto* check = app.add_subcommand(
      "check", "Decide a preserver property of a map (dzp is randomized)");
  check->add_option("--property", property,
                    "zpp|dzp|jordan|ring|idem|trivial");
  check->add_option("--in", in_path, "LinMap JSON path or -");
  check->add_option("--out", out_path, "output path or -");
  check->add_option("--trials", trials, "samples for dzp fuzzing");
  check->add_option("--seed", seed, "randomness seed");

  // decompose
  std::string dec_property = "zpp";
  auto* dec = app.add_subcommand(
      "decompose", "Emit a verified canonical-form certificate");
  dec->add_option("--property", dec_property, "zpp|dzp");
  dec->add_option("--in", in_path, "LinMap JSON path or -");
  dec->add_option("--out", out_path, "output path or -");

  // split-jordan
  auto* sj = app.add_subcommand(
      "split-jordan", "Split a Jordan homomorphism into hom + anti-hom");
  sj->add_option("--in", in_path, "LinMap JSON path or -");
  sj->add_option("--out", out_path, "output path or -");

  // canon-hom
  auto* ch = app.add_subcommand(
      "canon-hom", "Canonicalize a unital ring homomorphism to I_k (x) A");
  ch->add_option("--in", in_path, "LinMap JSON path or -");
  ch->add_option("--out", out_path, "output path or -");

  // canon-nilspace
  auto* cn = app.add_subcommand(
      "canon-nilspace",
      "Canonicalize a trivial-multiplication subspace to block form");
  cn->add_option("--in", in_path, "subspace JSON path or -");
  cn->add_option("--out", out_path, "output path or -");
  cn->add_option("--seed", seed, "seed for the max-rank search");

  // classify-small
  auto* cs = app.add_subcommand(
      "classify-small", "Classify a ZPP map with r <= n+1");
  cs->add_option("--in", in_path, "LinMap JSON path or -");
  cs->add_option("--out", out_path, "output path or -");

  // fuzz
  auto* fz = app.add_subcommand(
      "fuzz", "Randomized counterexample search on zero-product pairs");
  fz->add_option("--property", property, "zpp|dzp");
  fz->add_option("--in", in_path, "LinMap JSON path or -");
  fz->add_option("--out", out_path, "output path or -");
  fz->add_option("--trials", trials, "number of sampled pairs");
  fz->add_option("--seed", seed, "randomness seed");

  // gen
  std::string gen_kind = "zpp", field_kind = "q", phi0_mode = "none";
  std::uint64_t field_p = 7;
  int gn = 2, gr = 2, gk = 1, gk1 = 1, gk2 = 0, band_k = 1, gl = 2;
  int tm_p = 0, tm_q = 0, tm_u = 0, tm_v = 0, tm_dim = 1;
  auto* gen = app.add_subcommand(
      "gen", "Generate seeded random preservers and pattern subspaces");
  gen->add_option("--kind", gen_kind, "zpp|jordan|pattern");
  gen->add_option("--field", field_kind, "gf|q");
  gen->add_option("--p", field_p, "modulus for gf");
  gen->add_option("--n", gn, "domain size n");
  gen->add_option("--r", gr, "codomain size r");
  gen->add_option("--k", gk, "tensor multiplicity (zpp)");
  gen->add_option("--k1", gk1, "hom multiplicity (jordan)");
  gen->add_option("--k2", gk2, "anti-hom multiplicity (jordan)");
  gen->add_option("--phi0", phi0_mode, "none|trivial|band (zpp)");
  gen->add_option("--band-k", band_k, "band height for --phi0 band");
  gen->add_option("--l", gl, "subspace matrix size (pattern)");
  gen->add_option("--tm-p", tm_p, "pattern p");
  gen->add_option("--tm-q", tm_q, "pattern q");
  gen->add_option("--tm-u", tm_u, "pattern u");
  gen->add_option("--tm-v", tm_v, "pattern v");
  gen->add_option("--tm-dim", tm_dim, "pattern span dimension");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output path or -");

  // examples
  std::string ex_name = "symmetric-killer";
  auto* ex = app.add_subcommand("examples", "Emit a named fixture map");
  ex->add_option("--name", ex_name, "symmetric-killer|band|ors");
  ex->add_option("--field", field_kind, "gf|q");
  ex->add_option("--p", field_p, "modulus for gf");
  ex->add_option("--n", gn, "domain size n");
  ex->add_option("--k", gk, "band height (band)");
  ex->add_option("--r", gr, "codomain size (ors)");
  ex->add_option("--out", out_path, "output path or -");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (check->parsed()) {
    zpp::LinMap phi = load_map(in_path);
    zpp::Verdict v = zpp::Verdict::pass();
    if (property == "zpp") {
      v = zpp::check_zpp(phi);
    } else if (property == "ring") {
      v = zpp::check_ring_hom(phi);
    } else if (property == "jordan") {
      v = zpp::check_jordan(phi);
    } else if (property == "idem") {
      v = zpp::check_idempotent_preserver(phi);
    } else if (property == "trivial") {
      v = zpp::check_trivial_mult(phi);
    } else if (property == "dzp") {
      v = zpp::fuzz_preserver(phi, zpp::PreserverProperty::Dzp, trials, seed);
    } else {
      throw zpp::InputError("unknown property \"" + property + "\"");
    }
    write_output(zpp::verdict_to_json(v), out_path);
    return v.holds ? 0 : 1;
  }

  if (dec->parsed()) {
    zpp::LinMap phi = load_map(in_path);
    Json doc;
    if (dec_property == "zpp") {
      zpp::StructureCertificate cert = phi.n() == 1 ? zpp::decompose_m1(phi)
                                                    : zpp::decompose_zpp(phi);
      doc["kind"] = phi.n() == 1 ? "zpp_certificate_m1" : "zpp_certificate";
      doc["field"] = zpp::field_to_json(phi.field());
      doc["n"] = phi.n();
      doc["r"] = phi.r();
      Json c = zpp::certificate_to_json(cert);
      for (auto& [key, value] : c.items()) doc[key] = value;
      doc["phi0_trivial_mult"] =
          cert.phi0.r() > 0 ? Json(zpp::check_trivial_mult(cert.phi0).holds)
                            : Json(nullptr);
      doc["verified"] = true;
    } else if (dec_property == "dzp") {
      zpp::DzpCertificate cert = zpp::decompose_dzp(phi);
      doc["kind"] = "dzp_certificate";
      doc["field"] = zpp::field_to_json(phi.field());
      doc["n"] = phi.n();
      doc["r"] = phi.r();
      Json c = zpp::dzp_certificate_to_json(cert);
      for (auto& [key, value] : c.items()) doc[key] = value;
      doc["verified"] = true;
    } else {
      throw zpp::InputError("decompose: property must be zpp or dzp");
    }
    write_output(doc, out_path);
    return 0;
  }

  if (sj->parsed()) {
    zpp::LinMap theta = load_map(in_path);
    zpp::JordanSplit split = zpp::split_jordan(theta);
    Json doc;
    doc["kind"] = "jordan_split";
    Json c = zpp::jordan_split_to_json(split);
    for (auto& [key, value] : c.items()) doc[key] = value;
    doc["verified"] = true;
    write_output(doc, out_path);
    return 0;
  }

  if (ch->parsed()) {
    zpp::LinMap psi = load_map(in_path);
    auto [s1, k] = zpp::canonicalize_unital_hom(psi);
    Json doc;
    doc["kind"] = "hom_canonical_form";
    doc["S1"] = zpp::mat_to_json(s1);
    doc["k"] = k;
    doc["verified"] = true;
    write_output(doc, out_path);
    return 0;
  }

  if (cn->parsed()) {
    auto [basis, l] = zpp::subspace_from_json(zpp::parse_json(read_input(in_path)));
    zpp::TrivialMultForm form = zpp::canonicalize_trivial_mult(basis, seed);
    Json doc;
    doc["kind"] = "trivial_mult_form";
    doc["l"] = l;
    Json c = zpp::trivial_mult_form_to_json(form);
    for (auto& [key, value] : c.items()) doc[key] = value;
    doc["verified"] = true;
    write_output(doc, out_path);
    return 0;
  }

  if (cs->parsed()) {
    zpp::LinMap phi = load_map(in_path);
    zpp::SmallCodomainForm form = zpp::small_codomain_classify(phi);
    Json doc;
    doc["kind"] = "small_codomain_form";
    Json c = zpp::small_codomain_to_json(form);
    for (auto& [key, value] : c.items()) doc[key] = value;
    write_output(doc, out_path);
    return 0;
  }

  if (fz->parsed()) {
    zpp::LinMap phi = load_map(in_path);
    zpp::PreserverProperty prop;
    if (property == "zpp") {
      prop = zpp::PreserverProperty::Zpp;
    } else if (property == "dzp") {
      prop = zpp::PreserverProperty::Dzp;
    } else {
      throw zpp::InputError("fuzz: property must be zpp or dzp");
    }
    zpp::Verdict v = zpp::fuzz_preserver(phi, prop, trials, seed);
    write_output(zpp::verdict_to_json(v), out_path);
    return v.holds ? 0 : 1;
  }

  if (gen->parsed()) {
    zpp::FieldDesc f = make_field(field_kind, field_p);
    Json doc;
    if (gen_kind == "zpp") {
      zpp::GenSpec spec;
      spec.n = gn;
      spec.r = gr;
      spec.k = gk;
      spec.field = f;
      spec.seed = seed;
      if (phi0_mode == "none") {
        spec.mode = zpp::Phi0Mode::None;
      } else if (phi0_mode == "trivial") {
        spec.mode = zpp::Phi0Mode::TrivialMult;
        spec.pattern = zpp::PatternParams{tm_p, tm_q, tm_u, tm_v, tm_dim};
      } else if (phi0_mode == "band") {
        spec.mode = zpp::Phi0Mode::Band;
        spec.band_k = band_k;
      } else {
        throw zpp::InputError("gen: phi0 must be none, trivial, or band");
      }
      zpp::GeneratedZpp g = zpp::random_zpp_map(spec);
      doc["kind"] = "generated_zpp";
      doc["map"] = zpp::linmap_to_json(g.map);
      doc["ground_truth"] = zpp::certificate_to_json(g.truth);
    } else if (gen_kind == "jordan") {
      zpp::LinMap m = zpp::random_jordan_map(gn, gr, gk1, gk2, f, seed);
      doc["kind"] = "generated_jordan";
      doc["k1"] = gk1;
      doc["k2"] = gk2;
      doc["map"] = zpp::linmap_to_json(m);
    } else if (gen_kind == "pattern") {
      std::vector<zpp::Mat> basis = zpp::generate_pattern_subspace(
          gl, tm_p, tm_q, tm_u, tm_v, tm_dim, f, seed);
      doc["kind"] = "generated_pattern";
      Json params;
      params["p"] = tm_p;
      params["q"] = tm_q;
      params["u"] = tm_u;
      params["v"] = tm_v;
      params["dim"] = tm_dim;
      doc["params"] = std::move(params);
      doc["subspace"] = zpp::subspace_to_json(f, gl, basis);
    } else {
      throw zpp::InputError("gen: kind must be zpp, jordan, or pattern");
    }
    write_output(doc, out_path);
    return 0;
  }

  if (ex->parsed()) {
    zpp::FieldDesc f = make_field(field_kind, field_p);
    // emitted as a plain LinMap document so it pipes straight into
    // check/decompose/split-jordan
    Json doc;
    if (ex_name == "symmetric-killer") {
      doc = zpp::linmap_to_json(zpp::example_symmetric_killer(f));
    } else if (ex_name == "band") {
      doc = zpp::linmap_to_json(zpp::example_band_nilpotent(gn, gk, f));
    } else if (ex_name == "ors") {
      doc = zpp::linmap_to_json(zpp::example_ors(gn, gr, f));
    } else {
      throw zpp::InputError("examples: unknown name \"" + ex_name + "\"");
    }
    write_output(doc, out_path);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const zpp::NotPreserverError& e) {
    Json doc;
    doc["kind"] = "not_preserver";
    doc["message"] = e.what();
    doc["verdict"] = zpp::verdict_to_json(e.verdict);
    std::cout << doc.dump(2) << "\n";
    return 1;
  } catch (const zpp::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const zpp::InconclusiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const zpp::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
