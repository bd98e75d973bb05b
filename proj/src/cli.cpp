#include "h4/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "h4/classify.hpp"
#include "h4/constructions.hpp"
#include "h4/identities.hpp"
#include "h4/serialization.hpp"
#include "h4/structure.hpp"

namespace h4 {

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::string algebra_path;
  std::string mode = "auto";
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 1;
  std::uint64_t max_monomials = 0;
  double max_seconds = 0;
  std::size_t threads = 1;
  std::size_t n = 1;
  std::size_t n_max = 1;
  std::string out_path;
  std::string csv_path;
  bool oracle = false;
  std::vector<std::string> alt_sets;
  std::vector<std::string> alt_labels;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json read_json(const std::string& path) {
  try {
    return parse_json(read_input(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

/// Accepts either an HAlgebra document or a descriptor, which is realized.
HAlgebra load_algebra(const std::string& path) {
  const Json j = read_json(path);
  return is_descriptor_json(j) ? realize(descriptor_from_json(j)) : algebra_from_json(j);
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write " + path);
  file << text;
}

CodimOptions codim_options(const RunConfig& cfg) {
  CodimOptions o;
  if (cfg.mode == "rational") {
    o.mode = ModeChoice::Rational;
  } else if (cfg.mode == "modp") {
    o.mode = ModeChoice::Modular;
  } else if (cfg.mode == "auto") {
    o.mode = ModeChoice::Auto;
  } else {
    throw ValidationError("--mode must be auto, rational or modp");
  }
  if (!cfg.primes.empty()) {
    for (const auto p : cfg.primes) {
      if (!is_prime(p) || p >= (std::uint64_t{1} << 32)) throw ValidationError("--primes: " + std::to_string(p) + " is not a prime below 2^32");
    }
    o.primes = cfg.primes;
  }
  o.threads = std::max<std::size_t>(1, cfg.threads);
  o.max_monomials = cfg.max_monomials;
  o.max_seconds = cfg.max_seconds;
  return o;
}

InvertibleSearchOptions search_options(const RunConfig& cfg) {
  InvertibleSearchOptions s;
  s.seed = cfg.seed;
  return s;
}

std::string type_name(const CanonicalDescriptor& d) {
  static const char* names[] = {"trivial_matrix", "matrix_case", "double", "nonsemisimple"};
  return names[d.value.index()];
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const HAlgebra a = realize(descriptor_from_json(read_json(cfg.inputs.at(0))));
  write_text(dump(to_json(a)), cfg.out_path, out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const HAlgebra a = load_algebra(cfg.inputs.at(0));
  Json j;
  j["label"] = a.label();
  j["dim"] = a.dim();
  j["verification"] = to_json(verify_module_algebra(a));
  write_text(dump(j), cfg.out_path, out);
  return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const HAlgebra a = load_algebra(cfg.inputs.at(0));
  const VerificationReport laws = verify_module_algebra(a);
  Json j;
  j["label"] = a.label();
  j["dim"] = a.dim();
  j["laws_pass"] = laws.all_pass();
  if (!laws.all_pass()) {
    // Structure theory assumes a module algebra; report the laws instead.
    j["verification"] = to_json(laws);
    write_text(dump(j), cfg.out_path, out);
    return kExitOk;
  }
  const Subspace rad = radical(a);
  const SimplicityReport simple = simplicity_report(a, ActionScope::Full);
  j["radical_dim"] = rad.dim();
  j["enveloping_dim"] = simple.enveloping_dim;
  j["h4_simple"] = simple.absolutely_simple;
  j["z2_simple"] = is_absolutely_z2_simple(a);
  j["simplicity"] = to_json(simple);
  if (rad.dim() > 0 && simple.absolutely_simple) {
    const Decomposition dec = decompose_nonsemisimple(a);
    Json d;
    d["j_dim"] = dec.j.dim();
    d["vj_dim"] = dec.vj.dim();
    d["all_pass"] = dec.all_pass();
    d["laws"] = to_json(dec.report)["laws"];
    j["decomposition"] = std::move(d);
  } else {
    j["decomposition"] = nullptr;
  }
  write_text(dump(j), cfg.out_path, out);
  return kExitOk;
}

int cmd_iso(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 2) throw ValidationError("iso needs exactly two inputs");
  const Json j1 = read_json(cfg.inputs[0]);
  const Json j2 = read_json(cfg.inputs[1]);
  IsoOptions options;
  options.use_oracle = cfg.oracle;
  options.search = search_options(cfg);
  IsoDecision decision;
  const bool both_desc = is_descriptor_json(j1) && is_descriptor_json(j2);
  const auto d1 = both_desc ? std::optional(descriptor_from_json(j1)) : std::nullopt;
  const auto d2 = both_desc ? std::optional(descriptor_from_json(j2)) : std::nullopt;
  const auto* m1 = d1 ? std::get_if<MatrixCaseParams>(&d1->value) : nullptr;
  const auto* m2 = d2 ? std::get_if<MatrixCaseParams>(&d2->value) : nullptr;
  const auto* p1 = d1 ? std::get_if<DoubleCaseParams>(&d1->value) : nullptr;
  const auto* p2 = d2 ? std::get_if<DoubleCaseParams>(&d2->value) : nullptr;
  const auto* t1 = d1 ? std::get_if<TrivialMatrixParams>(&d1->value) : nullptr;
  const auto* t2 = d2 ? std::get_if<TrivialMatrixParams>(&d2->value) : nullptr;
  if (m1 && m2) {
    decision = iso_matrix_case(*m1, *m2, options);
  } else if (p1 && p2) {
    decision = iso_double_case(*p1, *p2, options);
  } else if (t1 && t2) {
    decision.isomorphic = t1->n == t2->n;
    decision.route = "invariants";
    decision.invariants = {{"n1", std::to_string(t1->n)}, {"n2", std::to_string(t2->n)}};
    if (decision.isomorphic) decision.witness = IsoWitness{Matrix::identity(t1->n * t1->n), {}, "identity"};
  } else if (d1 && d2 && type_name(*d1) != type_name(*d2) && type_name(*d1) != "nonsemisimple" &&
             type_name(*d2) != "nonsemisimple") {
    // Distinct semisimple families differ in the grading or in the centre.
    decision.isomorphic = false;
    decision.route = "invariants";
    decision.invariants = {{"type1", type_name(*d1)}, {"type2", type_name(*d2)}};
  } else {
    const HAlgebra a1 = is_descriptor_json(j1) ? realize(descriptor_from_json(j1)) : algebra_from_json(j1);
    const HAlgebra a2 = is_descriptor_json(j2) ? realize(descriptor_from_json(j2)) : algebra_from_json(j2);
    decision = iso_nonsemisimple(a1, a2);
  }
  write_text(dump(to_json(decision)), cfg.out_path, out);
  return kExitOk;
}

int cmd_aut(const RunConfig& cfg, std::ostream& out) {
  const CanonicalDescriptor d = descriptor_from_json(read_json(cfg.inputs.at(0)));
  write_text(dump(to_json(aut_description(d, search_options(cfg)))), cfg.out_path, out);
  return kExitOk;
}

std::string algebra_input(const RunConfig& cfg) {
  if (!cfg.algebra_path.empty()) return cfg.algebra_path;
  if (!cfg.inputs.empty()) return cfg.inputs[0];
  throw ValidationError("missing --algebra");
}

int cmd_codim(const RunConfig& cfg, std::ostream& out) {
  const HAlgebra a = load_algebra(algebra_input(cfg));
  const CodimResult r = codimension(a, cfg.n, codim_options(cfg));
  write_text(dump(to_json(r)), cfg.out_path, out);
  return r.complete ? kExitOk : kExitResource;
}

int cmd_codim_table(const RunConfig& cfg, std::ostream& out) {
  const HAlgebra a = load_algebra(algebra_input(cfg));
  const CodimOptions options = codim_options(cfg);
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "n,c_n,bound,root\n";
  bool complete = true;
  for (std::size_t n = 1; n <= cfg.n_max; ++n) {
    const CodimResult r = codimension(a, n, options);
    Integer bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), a.dim(), n + 1);
    char root[32];
    std::snprintf(root, sizeof root, "%.4f", std::pow(static_cast<double>(r.value), 1.0 / static_cast<double>(n)));
    Json row = to_json(r);
    row["bound"] = bound.get_str();
    row["holds"] = Integer(std::to_string(r.value)) <= bound;
    row["root"] = root;
    rows.push_back(std::move(row));
    csv << n << ',' << r.value << ',' << bound.get_str() << ',' << root << '\n';
    if (!r.complete) {
      complete = false;
      break;
    }
  }
  Json j;
  j["label"] = a.label();
  j["dim"] = a.dim();
  j["h4_simple"] = is_absolutely_h4_simple(a);
  j["complete"] = complete;
  j["rows"] = std::move(rows);
  if (!cfg.csv_path.empty()) write_text(csv.str(), cfg.csv_path, out);
  write_text(dump(j), cfg.out_path, out);
  return complete ? kExitOk : kExitResource;
}

std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || v == 0 || v > n)
      throw ValidationError("--set: \"" + item + "\" is not a variable index in 1.." + std::to_string(n));
    out.push_back(v - 1);
  }
  return out;
}

int cmd_exists_alt(const RunConfig& cfg, std::ostream& out) {
  const HAlgebra a = load_algebra(algebra_input(cfg));
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& s : cfg.alt_sets) sets.push_back(parse_index_list(s, cfg.n));
  AlternationOptions options;
  for (const auto& l : cfg.alt_labels) {
    bool known = false;
    for (const auto b : kH4Basis) {
      if (to_string(b) == l) {
        options.allowed_labels.push_back(b);
        known = true;
      }
    }
    if (!known) throw ValidationError("--labels: unknown H4 basis element \"" + l + "\"");
  }
  const bool exists = exists_alternating_nonidentity(a, cfg.n, sets, options);
  Json j;
  j["label"] = a.label();
  j["n"] = cfg.n;
  Json js = Json::array();
  for (const auto& s : sets) {
    Json one = Json::array();
    for (const auto v : s) one.push_back(v + 1);
    js.push_back(std::move(one));
  }
  j["sets"] = std::move(js);
  j["exists"] = exists;
  write_text(dump(j), cfg.out_path, out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Module algebras over Sweedler's algebra H4: construction, verification, classification, codimensions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
    sub->add_option("--seed", cfg.seed, "Seed of randomized witness searches");
  };
  auto codim_flags = [&](CLI::App* sub) {
    sub->add_option("--algebra", cfg.algebra_path, "HAlgebra or descriptor JSON");
    sub->add_option("--mode", cfg.mode, "auto, rational or modp")->check(CLI::IsMember({"auto", "rational", "modp"}));
    sub->add_option("--primes", cfg.primes, "Primes of the modular mode")->delimiter(',');
    sub->add_option("--max-monomials", cfg.max_monomials, "Stop after this many monomials (0 = no cap)");
    sub->add_option("--max-seconds", cfg.max_seconds, "Stop after this much wall time (0 = no cap)");
    sub->add_option("--threads", cfg.threads, "Worker threads for evaluation vectors");
  };

  auto* construct = app.add_subcommand("construct", "Realize a descriptor as HAlgebra JSON");
  construct->add_option("descriptor", cfg.inputs, "Descriptor JSON path or -")->required();
  common(construct);
  auto* verify = app.add_subcommand("verify", "Check the module-algebra laws");
  verify->add_option("input", cfg.inputs, "HAlgebra or descriptor JSON")->required();
  common(verify);
  auto* analyze = app.add_subcommand("analyze", "Radical, simplicity and decomposition report");
  analyze->add_option("input", cfg.inputs, "HAlgebra or descriptor JSON")->required();
  common(analyze);
  auto* iso = app.add_subcommand("iso", "Decide H4-isomorphism of two inputs");
  iso->add_option("inputs", cfg.inputs, "Two descriptor or HAlgebra JSON files")->required()->expected(2);
  iso->add_flag("--oracle", cfg.oracle, "Decide through the linear-system oracle");
  common(iso);
  auto* aut = app.add_subcommand("aut", "Describe the H4-automorphism group of a descriptor");
  aut->add_option("descriptor", cfg.inputs, "Descriptor JSON")->required();
  common(aut);
  auto* codim = app.add_subcommand("codim", "Codimension c_n of the H4-identities");
  codim->add_option("input", cfg.inputs, "HAlgebra or descriptor JSON");
  codim->add_option("--n", cfg.n, "Degree")->required()->check(CLI::Range(1, 12));
  codim_flags(codim);
  common(codim);
  auto* table = app.add_subcommand("codim-table", "c_1..c_{n-max} with the bound d^{n+1}");
  table->add_option("input", cfg.inputs, "HAlgebra or descriptor JSON");
  table->add_option("--n-max", cfg.n_max, "Largest degree")->required()->check(CLI::Range(1, 12));
  table->add_option("--csv", cfg.csv_path, "Also write CSV columns n, c_n, bound, root");
  codim_flags(table);
  common(table);
  auto* alt = app.add_subcommand("exists-alt", "Search for an alternating polynomial that is not an identity");
  alt->add_option("input", cfg.inputs, "HAlgebra or descriptor JSON");
  alt->add_option("--algebra", cfg.algebra_path, "HAlgebra or descriptor JSON");
  alt->add_option("--n", cfg.n, "Degree")->required()->check(CLI::Range(1, 12));
  alt->add_option("--set", cfg.alt_sets, "Comma-separated 1-based variables alternated together (repeatable)");
  alt->add_option("--labels", cfg.alt_labels, "Allowed H4 labels, e.g. 1,c,v,cv")->delimiter(',');
  common(alt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*construct) return cmd_construct(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*analyze) return cmd_analyze(cfg, out);
    if (*iso) return cmd_iso(cfg, out);
    if (*aut) return cmd_aut(cfg, out);
    if (*codim) return cmd_codim(cfg, out);
    if (*table) return cmd_codim_table(cfg, out);
    if (*alt) return cmd_exists_alt(cfg, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace h4
