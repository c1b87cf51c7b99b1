// coronalab command-line front end.
//
// Exit codes: 0 success, 1 verify found failures (or another library error),
// 2 unreadable/malformed input or unwritable output, 3 solver cap exceeded,
// 4 precondition violated.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coronalab/coloring.hpp"
#include "coronalab/dimacs.hpp"
#include "coronalab/domination.hpp"
#include "coronalab/harness.hpp"

namespace cl = coronalab;
using cl::Json;

namespace {

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OutputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw OutputError("write to '" + path + "' failed");
}

std::string dimacs_text(const cl::Graph& g) {
  std::ostringstream s;
  cl::write_dimacs(s, g);
  return s.str();
}

void add_cap_flags(CLI::App* cmd, cl::Caps& caps) {
  cmd->add_option("--cap-coloring", caps.coloring, "order cap of the coloring solvers");
  cmd->add_option("--cap-subset", caps.subset, "order cap of the set solvers");
  cmd->add_option("--cap-partition", caps.partition, "order cap of the partition solvers");
  cmd->add_option("--cap-roman", caps.roman, "order cap of the Roman solver");
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  std::size_t a = 1;
  std::size_t b = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  cl::FamilySpec spec;
  spec.family = cl::parse_family(args.family);
  spec.a = args.a;
  spec.b = args.b;
  spec.p = args.p;
  spec.seed = args.seed;
  const auto g = cl::generate(spec);
  write_text(args.out, "c " + cl::family_name(spec) + "\n" + dimacs_text(g));
  return 0;
}

// ---------------------------------------------------------------- corona

int cmd_corona(const std::string& g_path, const std::string& h_path, const std::string& out) {
  const auto g = cl::read_dimacs_file(g_path);
  const auto h = cl::read_dimacs_file(h_path);
  const auto product = cl::corona(g, h);
  const auto& lab = product.labeling;
  Json vertices = Json::array();
  for (cl::Vertex v = 0; v < cl::Vertex(lab.order()); ++v) {
    const auto l = lab.label(v);
    Json e{{"id", v + 1}};
    if (l.kind == cl::CoronaVertex::Kind::Center) {
      e["kind"] = "center";
      e["g_vertex"] = l.copy + 1;
    } else {
      e["kind"] = "copy";
      e["copy"] = l.copy + 1;
      e["h_vertex"] = l.h_vertex + 1;
    }
    vertices.push_back(std::move(e));
  }
  const Json sidecar{{"n1", lab.n1()}, {"n2", lab.n2()}, {"vertices", std::move(vertices)}};
  write_text(out, dimacs_text(product.graph));
  if (!out.empty() && out != "-") write_text(out + ".labels.json", sidecar.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- param

Json one_based(const std::vector<cl::Vertex>& set) {
  Json j = Json::array();
  for (auto v : set) j.push_back(v + 1);
  return j;
}

Json one_based(const std::vector<std::vector<cl::Vertex>>& classes) {
  Json j = Json::array();
  for (const auto& c : classes) j.push_back(one_based(c));
  return j;
}

Json param_json(const cl::Graph& g, cl::Parameter p, std::size_t k, const cl::Caps& caps) {
  using P = cl::Parameter;
  Json r{{"parameter", cl::to_string(p)}};
  if (p == P::ChiK || p == P::GammaK || p == P::GammaDistK) r["k"] = k;
  const auto from_set = [&](const cl::DominationResult& d) {
    r["value"] = d.value;
    r["set"] = one_based(d.set);
    r["stats"] = {{"order", g.order()}, {"nodes", d.nodes}};
  };
  switch (p) {
    case P::Chi:
    case P::ChiK: {
      const auto c = p == P::Chi ? cl::chromatic_number(g, caps)
                                 : cl::distance_k_chromatic(g, k, caps);
      r["value"] = c.value;
      r["coloring"] = c.witness.colors;
      r["stats"] = {{"order", g.order()}, {"nodes", c.nodes}};
      break;
    }
    case P::Gamma: from_set(cl::domination_number(g, caps)); break;
    case P::GammaC: from_set(cl::connected_domination_number(g, caps)); break;
    case P::GammaK: from_set(cl::k_domination_number(g, k, caps)); break;
    case P::GammaDistK: from_set(cl::distance_k_domination_number(g, k, caps)); break;
    case P::IndependentDomination: from_set(cl::independent_domination_number(g, caps)); break;
    case P::Independence: from_set(cl::independence_number(g, caps)); break;
    case P::Dim: from_set(cl::metric_dimension(g, caps)); break;
    case P::GammaLd: from_set(cl::resolving_domination_number(g, caps)); break;
    case P::GammaL_D: from_set(cl::locating_domination_number(g, caps)); break;
    case P::GammaR: {
      const auto rr = cl::roman_domination(g, caps);
      r["value"] = rr.value;
      r["assignment"] = rr.witness.values;
      r["b2max"] = rr.b2max;
      r["stats"] = {{"order", g.order()}, {"nodes", rr.nodes}};
      break;
    }
    case P::Domatic: {
      const auto d = cl::domatic_number(g, caps);
      r["value"] = d.value;
      r["partition"] = one_based(d.classes);
      r["stats"] = {{"order", g.order()}, {"nodes", d.nodes}};
      break;
    }
    case P::Idomatic: {
      const auto d = cl::idomatic_number(g, caps);
      r["value"] = d ? Json(d->value) : Json();
      r["partition"] = d ? one_based(d->classes) : Json();
      r["stats"] = {{"order", g.order()}, {"nodes", d ? d->nodes : 0}};
      break;
    }
  }
  return r;
}

std::string param_text(const Json& r) {
  std::ostringstream s;
  s << r["parameter"].get<std::string>();
  if (r.contains("k")) s << " (k=" << r["k"] << ")";
  s << " = " << (r["value"].is_null() ? "none" : r["value"].dump()) << "\n";
  for (const char* key : {"set", "coloring", "assignment", "partition"})
    if (r.contains(key)) s << key << ": " << r[key].dump() << "\n";
  if (r.contains("b2max")) s << "b2max: " << r["b2max"] << "\n";
  return s.str();
}

int cmd_param(const std::string& in, const std::string& tag, std::size_t k,
              const std::string& format, const cl::Caps& caps) {
  const auto p = cl::parse_parameter(tag);
  const bool needs_k = p == cl::Parameter::ChiK || p == cl::Parameter::GammaK ||
                       p == cl::Parameter::GammaDistK;
  if (needs_k && k == 0) throw cl::PreconditionError("--k is required for " + tag);
  const auto g = cl::read_dimacs_file(in);
  const Json r = param_json(g, p, k, caps);
  write_text("", format == "text" ? param_text(r) : r.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- bounds

Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(); }

int cmd_bounds(const std::string& g_path, const std::string& h_path, std::size_t k,
               const cl::Caps& caps) {
  const auto g = cl::read_dimacs_file(g_path);
  const auto h = cl::read_dimacs_file(h_path);
  Json r{{"k", k}, {"n1", g.order()}, {"n2", h.order()}};
  if (k == 2 || k == 3) {
    const auto b = cl::corona_dist_bounds(g, h, k, caps);
    r["lower"] = optional_json(b.lower);
    r["upper"] = optional_json(b.upper);
    if (!b.lower_note.empty()) r["lower_note"] = b.lower_note;
  }
  Json forms = Json::object();
  for (auto c : {cl::FormulaCase::Chi2Path, cl::FormulaCase::Chi2Cycle3t,
                 cl::FormulaCase::Chi2Tree, cl::FormulaCase::Chi3Tree,
                 cl::FormulaCase::ChikPath}) {
    const bool fits = c == cl::FormulaCase::ChikPath ||
                      (k == 3) == (c == cl::FormulaCase::Chi3Tree);
    if (!fits) continue;
    try {
      forms[cl::to_string(c)] = cl::corona_chromatic_formula(c, g, h.order(), k);
    } catch (const cl::InapplicableError& e) {
      forms[cl::to_string(c)] = e.what();
    }
  }
  r["closed_forms"] = std::move(forms);
  write_text("", r.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, cl::SuiteConfig config, const std::string& out) {
  if (suite != "all") throw cl::PreconditionError("unknown suite '" + suite + "'");
  for (const auto& id : config.checks) cl::find_check(id);
  // Fail on an unwritable path before spending time on the suite.
  if (!out.empty() && out != "-") {
    std::ofstream probe(out, std::ios::binary);
    if (!probe) throw OutputError("cannot write '" + out + "'");
  }
  const auto report = cl::run_suite(config);
  write_text(out, cl::to_json(report).dump(2) + "\n");
  for (const auto& c : report.checks) {
    std::cerr << c.spec.id << ": instances " << c.instances << ", pass " << c.pass << ", fail "
              << c.fail << ", skip " << c.skip << ", reported " << c.reported
              << (c.vacuous() ? " (vacuous)" : "") << "\n";
  }
  std::cerr << (report.clean() ? "suite clean" : "suite NOT clean") << "\n";
  return report.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graph parameters of corona products"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a family member as DIMACS");
  gen_cmd->add_option("--family", gen.family, "path|cycle|complete|empty|star|"
                                              "complete-bipartite|random-tree|random-gnp")
      ->required();
  gen_cmd->add_option("--a", gen.a, "order (leaves for star, first part for bipartite)")
      ->required();
  gen_cmd->add_option("--b", gen.b, "second part of complete-bipartite");
  gen_cmd->add_option("--p", gen.p, "edge probability of random-gnp");
  gen_cmd->add_option("--seed", gen.seed, "seed of the random families");
  gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

  std::string g_path, h_path, out_path, in_path, tag, format = "json", suite = "all";
  std::size_t k = 0;
  cl::Caps caps;

  auto* corona_cmd = app.add_subcommand("corona", "write G⊙H and its labeling sidecar");
  corona_cmd->set_help_flag("--help", "print this help and exit");  // -h is taken by --h
  corona_cmd->add_option("--g", g_path, "DIMACS file of G")->required();
  corona_cmd->add_option("--h", h_path, "DIMACS file of H")->required();
  corona_cmd->add_option("--out", out_path, "output DIMACS path")->required();

  auto* param_cmd = app.add_subcommand("param", "compute one exact parameter");
  param_cmd->add_option("--in", in_path, "DIMACS file")->required();
  param_cmd->add_option("--tag", tag, "chi|chi_k|gamma|gamma_c|gamma_k|gamma_dist_k|i|beta0|"
                                      "gamma_R|dim|gamma_ld|gamma_l_d|domatic|idomatic")
      ->required();
  param_cmd->add_option("--k", k, "distance or multiplicity parameter");
  param_cmd->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  add_cap_flags(param_cmd, caps);

  auto* bounds_cmd = app.add_subcommand("bounds", "closed forms and bounds for χ≤k(G⊙H)");
  bounds_cmd->set_help_flag("--help", "print this help and exit");
  bounds_cmd->add_option("--g", g_path, "DIMACS file of G")->required();
  bounds_cmd->add_option("--h", h_path, "DIMACS file of H")->required();
  bounds_cmd->add_option("--k", k, "distance")->required();
  add_cap_flags(bounds_cmd, caps);

  cl::SuiteConfig config;
  auto* verify_cmd = app.add_subcommand("verify", "run the theorem checks");
  verify_cmd->add_option("--suite", suite, "suite name (all)");
  verify_cmd->add_option("--seed", config.seed, "seed of the random trees");
  verify_cmd->add_option("--out", out_path, "report path (default stdout)");
  verify_cmd->add_option("--check", config.checks, "restrict to these check ids");
  verify_cmd->add_option("--jobs", config.jobs, "at most N concurrent instance checks")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timing", config.timing, "record wall time in the report");
  add_cap_flags(verify_cmd, config.caps);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*corona_cmd) return cmd_corona(g_path, h_path, out_path);
    if (*param_cmd) return cmd_param(in_path, tag, k, format, caps);
    if (*bounds_cmd) return cmd_bounds(g_path, h_path, k, caps);
    if (*verify_cmd) return cmd_verify(suite, config, out_path);
  } catch (const cl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const OutputError& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return 2;
  } catch (const cl::SizeLimitError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const cl::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 4;
  } catch (const cl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
