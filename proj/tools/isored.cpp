// isored: command-line front end for isospectral graph reductions.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "isored/error.hpp"
#include "isored/graph.hpp"
#include "isored/isoequiv.hpp"
#include "isored/json_io.hpp"
#include "isored/laplacian.hpp"
#include "isored/proptest.hpp"
#include "isored/reduce.hpp"
#include "isored/scc.hpp"
#include "isored/spectrum.hpp"
#include "isored/structural.hpp"
#include "isored/transform.hpp"
#include "isored/weight_format.hpp"
#include "isored/weightset.hpp"

using namespace isored;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kPrecondition = 2;
constexpr int kVerifyFail = 3;

struct Globals {
  std::string out;
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot write '" + g.out + "'");
  f << text;
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError(0, "empty vertex label in '" + csv + "'");
    out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

WeightedDigraph apply_laplacian(const WeightedDigraph& g, const std::string& kind) {
  if (kind.empty()) return g;
  if (kind == "comb") return combinatorial_laplacian_graph(g);
  if (kind == "norm") return normalized_laplacian_graph(g, NormalizedMode::Numeric);
  if (kind == "norm-exact") return normalized_laplacian_graph(g, NormalizedMode::ExactSimilar);
  if (kind == "gen") return generalized_laplacian_graph(g);
  throw ParseError(0, "unknown Laplacian kind '" + kind + "' (expected comb, norm, norm-exact or gen)");
}

std::string spectrum_text(const SpectralList& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.entries.size(); ++k) {
    if (k) out += ", ";
    out += format_complex(s.entries[k].root);
    if (s.entries[k].multiplicity > 1) out += " (x" + std::to_string(s.entries[k].multiplicity) + ")";
  }
  return out + "}";
}

std::string forbidden_text(const ForbiddenSet& n) {
  std::string out = "{";
  for (std::size_t k = 0; k < n.points().size(); ++k) out += (k ? ", " : "") + format_complex(n.points()[k]);
  return out + "}";
}

// Options shared by reduce and verify.
struct ReductionRequest {
  std::string graph;
  std::string set;
  std::string seq;
  std::string to;
  std::string order;
  std::string method = "elimination";
  std::string laplacian;
  std::string reduced;
};

void add_reduction_options(CLI::App* cmd, ReductionRequest& r) {
  cmd->add_option("graph", r.graph, "graph JSON file")->required();
  auto* set = cmd->add_option("--set", r.set, "structural set, comma separated labels");
  auto* seq = cmd->add_option("--seq", r.seq, "JSON file with a sequence of sets [[...], [...]]");
  auto* to = cmd->add_option("--to", r.to, "target set for the unique reduction (graph must be in G_pi)");
  set->excludes(seq)->excludes(to);
  seq->excludes(to);
  cmd->add_option("--order", r.order, "removal order for --to, comma separated")->needs(to);
  cmd->add_option("--method", r.method, "branches or elimination")
      ->check(CLI::IsMember({"branches", "elimination"}));
  cmd->add_option("--laplacian", r.laplacian, "replace the input by its Laplacian graph")
      ->check(CLI::IsMember({"comb", "norm", "norm-exact", "gen"}));
}

struct Reduced {
  WeightedDigraph input;
  Reduction result;
};

Reduced run_reduction(const ReductionRequest& r) {
  const auto g = apply_laplacian(read_graph_file(r.graph), r.laplacian);
  const int modes = !r.set.empty() + !r.seq.empty() + !r.to.empty();
  if (modes != 1) throw ParseError(0, "exactly one of --set, --seq or --to is required");
  if (!r.set.empty()) {
    const auto s = indices_of(g, split_labels(r.set));
    require_structural_set(g, s);
    const auto method = r.method == "branches" ? ReduceMethod::Branches : ReduceMethod::Elimination;
    return {g, {reduce(g, s, method), forbidden_set(g, s)}};
  }
  if (!r.seq.empty()) return {g, sequential_reduce(g, parse_set_sequence_json(read_text_file(r.seq)))};
  std::optional<std::vector<std::string>> order;
  if (!r.order.empty()) order = split_labels(r.order);
  return {g, unique_reduce_to(g, split_labels(r.to), order)};
}

int cmd_verify(const Globals& gl, const ReductionRequest& r) {
  auto red = run_reduction(r);
  // A claimed reduction from a file replaces the computed one; N stays that of the input.
  if (!r.reduced.empty()) red.result.graph = read_graph_file(r.reduced);
  const auto sg = spectrum(red.input);
  const auto sr = spectrum(red.result.graph);
  const auto cmp = spectra_equal_up_to(sg, sr, red.result.forbidden, gl.tol);
  std::string text;
  text += "sigma(G) = " + spectrum_text(sg) + "\n";
  text += "sigma(R) = " + spectrum_text(sr) + "\n";
  text += "N(G;S)   = " + forbidden_text(red.result.forbidden) + "\n";
  if (cmp.equal) {
    text += "PASS\n";
    if (char_det(red.input).num().monic() == char_det(red.result.graph).num().monic())
      text += "note: spectrum preserved exactly\n";
  } else {
    text += "FAIL\n" + cmp.report() + "\n";
  }
  emit(gl, text);
  return cmp.equal ? kOk : kVerifyFail;
}

ordered_json labels_json(const WeightedDigraph& g, const std::vector<int>& vs) {
  ordered_json a = ordered_json::array();
  for (int v : vs) a.push_back(g.label(v));
  return a;
}

int cmd_bas(const Globals& gl, const std::string& file) {
  const auto g = read_graph_file(file);
  ordered_json out;
  out["bas"] = labels_json(g, basic_structural_set(g));
  out["high_out_degree"] = labels_json(g, high_out_degree_vertices(g));
  emit(gl, out.dump(2) + "\n");
  return kOk;
}

int cmd_scc(const Globals& gl, const std::string& file, bool filter) {
  const auto g = read_graph_file(file);
  if (filter) {
    emit(gl, write_graph_json(scc_filter(g)));
    return kOk;
  }
  const auto p = scc_partition(g);
  ordered_json comps = ordered_json::array();
  for (const auto& c : p.components) comps.push_back(labels_json(g, c));
  ordered_json out;
  out["components"] = comps;
  out["block_order"] = labels_json(g, block_order(p));
  emit(gl, out.dump(2) + "\n");
  return kOk;
}

int cmd_weightset(const Globals& gl, const std::string& file, const std::string& subring) {
  const auto g = read_graph_file(file);
  const auto test = subring_test(parse_subring(subring));
  const auto w = weightset_construct(g, test);
  const auto check = verify_weightset(g, w.graph, test);
  emit(gl, write_graph_json(w.graph));
  std::cerr << check.report << "\n";
  for (const auto& m : w.merged) std::cerr << "note: parallel attachment summed on " << m << "\n";
  std::cerr << (check.ok ? "PASS" : "FAIL") << "\n";
  return check.ok ? kOk : kVerifyFail;
}

int cmd_isocheck(const Globals& gl, const std::string& a, const std::string& b) {
  const auto g = read_graph_file(a);
  const auto h = read_graph_file(b);
  ordered_json out;
  const auto map = isomorphism_labels(g, h);
  out["isomorphic"] = map.has_value();
  if (map) {
    ordered_json m = ordered_json::object();
    for (const auto& l : g.labels()) m[l] = map->at(l);
    out["mapping"] = m;
  }
  try {
    out["bas_equivalent"] = bas_equivalent(g, h);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyBas) throw;
    out["bas_equivalent"] = nullptr;
  }
  emit(gl, out.dump(2) + "\n");
  return kOk;
}

int cmd_proptest(const Globals& gl, int cases, const std::string& filter) {
  const auto results = run_properties(cases, gl.seed, filter);
  if (results.empty()) throw ParseError(0, "no property matches '" + filter + "'");
  std::string text;
  int failed = 0;
  for (const auto& r : results) {
    text += format_result(r) + "\n";
    failed += r.ok() ? 0 : 1;
  }
  text += std::to_string(results.size() - static_cast<std::size_t>(failed)) + "/" + std::to_string(results.size()) +
          " properties passed (seed " + std::to_string(gl.seed) + ")\n";
  emit(gl, text);
  return failed ? kVerifyFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isospectral reductions of weighted digraphs"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--out", gl.out, "write output to FILE instead of stdout");
  app.add_option("--tol", gl.tol, "tolerance for spectral comparisons")->capture_default_str();
  app.add_option("--seed", gl.seed, "seed for proptest")->capture_default_str();

  ReductionRequest red_req;
  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a graph over a structural set");
  add_reduction_options(reduce_cmd, red_req);

  ReductionRequest ver_req;
  auto* verify_cmd = app.add_subcommand("verify", "check that a reduction preserves the spectrum outside N");
  add_reduction_options(verify_cmd, ver_req);
  verify_cmd->add_option("--reduced", ver_req.reduced, "check this graph instead of the computed reduction");

  std::string file, file2, laplacian_kind, subring = "int";
  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues with multiplicities");
  spectrum_cmd->add_option("graph", file)->required();
  spectrum_cmd->add_option("--laplacian", laplacian_kind)->check(CLI::IsMember({"comb", "norm", "norm-exact", "gen"}));

  auto* bas_cmd = app.add_subcommand("bas", "basic structural set");
  bas_cmd->add_option("graph", file)->required();

  bool filter = false;
  auto* scc_cmd = app.add_subcommand("scc", "strongly connected components");
  scc_cmd->add_option("graph", file)->required();
  scc_cmd->add_flag("--filter", filter, "emit the graph without inter-component edges");

  std::string set;
  auto* expand_cmd = app.add_subcommand("expand", "rebuild so every branch has private interiors");
  expand_cmd->add_option("graph", file)->required();
  expand_cmd->add_option("--set", set, "structural set")->required();

  std::string edge, w_ij, w_jj, w_jk, bisect_label;
  auto* bisect_cmd = app.add_subcommand("bisect", "split an edge through a new looped vertex");
  bisect_cmd->add_option("graph", file)->required();
  bisect_cmd->add_option("--edge", edge, "edge as FROM,TO")->required();
  bisect_cmd->add_option("--w-ij", w_ij, "weight into the new vertex")->required();
  bisect_cmd->add_option("--w-jj", w_jj, "loop weight of the new vertex")->required();
  bisect_cmd->add_option("--w-jk", w_jk, "weight out of the new vertex")->required();
  bisect_cmd->add_option("--label", bisect_label, "label of the new vertex");

  auto* lap_cmd = app.add_subcommand("laplacian", "Laplacian graph of a simple graph");
  lap_cmd->add_option("graph", file)->required();
  lap_cmd->add_option("--kind", laplacian_kind)->check(CLI::IsMember({"comb", "norm", "norm-exact", "gen"}))->required();

  auto* ws_cmd = app.add_subcommand("weightset", "equivalent graph with weights in a subring");
  ws_cmd->add_option("graph", file)->required();
  ws_cmd->add_option("--subring", subring)->check(CLI::IsMember({"int", "gauss-int", "const", "unit"}))
      ->capture_default_str();

  auto* iso_cmd = app.add_subcommand("isocheck", "isomorphism and bas-equivalence of two graphs");
  iso_cmd->add_option("first", file)->required();
  iso_cmd->add_option("second", file2)->required();

  int cases = 100;
  std::string prop_filter;
  auto* prop_cmd = app.add_subcommand("proptest", "randomized invariant suite");
  prop_cmd->add_option("--cases", cases)->capture_default_str();
  prop_cmd->add_option("--filter", prop_filter, "only properties whose name starts with this prefix");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*reduce_cmd) {
      const auto r = run_reduction(red_req);
      emit(gl, write_reduction_json(r.result.graph, r.result.forbidden));
      return kOk;
    }
    if (*verify_cmd) return cmd_verify(gl, ver_req);
    if (*spectrum_cmd) {
      const auto g = apply_laplacian(read_graph_file(file), laplacian_kind);
      emit(gl, write_spectrum_json(spectrum(g), char_det(g)));
      return kOk;
    }
    if (*bas_cmd) return cmd_bas(gl, file);
    if (*scc_cmd) return cmd_scc(gl, file, filter);
    if (*expand_cmd) {
      const auto g = read_graph_file(file);
      emit(gl, write_graph_json(expand(g, indices_of(g, split_labels(set)))));
      return kOk;
    }
    if (*bisect_cmd) {
      const auto g = read_graph_file(file);
      const auto ends = split_labels(edge);
      if (ends.size() != 2) throw ParseError(0, "--edge expects FROM,TO");
      std::optional<std::string> label;
      if (!bisect_label.empty()) label = bisect_label;
      const auto b = loop_bisect(g, g.index_of(ends[0]), g.index_of(ends[1]), parse_weight(w_ij), parse_weight(w_jj),
                                 parse_weight(w_jk), label);
      emit(gl, write_graph_json(b));
      return kOk;
    }
    if (*lap_cmd) {
      emit(gl, write_graph_json(apply_laplacian(read_graph_file(file), laplacian_kind)));
      return kOk;
    }
    if (*ws_cmd) return cmd_weightset(gl, file, subring);
    if (*iso_cmd) return cmd_isocheck(gl, file, file2);
    if (*prop_cmd) return cmd_proptest(gl, cases, prop_filter);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? kInputError : kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
