#include "isored/proptest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

#include "isored/error.hpp"
#include "isored/graph.hpp"
#include "isored/isoequiv.hpp"
#include "isored/json_io.hpp"
#include "isored/laplacian.hpp"
#include "isored/oracles.hpp"
#include "isored/reduce.hpp"
#include "isored/scc.hpp"
#include "isored/spectrum.hpp"
#include "isored/structural.hpp"
#include "isored/transform.hpp"
#include "isored/weight_format.hpp"
#include "isored/weightset.hpp"

namespace isored {

namespace {

using Outcome = std::optional<std::string>;

std::string describe(const WeightedDigraph& g) {
  std::string s = "[";
  for (const auto& l : g.labels()) s += l + " ";
  s += "|";
  for (const auto& e : g.edges()) s += " " + g.label(e.from) + "->" + g.label(e.to) + ":" + format_weight(e.weight);
  return s + "]";
}

std::string describe_set(const WeightedDigraph& g, const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + g.label(s[k]);
  return out + "}";
}

// Same graph with shuffled vertex order and fresh labels "u1", "u2", ...
WeightedDigraph relabel(const WeightedDigraph& g, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  GraphBuilder b;
  std::vector<int> pos(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k)
    pos[static_cast<std::size_t>(perm[k])] = b.add_vertex("u" + std::to_string(k + 1));
  for (const auto& e : g.edges())
    b.set_edge(pos[static_cast<std::size_t>(e.from)], pos[static_cast<std::size_t>(e.to)], e.weight);
  return b.build();
}

std::vector<int> bas_or_empty(const WeightedDigraph& g) {
  try {
    return basic_structural_set(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyBas) throw;
  }
  return {};
}

RandomGraphOptions general_options(Rng& rng) {
  RandomGraphOptions o;
  o.min_vertices = 1;
  o.max_vertices = 8;
  o.edge_p = rng.real(0.15, 0.5);
  o.loop_p = 0.35;
  o.weight_abs = 3;
  o.ratfun_loops = true;
  return o;
}

RandomGraphOptions positive_options(Rng& rng) {
  RandomGraphOptions o;
  o.min_vertices = 1;
  o.max_vertices = 8;
  o.edge_p = rng.real(0.1, 0.4);
  o.loop_p = 0.3;
  o.weight_abs = 3;
  o.positive_only = true;
  return o;
}

// Each exact entry of multiplicity k must meet k dense eigenvalues whose mean
// lies within tol; means of perturbed clusters are accurate even where the
// individual eigenvalues of a defective matrix scatter.
Outcome dense_agreement(const SpectralList& exact, const SpectralList& dense, double tol) {
  std::vector<std::complex<double>> pool = dense.flatten();
  if (static_cast<int>(pool.size()) != exact.total())
    return "dense solver found " + std::to_string(pool.size()) + " eigenvalues, exact spectrum has " +
           std::to_string(exact.total());
  std::vector<SpectralEntry> entries = exact.entries;
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SpectralEntry& a, const SpectralEntry& b) { return a.multiplicity > b.multiplicity; });
  for (const auto& e : entries) {
    std::vector<std::size_t> idx(pool.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return std::abs(pool[a] - e.root) < std::abs(pool[b] - e.root); });
    std::complex<double> mean = 0;
    for (int k = 0; k < e.multiplicity; ++k) mean += pool[idx[static_cast<std::size_t>(k)]];
    mean /= static_cast<double>(e.multiplicity);
    if (std::abs(mean - e.root) > tol * std::max(1.0, std::abs(e.root)))
      return "root " + format_complex(e.root) + " (mult " + std::to_string(e.multiplicity) +
             ") has no matching dense cluster; nearest mean " + format_complex(mean);
    std::vector<std::size_t> take(idx.begin(), idx.begin() + e.multiplicity);
    std::sort(take.rbegin(), take.rend());
    for (auto t : take) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(t));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- ratfun

Outcome field_axioms(Rng& rng) {
  const RatFun a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
  if (!((a + b) + c == a + (b + c))) return "addition not associative";
  if (!((a * b) * c == a * (b * c))) return "multiplication not associative";
  if (!(a + b == b + a) || !(a * b == b * a)) return "not commutative";
  if (!(a * (b + c) == a * b + a * c)) return "not distributive for a=" + a.to_string() + " b=" + b.to_string();
  if (!(a + (-a)).is_zero()) return "additive inverse fails";
  if (!a.is_zero() && !(a * a.inverse()).is_one()) return "multiplicative inverse fails for " + a.to_string();
  if (!b.is_zero() && !((a / b) * b == a)) return "division does not invert multiplication";
  return std::nullopt;
}

Outcome canonical_form(Rng& rng) {
  const RatFun a = random_ratfun(rng) * random_ratfun(rng) + random_ratfun(rng);
  if (!a.den().is_monic()) return "denominator not monic: " + a.to_string();
  if (!gcd(a.num(), a.den()).is_one() && !a.is_zero()) return "numerator and denominator share a factor";
  if (a.is_zero() && !a.den().is_one()) return "zero not represented as 0/1";
  const RatFun again = RatFun::from_parts(a.num(), a.den());
  if (!(again == a) || !(again.num() == a.num())) return "canonicalization not idempotent";
  // Scaling both parts by a common polynomial factor must canonicalize back.
  Poly f = random_poly(rng, 2);
  if (f.is_zero()) f = Poly(GaussRat(3));
  if (!(RatFun::from_parts(a.num() * f, a.den() * f) == a)) return "common factor not cancelled";
  return std::nullopt;
}

Outcome pi_rules(Rng& rng) {
  const RatFun a = random_ratfun(rng), b = random_ratfun(rng);
  const PiDegree pa = a.pi(), pb = b.pi();
  if (!((a + b).pi() <= std::max(pa, pb))) return "pi(a+b) exceeds max(pi(a), pi(b))";
  if (!a.is_zero() && !b.is_zero()) {
    if (!((a * b).pi() == pa + pb)) return "pi(ab) != pi(a) + pi(b)";
    const RatFun loop = rng.chance(0.3) ? RatFun() : random_ratfun_pi_nonpos(rng, 2);
    const RatFun q = a * b / (RatFun::lambda() - loop);
    if (!(q.pi() < pa + pb)) return "pi(ab/(lambda - c)) not below pi(a) + pi(b)";
  }
  return std::nullopt;
}

Outcome parse_roundtrip(Rng& rng) {
  const RatFun a = random_ratfun(rng, 3, 0.3);
  const std::string text = format_weight(a);
  const RatFun back = parse_weight(text);
  if (!(back == a)) return "parse(format(x)) != x for " + text;
  if (format_weight(back) != text) return "format not stable for " + text;
  return std::nullopt;
}

Outcome squarefree_reconstruct(Rng& rng) {
  Poly p(GaussRat(rng.uniform(1, 5)));
  const int parts = static_cast<int>(rng.uniform(1, 3));
  for (int k = 0; k < parts; ++k) {
    Poly f = random_poly(rng, 2, 0.2);
    if (f.is_constant()) f = Poly::linear_root(GaussRat(rng.uniform(-3, 3)));
    const int e = static_cast<int>(rng.uniform(1, 3));
    for (int r = 0; r < e; ++r) p *= f;
  }
  const auto dec = squarefree_decompose(p);
  Poly prod(GaussRat(1));
  int degree_sum = 0;
  for (const auto& f : dec) {
    if (!gcd(f.factor, f.factor.derivative()).is_one()) return "factor not square-free";
    for (int r = 0; r < f.multiplicity; ++r) prod *= f.factor;
    degree_sum += f.multiplicity * f.factor.degree();
  }
  for (std::size_t a = 0; a < dec.size(); ++a)
    for (std::size_t b = a + 1; b < dec.size(); ++b)
      if (!gcd(dec[a].factor, dec[b].factor).is_one()) return "factors not coprime";
  if (!(prod == p.monic())) return "product of factors does not reconstruct " + format_poly(p);
  if (degree_sum != p.degree()) return "multiplicity-weighted degrees do not sum to deg p";
  return std::nullopt;
}

// ---------------------------------------------------------------- wgraph

Outcome transpose_spectrum(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  const auto t = transpose(g);
  if (!(transpose(t) == g)) return "transpose is not an involution";
  if (!(char_det(t) == char_det(g))) return "char_det(transpose) differs for " + describe(g);
  return std::nullopt;
}

Outcome graph_roundtrip(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  const auto m = adjacency_matrix(g);
  if (!(adjacency_matrix(from_matrix(g.labels(), m)) == m)) return "matrix round-trip changed entries";
  for (const auto& e : g.edges())
    if (e.weight.is_zero()) return "zero weight stored";
  const std::string text = write_graph_json(g);
  const auto back = parse_graph_json(text);
  if (!(back == g) || back.labels() != g.labels()) return "JSON round-trip changed the graph";
  if (write_graph_json(back) != text) return "JSON output not a fixed point";
  return std::nullopt;
}

// ---------------------------------------------------------------- structural

Outcome bas_is_structural(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  std::vector<int> bas;
  try {
    bas = basic_structural_set(g);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EmptyBas) return std::nullopt;
    throw;
  }
  if (!is_structural_set(g, bas)) return "bas not structural for " + describe(g);
  if (!forbidden_set(g, bas).subset_of(ForbiddenSet::roots_of(Poly::x())))
    return "N(G, bas(G)) not inside {0} for " + describe(g);
  return std::nullopt;
}

Outcome gpi_single_removal(Rng& rng) {
  const auto g = random_gpi_graph(rng, 2, 8);
  for (int v = 0; v < g.size(); ++v)
    if (!is_structural_set(g, complement(g, {v}))) return "V minus " + g.label(v) + " not structural";
  return std::nullopt;
}

Outcome acyclic_vs_bruteforce(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  std::vector<int> s;
  for (int v = 0; v < g.size(); ++v)
    if (rng.chance(0.4)) s.push_back(v);
  if (s.empty()) s.push_back(0);
  const auto comp = complement(g, s);
  const bool acyclic = simple_cycles_bruteforce(g, comp).empty();
  const auto check = check_structural_set(g, s);
  if (!check.lambda_loop && check.ok != acyclic)
    return "DFS and brute-force cycle search disagree on " + describe_set(g, s);
  if (!is_structural_set(g, complement(g, {}))) return "V itself not structural";
  if (!forbidden_set(g, complement(g, {})).empty()) return "N(G; V) not empty";
  return std::nullopt;
}

// ---------------------------------------------------------------- reduce

Outcome spectrum_outside_forbidden(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  const auto s = random_structural_set(rng, g, rng.real(0.2, 0.7));
  const auto r = reduce(g, s);
  const auto n = forbidden_set(g, s);
  const auto cmp = spectra_equal_up_to(spectrum(g), spectrum(r), n, 1e-6);
  if (!cmp.equal) return "spectra differ outside N for " + describe(g) + " S=" + describe_set(g, s) + ": " + cmp.report();
  return std::nullopt;
}

Outcome elimination_orders(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  auto s = random_structural_set(rng, g, 0.4);
  auto comp = complement(g, s);
  while (comp.size() > 4) {
    s.push_back(comp[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(comp.size()) - 1))]);
    std::sort(s.begin(), s.end());
    comp = complement(g, s);
  }
  const auto by_branches = reduce(g, s, ReduceMethod::Branches);
  std::vector<std::string> drop = labels_of(g, comp);
  std::sort(drop.begin(), drop.end());
  do {
    WeightedDigraph cur = g;
    for (const auto& l : drop) cur = remove_vertex(cur, cur.index_of(l));
    if (!(cur == by_branches))
      return "elimination order differs from branch reduction for " + describe(g) + " S=" + describe_set(g, s);
  } while (std::next_permutation(drop.begin(), drop.end()));
  return std::nullopt;
}

Outcome unique_in_gpi(Rng& rng) {
  const auto g = random_gpi_graph(rng, 2, 7);
  std::vector<int> target;
  for (int v = 0; v < g.size(); ++v)
    if (rng.chance(0.5)) target.push_back(v);
  if (target.empty()) target.push_back(static_cast<int>(rng.uniform(0, g.size() - 1)));
  const auto labels = labels_of(g, target);
  auto order1 = labels_of(g, complement(g, target));
  auto order2 = order1;
  rng.shuffle(order1);
  rng.shuffle(order2);
  const auto r1 = unique_reduce_to(g, labels, order1);
  const auto r2 = unique_reduce_to(g, labels, order2);
  if (!(r1.graph == r2.graph)) return "removal orders disagree on " + describe(g) + " target " + describe_set(g, target);
  // A two-stage sequence through an intermediate set must land on the same graph.
  std::vector<std::string> mid = labels;
  for (const auto& l : order1)
    if (rng.chance(0.5)) mid.push_back(l);
  const auto stage = unique_reduce_to(g, mid);
  const auto r3 = unique_reduce_to(stage.graph, labels);
  if (!(r3.graph == r1.graph)) return "two-stage reduction differs on " + describe(g);
  if (is_structural_set(g, target) && !(reduce(g, target) == r1.graph))
    return "R_S(G) differs from the unique reduction on " + describe(g);
  return std::nullopt;
}

Outcome gpi_closure(Rng& rng) {
  const auto g = random_gpi_graph(rng, 1, 8);
  const auto s = random_structural_set(rng, g, 0.5);
  if (!is_g_pi(reduce(g, s))) return "reduction left G_pi for " + describe(g);
  return std::nullopt;
}

Outcome decomposition_implies_reduction(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  const auto s = random_structural_set(rng, g, 0.5);
  const auto x = expand(g, s);
  const auto sx = indices_of(x, labels_of(g, s));
  std::map<std::string, std::string> rho;
  for (int v : s) rho[g.label(v)] = g.label(v);
  if (!common_decomposition(g, s, x, sx, rho)) return "expansion lost the branch decomposition of " + describe(g);
  if (!common_reduction(g, s, x, sx)) return "common decomposition without common reduction on " + describe(g);
  return std::nullopt;
}

Outcome expand_independent(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  const auto s = random_structural_set(rng, g, 0.5);
  const auto x = expand(g, s);
  const auto sx = indices_of(x, labels_of(g, s));
  std::vector<int> uses(static_cast<std::size_t>(x.size()), 0);
  for (const auto& br : enumerate_all_branches(x, sx))
    for (std::size_t k = 1; k + 1 < br.vertices.size(); ++k) ++uses[static_cast<std::size_t>(br.vertices[k])];
  std::vector<char> in_s(static_cast<std::size_t>(x.size()), 0);
  for (int v : sx) in_s[static_cast<std::size_t>(v)] = 1;
  for (int v = 0; v < x.size(); ++v)
    if (!in_s[static_cast<std::size_t>(v)] && uses[static_cast<std::size_t>(v)] != 1)
      return "interior " + x.label(v) + " lies on " + std::to_string(uses[static_cast<std::size_t>(v)]) + " branches";
  return std::nullopt;
}

Outcome expand_then_reduce(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  const auto s = random_structural_set(rng, g, 0.5);
  const auto x = expand(g, s);
  if (!(reduce(x, indices_of(x, labels_of(g, s))) == reduce(g, s)))
    return "reduce(expand(G)) != reduce(G) for " + describe(g) + " S=" + describe_set(g, s);
  return std::nullopt;
}

Outcome bisect_contract(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  const auto edges = g.edges();
  if (edges.empty()) return std::nullopt;
  const Edge& e = edges[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(edges.size()) - 1))];
  const RatFun c = rng.chance(0.5) ? RatFun() : RatFun(rng.uniform(-2, 2));
  const RatFun a(rng.uniform(1, 3));
  const RatFun lam_c = RatFun::lambda() - c;
  const RatFun w_jk = e.weight * lam_c / a;
  const auto b = loop_bisect(g, e.from, e.to, a, c, w_jk);
  if (b.size() != g.size() + 1) return "bisection did not add one vertex";
  const auto back = remove_vertex(b, b.size() - 1);
  if (!(back == g)) return "contracting the bisection vertex did not restore " + describe(g);
  const auto n = ForbiddenSet::roots_of(lam_c.num());
  const auto cmp = spectra_equal_up_to(spectrum(g), spectrum(b), n, 1e-6);
  if (!cmp.equal) return "bisection changed the spectrum outside the loop root: " + cmp.report();
  return std::nullopt;
}

Outcome prune_then_reduce(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  const auto s = random_structural_set(rng, g, 0.4);
  const auto p = prune_off_branch(g, s);
  const auto sp = indices_of(p, labels_of(g, s));
  if (!(reduce(p, sp) == reduce(g, s))) return "pruning changed the reduction of " + describe(g);
  return std::nullopt;
}

// ---------------------------------------------------------------- spectrum

Outcome det_scc_product(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  const auto p = scc_partition(g);
  RatFun prod(1);
  for (const auto& c : p.components) prod *= char_det(induced_subgraph(g, c));
  if (!(prod == char_det(g))) return "char_det is not the product over components for " + describe(g);
  if (!is_block_lower_triangular(g, p)) return "component order is not block lower triangular";
  const auto sigma = spectrum(g);
  if (sigma.total() != char_det(g).num().degree()) return "multiplicities do not sum to the numerator degree";
  return std::nullopt;
}

Outcome spectrum_vs_dense(Rng& rng) {
  RandomGraphOptions o = general_options(rng);
  o.ratfun_loops = false;
  const auto g = random_graph(rng, o);
  if (auto bad = dense_agreement(spectrum(g), eig_dense(g), 1e-6)) return *bad + " for " + describe(g);
  return std::nullopt;
}

// ---------------------------------------------------------------- scc

Outcome scc_commutes(Rng& rng) {
  const auto g = random_graph(rng, positive_options(rng));
  const auto s = random_structural_set(rng, g, 0.5);
  const auto a = reduce(scc_filter(g), s);
  const auto b = scc_filter(reduce(g, s));
  if (!(a == b)) return "R_S(G^scc) != R_S(G)^scc for " + describe(g) + " S=" + describe_set(g, s);
  return std::nullopt;
}

Outcome scc_spectrum(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  if (!(char_det(scc_filter(g)) == char_det(g))) return "scc_filter changed char_det of " + describe(g);
  return std::nullopt;
}

Outcome scc_component_reduction(Rng& rng) {
  const auto g = random_graph(rng, positive_options(rng));
  const auto s = random_structural_set(rng, g, 0.5);
  const auto check = reduced_scc_check(g, s);
  if (!check.ok) return check.report + " for " + describe(g) + " S=" + describe_set(g, s);
  // Block structure of R_S(G) in the order induced by the components of G.
  const auto r = reduce(g, s);
  const auto pg = scc_partition(g);
  for (const auto& e : r.edges()) {
    const int a = pg.component_of[static_cast<std::size_t>(g.index_of(r.label(e.from)))];
    const int b = pg.component_of[static_cast<std::size_t>(g.index_of(r.label(e.to)))];
    if (a < b) return "R_S(G) has an entry above the induced diagonal blocks";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- laplacian

Outcome laplacian_independent_complement(Rng& rng) {
  const auto g = random_simple_graph(rng, 2, 8);
  // Complement must be independent: greedily keep only non-adjacent vertices out of S.
  std::vector<int> out;
  std::vector<int> order(static_cast<std::size_t>(g.size()));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  for (int v : order) {
    if (!rng.chance(0.5)) continue;
    bool free = true;
    for (int w : out) free = free && !g.has_edge(v, w);
    if (free) out.push_back(v);
  }
  if (static_cast<int>(out.size()) == g.size()) out.pop_back();
  std::sort(out.begin(), out.end());
  const auto s = complement(g, out);
  for (int mode = 0; mode < 2; ++mode) {
    const auto l = mode == 0 ? combinatorial_laplacian_graph(g) : normalized_laplacian_graph(g);
    if (!is_structural_set(l, s)) return "S not structural for the Laplacian of " + describe(g);
    const auto cmp = spectra_equal_up_to(spectrum(l), spectrum(reduce(l, s)), forbidden_set(l, s), 1e-6);
    if (!cmp.equal) return "Laplacian spectra differ outside N: " + cmp.report();
  }
  return std::nullopt;
}

Outcome normalized_modes(Rng& rng) {
  const auto g = random_simple_graph(rng, 1, 8);
  const auto exact = normalized_laplacian_graph(g, NormalizedMode::ExactSimilar);
  const auto numeric = normalized_laplacian_graph(g, NormalizedMode::Numeric);
  const auto cmp = match_points(spectrum(exact).flatten(), eig_dense(numeric).flatten(), 1e-8);
  if (!cmp.equal) return "normalized Laplacian modes disagree: " + cmp.report();
  return std::nullopt;
}

// ---------------------------------------------------------------- weightset

Outcome weightset_props(Rng& rng) {
  RandomGraphOptions o = positive_options(rng);
  o.loop_p = 0.15;
  const auto g = random_graph(rng, o);
  const auto in_int = subring_test(Subring::Integers);
  WeightsetResult w;
  try {
    w = weightset_construct(g, in_int);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EmptyBas) return std::nullopt;
    throw;
  }
  if (w.graph.size() != w.expected_vertices) return "vertex count differs from m + sum(l_i - 1)";
  const auto check = verify_weightset(g, w.graph, in_int);
  if (!check.count_ok || !check.subring_ok || !check.branch_equivalent) return check.report + " for " + describe(g);
  // Membership in [g] follows once the basic vertices survive as bas of the output.
  if (labels_of(w.graph, bas_or_empty(w.graph)) == labels_of(g, w.bas) && !check.equivalent)
    return "same basic labels but no common reduction for " + describe(g);
  const auto cmp = spectra_equal_up_to(spectrum(g), spectrum(w.graph), ForbiddenSet::roots_of(Poly::x()), 1e-6);
  if (!cmp.equal) return "spectra differ outside {0}: " + cmp.report();
  return std::nullopt;
}

// ---------------------------------------------------------------- isoequiv

Outcome iso_relation(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  const auto h = relabel(g, rng);
  const auto fwd = isomorphic(g, h);
  if (!fwd || !is_isomorphism(g, h, *fwd)) return "no isomorphism onto a relabelled copy of " + describe(g);
  const auto back = isomorphic(h, g);
  if (!back || !is_isomorphism(h, g, *back)) return "isomorphism not found in reverse";
  if (!isomorphic(g, g)) return "not reflexive";
  if (!g.edges().empty()) {
    GraphBuilder b(h);
    const auto e = h.edges().front();
    b.set_edge(e.from, e.to, e.weight + RatFun(1));
    if (isomorphic(g, b.build())) return "perturbed copy still isomorphic";
  }
  return std::nullopt;
}

Outcome bas_relation(Rng& rng) {
  const auto g = random_graph(rng, positive_options(rng));
  try {
    basic_structural_set(g);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EmptyBas) return std::nullopt;
    throw;
  }
  // The weight-set graph is used when it keeps the basic labels, which is
  // when it is guaranteed to lie in [g]; otherwise a relabelled copy.
  const auto w = weightset_construct(g, subring_test(Subring::Integers));
  const bool kept = labels_of(w.graph, bas_or_empty(w.graph)) == labels_of(g, w.bas);
  const auto h = kept ? w.graph : relabel(g, rng);
  const auto k = relabel(h, rng);
  if (!bas_equivalent(g, g)) return "not reflexive";
  if (!bas_equivalent(g, h) || !bas_equivalent(h, g)) return "weight-set graph not equivalent (or not symmetric)";
  if (bas_equivalent(h, k) && !bas_equivalent(g, k)) return "not transitive";
  const auto cmp = spectra_equal_up_to(spectrum(g), spectrum(k), ForbiddenSet::roots_of(Poly::x()), 1e-6);
  if (!cmp.equal) return "equivalent graphs differ outside {0}: " + cmp.report();
  return std::nullopt;
}

Outcome tau_relation(Rng& rng) {
  const auto g = random_gpi_graph(rng, 1, 7, 0.1);
  const auto h = relabel(g, rng);
  const auto k = relabel(h, rng);
  const auto rule = [](const WeightedDigraph& x) { return tau_min_outdegree_reduce(x); };
  if (!tau_equivalent(g, g, rule)) return "tau relation not reflexive";
  if (tau_equivalent(g, h, rule) != tau_equivalent(h, g, rule)) return "tau relation not symmetric";
  if (!tau_equivalent(g, h, rule) || !tau_equivalent(h, k, rule) || !tau_equivalent(g, k, rule))
    return "relabelled copies not tau-equivalent";
  const auto r = tau_min_outdegree_reduce(g).graph;
  for (int v = 0; v < r.size(); ++v)
    if (r.out_degree(v) != r.out_degree(0)) return "fixed point has unequal out-degrees";
  return std::nullopt;
}

// ---------------------------------------------------------------- oracles

Outcome det_vs_leibniz(Rng& rng) {
  const int n = static_cast<int>(rng.uniform(0, 6));
  RatMatrix m(n);
  const double fill = rng.real(0.3, 0.9);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.chance(fill)) m(i, j) = rng.chance(0.5) ? RatFun(rng.uniform(-3, 3)) : random_ratfun(rng, 1, 0.2);
  if (rng.chance(0.5)) m = m.minus_lambda_identity();
  if (!(determinant(m) == det_leibniz(m))) return "elimination and Leibniz determinants differ (n=" + std::to_string(n) + ")";
  return std::nullopt;
}

Outcome branches_vs_paths(Rng& rng) {
  const auto g = random_graph(rng, general_options(rng));
  const auto s = random_structural_set(rng, g, 0.5);
  for (int i : s)
    for (int j : s) {
      std::vector<std::vector<int>> a;
      for (const auto& b : enumerate_branches(g, s, i, j)) a.push_back(b.vertices);
      std::sort(a.begin(), a.end());
      if (a != all_paths(g, i, j, s))
        return "branch enumeration differs from exhaustive DFS for " + g.label(i) + "->" + g.label(j) + " in " +
               describe(g);
    }
  return std::nullopt;
}

std::vector<PropertySpec> catalogue() {
  return {
      {"ratfun.field_axioms", field_axioms},
      {"ratfun.canonical_form", canonical_form},
      {"ratfun.pi_rules", pi_rules},
      {"ratfun.parse_format_roundtrip", parse_roundtrip},
      {"ratfun.squarefree_reconstruct", squarefree_reconstruct},
      {"wgraph.transpose_spectrum", transpose_spectrum},
      {"wgraph.roundtrip", graph_roundtrip},
      {"structural.bas_structural", bas_is_structural},
      {"structural.gpi_single_removal", gpi_single_removal},
      {"structural.acyclic_vs_bruteforce", acyclic_vs_bruteforce},
      {"reduce.spectrum_outside_forbidden", spectrum_outside_forbidden},
      {"reduce.elimination_orders", elimination_orders},
      {"reduce.unique_in_gpi", unique_in_gpi},
      {"reduce.gpi_closure", gpi_closure},
      {"reduce.decomposition_reduction", decomposition_implies_reduction},
      {"reduce.expand_independent", expand_independent},
      {"reduce.expand_then_reduce", expand_then_reduce},
      {"reduce.bisect_contract", bisect_contract},
      {"reduce.prune_then_reduce", prune_then_reduce},
      {"spectrum.det_scc_product", det_scc_product},
      {"spectrum.vs_dense", spectrum_vs_dense},
      {"scc.reduce_commutes", scc_commutes},
      {"scc.spectrum_preserved", scc_spectrum},
      {"scc.component_reduction", scc_component_reduction},
      {"laplacian.independent_complement", laplacian_independent_complement},
      {"laplacian.normalized_modes", normalized_modes},
      {"weightset.construction", weightset_props},
      {"isoequiv.isomorphism", iso_relation},
      {"isoequiv.bas_relation", bas_relation},
      {"isoequiv.tau_relation", tau_relation},
      {"oracles.det_leibniz", det_vs_leibniz},
      {"oracles.branches_vs_paths", branches_vs_paths},
  };
}

std::uint64_t case_seed(std::uint64_t seed, const std::string& name, int k) {
  // FNV-1a over the name keeps properties on independent streams.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32), static_cast<std::uint32_t>(k)};
  std::uint64_t out[1];
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  out[0] = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
  return out[0];
}

}  // namespace

PropertyResult run_property(const PropertySpec& spec, int cases, std::uint64_t seed) {
  PropertyResult r;
  r.name = spec.name;
  const auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < cases; ++k) {
    Rng rng(case_seed(seed, spec.name, k));
    Outcome bad;
    try {
      bad = spec.body(rng);
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (bad) {
      if (r.failures == 0) r.first_failure = "case " + std::to_string(k) + ": " + *bad;
      ++r.failures;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

const std::vector<PropertySpec>& all_properties() {
  static const std::vector<PropertySpec> specs = catalogue();
  return specs;
}

const PropertySpec& property(const std::string& name) {
  for (const auto& p : all_properties())
    if (p.name == name) return p;
  throw std::out_of_range("unknown property '" + name + "'");
}

std::vector<PropertyResult> run_properties(int cases, std::uint64_t seed, const std::string& prefix) {
  std::vector<PropertyResult> out;
  for (const auto& p : all_properties())
    if (p.name.rfind(prefix, 0) == 0) out.push_back(run_property(p, cases, seed));
  return out;
}

std::string format_result(const PropertyResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
  std::string s = std::string(r.ok() ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases) + " cases, " +
                  std::to_string(r.failures) + " failed, " + buf + ")";
  if (!r.ok()) s += "\n     " + r.first_failure;
  return s;
}

}  // namespace isored
