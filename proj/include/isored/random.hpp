#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "isored/ratfun.hpp"

namespace isored {

class WeightedDigraph;

/// Seeded generators for property tests. Everything is driven by one
/// mt19937_64 so a (seed, case) pair reproduces an instance exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(eng_); }
  std::mt19937_64& engine() { return eng_; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), eng_);
  }

 private:
  std::mt19937_64 eng_;
};

/// Small Gaussian rational: integer or a/b parts, imaginary part with
/// probability `complex_p`.
GaussRat random_gauss_rat(Rng& rng, int max_abs = 3, double complex_p = 0.25);
/// Polynomial of degree <= max_degree with small coefficients (possibly zero).
Poly random_poly(Rng& rng, int max_degree, double complex_p = 0.25);
/// Canonical rational function with num/den degrees <= max_degree.
RatFun random_ratfun(Rng& rng, int max_degree = 2, double complex_p = 0.25);
/// Nonzero rational function with pi <= 0.
RatFun random_ratfun_pi_nonpos(Rng& rng, int max_degree = 2);

struct RandomGraphOptions {
  int min_vertices = 1;
  int max_vertices = 8;
  double edge_p = 0.35;
  double loop_p = 0.3;
  int weight_abs = 3;          // integer edge weights in [-weight_abs, weight_abs] \ {0}
  bool positive_only = false;  // integer weights in [1, weight_abs]
  bool ratfun_loops = false;   // loops drawn from random_ratfun_pi_nonpos
};

WeightedDigraph random_graph(Rng& rng, const RandomGraphOptions& opt);
/// A graph in G_pi with constant (real integer and Gaussian) weights and
/// occasional pi <= 0 rational-function weights.
WeightedDigraph random_gpi_graph(Rng& rng, int min_vertices, int max_vertices, double ratfun_p = 0.2);
/// Simple undirected graph returned as a symmetric unit-weight digraph.
WeightedDigraph random_simple_graph(Rng& rng, int min_vertices, int max_vertices, double edge_p = 0.45);

/// Random structural set for g: starts from a random subset and adds
/// vertices until the complement is acyclic and loop-safe. Returns sorted
/// vertex indices.
std::vector<int> random_structural_set(Rng& rng, const WeightedDigraph& g, double keep_p = 0.5);

}  // namespace isored
