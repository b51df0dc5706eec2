#ifndef ORBIGRAPH_SPECTRUM_HPP
#define ORBIGRAPH_SPECTRUM_HPP

#include <string>
#include <vector>

#include "orbigraph/character.hpp"
#include "orbigraph/common.hpp"
#include "orbigraph/graph_action.hpp"

namespace orbigraph {

// One irreducible summand of the vertex crossed product: a vertex orbit
// together with an irreducible of the basepoint stabilizer. block_size =
// orbit size times irrep degree.
struct spectrum_point {
  int orbit = 0;        // index into vertex orbit list
  Id basepoint = undef; // smallest vertex id in the orbit
  int irrep = 0;        // row of the stabilizer character table
  int degree = 0;
  long block_size = 0;
};

// Points grouped by orbit (orbits by smallest vertex), irreps in table order.
std::vector<spectrum_point> spectrum(const graph_action& a);

using int_matrix = std::vector<std::vector<long long>>;

// Edge orbit with its transported stabilizer data: representative edge e
// with rng(e) = the basepoint of its range orbit, stabilizer subgroup of the
// basepoint stabilizer, and the source-side homomorphism phi into the
// stabilizer of the source orbit basepoint.
struct edge_orbit_datum {
  Id rep_edge = undef;          // normalized representative e
  int range_orbit = 0, source_orbit = 0;
  std::vector<Id> stab_elements;  // as elements of range basepoint stabilizer
  std::vector<Id> phi;            // same order, elements of source basepoint stabilizer
};

std::vector<edge_orbit_datum> edge_orbit_data(const graph_action& a);

// Fast quotient adjacency: a[x][y] = sum over edge orbits from orbit(y) to
// orbit(x) of the multiplicity <pi_x, sigma_y . phi> over the edge
// stabilizer. Entries certified non-negative integers.
int_matrix character_adjacency(const graph_action& a);

// Oracle quotient adjacency through the vertex crossed product: corner
// dimensions between minimal central projections divided by block sizes.
// Projections are matched to spectrum points through explicit character
// formula projections and the match is certified.
int_matrix oracle_adjacency(const graph_action& a);

enum class quotient_mode { fast, oracle, both };

struct quotient_graph_report {
  std::vector<spectrum_point> points;
  int_matrix adjacency;            // rows = range point, cols = source point
  bool no_sources = false;         // flags of the acted-on graph
  bool locally_finite = true;
  bool quotient_no_sources = false;
  std::string provenance;          // "fast" | "oracle" | "both-agree"
};

// mode both runs the two routes and raises internal_consistency_error on any
// entrywise disagreement.
quotient_graph_report quotient_graph(const graph_action& a, quotient_mode mode);

std::string quotient_to_dot(const quotient_graph_report& r, const std::string& name);

}  // namespace orbigraph

#endif
