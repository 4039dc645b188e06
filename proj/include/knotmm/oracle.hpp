#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "knotmm/json_io.hpp"
#include "knotmm/laurent.hpp"
#include "knotmm/loop_solver.hpp"
#include "knotmm/patterns.hpp"
#include "knotmm/series.hpp"

namespace knotmm {

// g-order -> Laurent polynomial in N
using GenusSeries = Series<LaurentPoly>;

enum class VacuumModel { Hermitean, Complex };
std::string vacuum_model_name(VacuumModel m);

// Sum over all Wick matchings with n labelled vertices of N^(faces), returned as
// a histogram faces -> number of matchings.
//   Hermitean: vertices tr M^4, matchings of 4n half-edges.
//   Complex: vertices tr M M^+ M M^+, sigma in S_2n pairing each M with an M^+;
//   the histogram is over c(sigma) + c(tau sigma).
std::map<int, uint64_t> vacuum_face_histogram(VacuumModel m, int n, int threads = 1);
// Same polynomial as the Complex histogram via characters of S_2n.
Poly complex_vacuum_polynomial_characters(int n);

// F = log Z / N^2 with Z = sum_n g^n w_n N^(-n) sum N^faces, w_n = 1/(4^n n!)
// (Hermitean) or 1/(2^n n!) (Complex).
GenusSeries vacuum_free_energy(VacuumModel m, int max_order, int threads = 1);

// h = (2 - V + E - F)/2 for a connected Hermitean matching on 4n half-edges.
int genus_of(const std::vector<uint8_t>& matching);

// Rooted planar diagrams inside a disk with 2k labelled boundary legs, built by
// backtracking over planar half-edge pairings: each open half-edge is either
// joined to another open half-edge of the same face or to a fresh vertex.
// Vertices are crossings (strands go straight) and, optionally, tangencies
// (strands turn back at the vertex; two placements).  Each diagram is counted
// once, weighted tau^(closed loops), and grouped by its external connectivity.
struct ColouredDiagrams {
  int k = 0;
  int order = 0;  // total number of vertices
  bool tangency = false;
  // internal[sigma][crossings][tangencies] = polynomial in tau
  std::map<Pattern, std::vector<std::vector<Poly>>> internal;
};
ColouredDiagrams enumerate_coloured(int k, int order, bool tangency);

// E_pi = sum_sigma tau^loops(pi, sigma) I_sigma, as a bivariate series in
// (crossings, tangencies) truncated by total vertex number.
BiSeries<Poly> oracle_E(const ColouredDiagrams& d, const Pattern& pi);
// The internal-connectivity series I_sigma.
BiSeries<Poly> oracle_I(const ColouredDiagrams& d, const Pattern& sigma);
TauSeries crossings_only(const BiSeries<Poly>& s);

json genus_series_json(VacuumModel m, const GenusSeries& f);
json coloured_json(const ColouredDiagrams& d, const Pattern& pi);

}  // namespace knotmm
