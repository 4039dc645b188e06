#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotmm/poly.hpp"

namespace knotmm {

// Fixed-point-free involution of {0..2k-1} (0-based internally; text and JSON
// forms are 1-based).
using Pattern = std::vector<uint8_t>;
using Partition = std::vector<int>;  // weakly decreasing positive parts

bool is_pattern(const Pattern& p);
std::vector<Pattern> enumerate_patterns(int k);
long double_factorial_odd(int k);  // (2k-1)!!

// Lexicographically smallest image under rotations and reflections of the
// boundary.
Pattern canonical(const Pattern& p);
Pattern rotate(const Pattern& p, int r);
Pattern reflect(const Pattern& p);
// q[s(i)] = s(p[i]) for a relabelling s of the boundary points.
Pattern relabel(const Pattern& p, const std::vector<int>& s);

// Number of closed loops when p and q are glued along the boundary.
int glue_loops(const Pattern& p, const Pattern& q);
TauPoly gram_entry(const Pattern& p, const Pattern& q);
// Half-lengths of the cycles of p o q (each cycle is traversed by alternating
// p and q, so cycles come in even lengths).
Partition coset_type(const Pattern& p, const Pattern& q);

std::vector<Partition> partitions(int n);
std::string partition_to_string(const Partition& mu);

// c_mu = prod over boxes (i,j) of (tau + 2j - i - 1), 1-based rows i, columns j.
TauPoly c_mu(const Partition& mu);
Q c_mu_at(const Partition& mu, const Q& tau);
// lim tau->0 of c_mu/tau.
Q c_hat_mu(const Partition& mu);

std::string pattern_to_string(const Pattern& p);   // "(12)(34)", or "(1,2)(3,4)" when 2k > 9
Pattern pattern_from_string(const std::string& s);  // accepts both forms
std::vector<int> pattern_to_one_based(const Pattern& p);
Pattern pattern_from_one_based(const std::vector<int>& v);

}  // namespace knotmm
