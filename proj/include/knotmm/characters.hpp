#pragma once

#include <vector>

#include "knotmm/patterns.hpp"
#include "knotmm/rational.hpp"

namespace knotmm {

// Irreducible S_n character chi^lambda on the class with the given cycle type
// (Murnaghan-Nakayama rule via beta-sets, memoized).
Z mn_character(const Partition& lambda, const Partition& cycle_type);
Z hook_dimension(const Partition& lambda);
Partition cycle_type_of(const std::vector<int>& perm);

// Projector onto the S_{2k}-isotypic component 2mu of the pairing space,
// as a dense (2k-1)!! square matrix in enumerate_patterns(k) order.  Only
// meant for small k (sums over (2k)! permutations).
std::vector<std::vector<Q>> pairing_projector(const Partition& mu);

Partition doubled(const Partition& mu);  // rows 2 mu_i

}  // namespace knotmm
