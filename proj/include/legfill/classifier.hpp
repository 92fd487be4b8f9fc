#pragma once
// Classification of the pinch-sequence fillings of the (2,n) torus link.
//
// The per-chord term counts C^i = |S^i| + 1 of the induced augmentation form
// a complete invariant: two pinch orders give Hamiltonian-isotopic fillings
// exactly when their C-vectors agree, and the number of classes is the n-th
// Catalan number.  The same partition is generated by an elementary move
// swapping two adjacent pinches, which is how the equivalence is certified
// here independently of the invariant.
//
// For even n the augmentation attached to a class is the one of the lifted
// pinch order on n+1 chords, since the even link's fillings transport to
// fillings of the next odd one.

#include <cstdint>
#include <string>
#include <vector>

#include "legfill/filling_maps.hpp"

namespace legfill {

// C-vector of a pinch order: C^i = |S^i| + 1, indexed by chord.
std::vector<int> invariant_vector(const Permutation& sigma);

// Same filling class, decided by the invariant.
bool equivalent(const Permutation& a, const Permutation& b);

std::uint64_t catalan(int n);

// Pinch orders reachable by one elementary move: swapping the pinches at
// positions p, p+1 with values i < j is allowed when some chord strictly
// between i and j is pinched after both.
std::vector<Permutation> relation_neighbors(const Permutation& sigma);

// All n! pinch orders, lexicographically.  Guarded to n <= 9.
std::vector<Permutation> all_pinch_orders(int n);

// Component id of each pinch order (indexed lexicographically) under the
// elementary move, found by pure graph search.  Guarded to n <= 9.
std::vector<int> relation_components(int n);

struct ClassInfo {
  Permutation rep;        // lexicographically least member
  std::vector<int> cvec;
  std::uint64_t size;     // members among the n! pinch orders
  Augmentation aug;       // of rep; for even n, of the lifted rep
};

struct ClassReport {
  int n = 0;
  std::uint64_t catalan_number = 0;
  std::vector<ClassInfo> classes;  // ordered by rep
};

// Buckets all n! pinch orders by their invariant.  Refuses n > 10 unless
// forced (n > 12 never fits the invariant encoding used here).
ClassReport enumerate_classes(int n, bool force = false);

// Empty when the class count matches the Catalan number, the attached
// augmentations are pairwise distinct, and the degree-0 chords of the
// relevant link DGA are exactly the twist chords; otherwise a description.
std::string distinctness_report(const ClassReport& report);

// Reparametrizes H1: s_i -> prod_j s_j^(M[j][i]) for a unimodular integer
// matrix M of size (n-1) x (n-1).
Augmentation apply_basis_change(const Augmentation& aug,
                                const std::vector<std::vector<std::int64_t>>& M);

}  // namespace legfill
