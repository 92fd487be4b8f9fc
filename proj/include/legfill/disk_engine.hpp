#pragma once
// Rigid holomorphic disks in the Lagrangian projection and the induced
// Chekanov-Eliashberg differential over Z2[H1].
//
// A rigid disk with boundary on the diagram is recovered combinatorially as
// a union of bounded faces that glues to an embedded disk: at every crossing
// the union covers no quadrant, a single quadrant (a puncture), two adjacent
// quadrants (the boundary runs straight through), or all four (an interior
// crossing); the union is connected with Euler characteristic one; and it
// has exactly one puncture in a positive (E or W) quadrant.  Rigidity pins
// the grading: the positive chord exceeds the negative-word grading by one.
//
// The boundary is walked counterclockwise from the positive corner, reading
// off the word of negative chords and the H1 weight from base points.

#include <string>
#include <vector>

#include "legfill/diagram.hpp"
#include "legfill/free_algebra.hpp"

namespace legfill {

struct DiskClass {
  int positive_chord;
  std::vector<int> negative_word;  // chords met counterclockwise from the corner
  Monomial weight;                 // base-point contribution of the boundary
  std::vector<int> faces;          // bounded face indices, ascending
};

// All rigid disks of the diagram, or only those with their positive corner
// at one chord.  Deterministic order.
std::vector<DiskClass> enumerate_rigid_disks(const LagrangianDiagram& dia);
std::vector<DiskClass> enumerate_rigid_disks(const LagrangianDiagram& dia, int chord);

// The differential of one chord: the mod-2 disk count, one term per disk.
AlgebraElement chord_differential(const LagrangianDiagram& dia, int chord);

// A Legendrian link's DGA: the free algebra on the chords together with the
// differential of each generator.
struct Dga {
  Ctx ctx;
  Alphabet alphabet;
  std::vector<AlgebraElement> images;

  const AlgebraElement& of(int chord) const { return images.at(chord); }
  // The differential of an arbitrary element, by the Leibniz rule.
  AlgebraElement apply(const AlgebraElement& x) const { return extend_derivation(x, images); }
};

// Empty when the differential squares to zero and lowers grading by exactly
// one; otherwise a description naming the first offending chord.
std::string check_dga(const Dga& dga);

// Computes the full differential and verifies the DGA axioms, throwing
// std::domain_error with the check_dga diagnostic on failure.
Dga differential(const LagrangianDiagram& dia);

}  // namespace legfill
