#pragma once
// Exact Lagrangian fillings of the (2,n) torus link by pinch sequences, and
// the augmentations they induce on the Chekanov-Eliashberg DGA.
//
// Pinching twist crossing p replaces the chord b_p by two parallel strands
// decorated with a new base point s_p.  On the DGA this is a map into the
// algebra with one more coefficient variable: b_p goes to s_p, and every
// still-unpinched chord b_j that sees b_p across already-pinched crossings
// picks up the correction term s_p^-1 times the square-inverses of the
// variables in between.  Composing all n pinches and identifying the surface
// variables with a basis of H1 of the filling yields the augmentation.
//
// The order of pinches is a permutation of {1..n}; the sets T (chords a
// pinch feeds into) and S (pinches a chord hears from) are the two sides of
// that interaction and satisfy j in S^i exactly when i in T^j.

#include <string>
#include <vector>

#include "legfill/disk_engine.hpp"
#include "legfill/free_algebra.hpp"
#include "legfill/gf2_laurent.hpp"

namespace legfill {

// A permutation of {1..n}, by its value list.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(vals_.size()); }
  int operator()(int i) const;        // value at 1-based position i
  int position_of(int value) const;   // 1-based position, the inverse
  const std::vector<int>& values() const { return vals_; }

  bool operator==(const Permutation& o) const { return vals_ == o.vals_; }
  std::string str() const;  // "(2,3,1)"

 private:
  std::vector<int> vals_;
};

// T: the chords j still unpinched when i is pinched whose gap to i is fully
// pinched, i.e. sigma^-1(j) > sigma^-1(i) and every k strictly between i and
// j has sigma^-1(k) < sigma^-1(i).  Ascending.
std::vector<int> pinch_targets(const Permutation& sigma, int i);

// S: the mirror set, { j : i in T^j }, computed directly as the j pinched
// before i with sigma^-1(k) < sigma^-1(j) for all k strictly between.
// Ascending.
std::vector<int> term_sources(const Permutation& sigma, int i);

// The images of the original chords part-way through a pinch sequence.
struct PinchState {
  int n = 0;                           // twist chords in the original link
  Ctx ctx;                             // s0 plus one s_p per pinch, by subscript
  Alphabet alpha;                      // the original chords b1..bn, a1, a2
  std::vector<AlgebraElement> images;  // one per original chord
  std::vector<int> pinched;            // pinch order so far

  int steps_done() const { return static_cast<int>(pinched.size()); }
};

// The identity state on the (2,n) torus link DGA. Any n >= 1 is allowed;
// the algebra never needs the diagram itself.
PinchState initial_state(int n);

// One pinch at twist chord p (1-based, not yet pinched).
PinchState pinch_move(const PinchState& st, int p);

// All n pinches in the order sigma(1), ..., sigma(n).
PinchState run_pinches(int n, const Permutation& sigma);

// An augmentation into Z2[H1] of the filling: H1 has rank n-1 with basis
// s1..s_{n-1}, the images of the degree-0 chords determine everything, and
// the pinch order is kept as provenance.
struct Augmentation {
  int n = 0;
  Ctx ctx;                          // s1..s_{n-1}
  std::vector<LaurentPoly> images;  // of b1..bn
  std::vector<int> sigma;           // pinch order that produced it

  std::string str() const;  // "b1 -> ...; b2 -> ..."
  // Equality of the induced augmentations; the pinch order is ignored.
  bool operator==(const Augmentation& o) const { return n == o.n && images == o.images; }
};

// Collapses a fully pinched state onto H1 of the filling: s0 and the product
// s1...sn both die, so sn is rewritten as (s1...s_{n-1})^-1.
Augmentation close_filling(const PinchState& st);

// The augmentation of a pinch order, written directly: each chord hears its
// own pinch variable plus one correction term per element of S.
Augmentation closed_form_augmentation(const Permutation& sigma);

// The pinch order on n+1 twist chords that pinches the added last chord
// first and then follows sigma.  Carries fillings of the even-n link to
// fillings of the next odd one.
Permutation lift_permutation(const Permutation& sigma);

// True when the augmentation kills the differential of every chord of the
// torus-link DGA (degree-1 chords are sent to zero, s0 to 1).
bool is_augmentation(const Dga& dga, const Augmentation& aug);

}  // namespace legfill
