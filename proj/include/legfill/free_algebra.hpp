#pragma once
// Free noncommutative algebra over a GF(2) Laurent coefficient ring.
//
// Generators are Reeb chords, each carrying a label and an integer grading.
// An element is a GF(2) combination of terms (coefficient monomial, word);
// coefficients are central. All values are immutable after construction.

#include <memory>
#include <string>
#include <vector>

#include "legfill/gf2_laurent.hpp"

namespace legfill {

struct ChordInfo {
  std::string label;
  int grading = 0;
};

class ChordAlphabet {
 public:
  explicit ChordAlphabet(std::vector<ChordInfo> chords);

  int size() const { return static_cast<int>(chords_.size()); }
  const std::string& label(int i) const;
  int grading(int i) const;
  int index_of(const std::string& label) const;  // -1 if absent

  bool operator==(const ChordAlphabet& o) const;

 private:
  std::vector<ChordInfo> chords_;
};

using Alphabet = std::shared_ptr<const ChordAlphabet>;

Alphabet make_alphabet(std::vector<ChordInfo> chords);
bool same_alphabet(const Alphabet& a, const Alphabet& b);

// One product of a coefficient monomial and a word of chord indices.
struct AlgebraTerm {
  Monomial coeff;
  std::vector<int> word;

  bool operator==(const AlgebraTerm& o) const { return coeff == o.coeff && word == o.word; }
};

// Canonical term order: shorter words first, then word lex, then larger
// coefficient monomial first (graded-lex).
bool algebra_term_before(const AlgebraTerm& a, const AlgebraTerm& b);

// Sum of the generator gradings along a word.
int word_grading(const Alphabet& alpha, const std::vector<int>& word);

class AlgebraElement {
 public:
  static AlgebraElement zero(Ctx ctx, Alphabet alpha);
  static AlgebraElement one(Ctx ctx, Alphabet alpha);
  static AlgebraElement generator(Ctx ctx, Alphabet alpha, int chord);
  static AlgebraElement word(Ctx ctx, Alphabet alpha, std::vector<int> chords);
  static AlgebraElement scalar(Alphabet alpha, const LaurentPoly& p);
  static AlgebraElement from_terms(Ctx ctx, Alphabet alpha, std::vector<AlgebraTerm> terms);

  const Ctx& ctx() const { return ctx_; }
  const Alphabet& alphabet() const { return alpha_; }
  const std::vector<AlgebraTerm>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  bool is_zero() const { return terms_.empty(); }
  // True when no chord generator occurs in any term.
  bool is_scalar() const;
  // The element as a Laurent polynomial; requires is_scalar().
  LaurentPoly scalar_part() const;

  std::string str() const;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  bool operator==(const AlgebraElement& o) const;

 private:
  AlgebraElement(Ctx ctx, Alphabet alpha, std::vector<AlgebraTerm> terms)
      : ctx_(std::move(ctx)), alpha_(std::move(alpha)), terms_(std::move(terms)) {}

  Ctx ctx_;
  Alphabet alpha_;
  std::vector<AlgebraTerm> terms_;  // strictly increasing under algebra_term_before
};

// Left/right scalar action (coefficients are central, so the two agree).
AlgebraElement operator*(const LaurentPoly& c, const AlgebraElement& x);

// True when every term's word grading equals d (vacuously true for zero).
bool homogeneous_of_degree(const AlgebraElement& x, int d);

// Extends generator images by the Leibniz rule:
//   d(uv) = d(u) v + u d(v),   d(c) = 0 for coefficients.
// gen_images[i] is the image of generator i; all must live in the same
// algebra as x.
AlgebraElement extend_derivation(const AlgebraElement& x,
                                 const std::vector<AlgebraElement>& gen_images);

// The unital algebra map determined by chord_images; coefficients are
// carried along by embedding x's variables into the images' context by name.
// All chord_images must share one context and alphabet.
AlgebraElement apply_hom(const AlgebraElement& x,
                         const std::vector<AlgebraElement>& chord_images);

// The unital algebra map into the commutative coefficient ring `target`
// sending variable i of x's context to var_images[i] and chord i to
// chord_images[i].
LaurentPoly evaluate(const AlgebraElement& x, const std::vector<LaurentPoly>& var_images,
                     const std::vector<LaurentPoly>& chord_images, const Ctx& target);

}  // namespace legfill
