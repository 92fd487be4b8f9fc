#include "legfill/free_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace legfill {

ChordAlphabet::ChordAlphabet(std::vector<ChordInfo> chords) : chords_(std::move(chords)) {
  std::set<std::string> seen;
  for (const auto& c : chords_) {
    if (c.label.empty()) throw std::invalid_argument("empty chord label");
    if (!seen.insert(c.label).second) throw std::invalid_argument("duplicate chord label: " + c.label);
  }
}

const std::string& ChordAlphabet::label(int i) const {
  if (i < 0 || i >= size()) throw std::invalid_argument("chord index out of range");
  return chords_[i].label;
}

int ChordAlphabet::grading(int i) const {
  if (i < 0 || i >= size()) throw std::invalid_argument("chord index out of range");
  return chords_[i].grading;
}

int ChordAlphabet::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (chords_[i].label == label) return i;
  return -1;
}

bool ChordAlphabet::operator==(const ChordAlphabet& o) const {
  if (size() != o.size()) return false;
  for (int i = 0; i < size(); ++i)
    if (chords_[i].label != o.chords_[i].label || chords_[i].grading != o.chords_[i].grading)
      return false;
  return true;
}

Alphabet make_alphabet(std::vector<ChordInfo> chords) {
  return std::make_shared<const ChordAlphabet>(std::move(chords));
}

bool same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!a || !b) return false;
  return a == b || *a == *b;
}

bool algebra_term_before(const AlgebraTerm& a, const AlgebraTerm& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  if (a.word != b.word) return a.word < b.word;
  return grlex_cmp(a.coeff, b.coeff) > 0;
}

int word_grading(const Alphabet& alpha, const std::vector<int>& word) {
  int d = 0;
  for (int g : word) d += alpha->grading(g);
  return d;
}

static std::vector<AlgebraTerm> normalize(std::vector<AlgebraTerm> ts) {
  std::sort(ts.begin(), ts.end(), algebra_term_before);
  std::vector<AlgebraTerm> out;
  size_t i = 0;
  while (i < ts.size()) {
    size_t j = i;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(ts[i]);
    i = j;
  }
  return out;
}

static void require_compatible(const AlgebraElement& a, const AlgebraElement& b, const char* op) {
  if (!same_context(a.ctx(), b.ctx()) || !same_alphabet(a.alphabet(), b.alphabet()))
    throw std::invalid_argument(std::string("algebra mismatch in ") + op);
}

AlgebraElement AlgebraElement::zero(Ctx ctx, Alphabet alpha) {
  return AlgebraElement(std::move(ctx), std::move(alpha), {});
}

AlgebraElement AlgebraElement::one(Ctx ctx, Alphabet alpha) {
  Monomial u = Monomial::unit(ctx->arity());
  return AlgebraElement(std::move(ctx), std::move(alpha), {{std::move(u), {}}});
}

AlgebraElement AlgebraElement::generator(Ctx ctx, Alphabet alpha, int chord) {
  return word(std::move(ctx), std::move(alpha), {chord});
}

AlgebraElement AlgebraElement::word(Ctx ctx, Alphabet alpha, std::vector<int> chords) {
  for (int g : chords)
    if (g < 0 || g >= alpha->size()) throw std::invalid_argument("chord index out of range");
  Monomial u = Monomial::unit(ctx->arity());
  return AlgebraElement(std::move(ctx), std::move(alpha), {{std::move(u), std::move(chords)}});
}

AlgebraElement AlgebraElement::scalar(Alphabet alpha, const LaurentPoly& p) {
  std::vector<AlgebraTerm> ts;
  ts.reserve(p.terms().size());
  for (const auto& m : p.terms()) ts.push_back({m, {}});
  return AlgebraElement(p.ctx(), std::move(alpha), normalize(std::move(ts)));
}

AlgebraElement AlgebraElement::from_terms(Ctx ctx, Alphabet alpha,
                                          std::vector<AlgebraTerm> terms) {
  for (const auto& t : terms) {
    if (t.coeff.arity() != ctx->arity()) throw std::invalid_argument("coefficient arity mismatch");
    for (int g : t.word)
      if (g < 0 || g >= alpha->size()) throw std::invalid_argument("chord index out of range");
  }
  return AlgebraElement(std::move(ctx), std::move(alpha), normalize(std::move(terms)));
}

bool AlgebraElement::is_scalar() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const AlgebraTerm& t) { return t.word.empty(); });
}

LaurentPoly AlgebraElement::scalar_part() const {
  if (!is_scalar()) throw std::domain_error("scalar_part of a non-scalar element");
  std::vector<Monomial> ms;
  ms.reserve(terms_.size());
  for (const auto& t : terms_) ms.push_back(t.coeff);
  return LaurentPoly::from_monomials(ctx_, std::move(ms));
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    std::string ws;
    for (int g : t.word) {
      if (!ws.empty()) ws += "*";
      ws += alpha_->label(g);
    }
    if (t.word.empty()) {
      s += monomial_str(*ctx_, t.coeff);
    } else if (t.coeff.is_unit()) {
      s += ws;
    } else {
      s += monomial_str(*ctx_, t.coeff) + "*" + ws;
    }
  }
  return s;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_compatible(a, b, "add");
  std::vector<AlgebraTerm> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::set_symmetric_difference(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                b.terms_.end(), std::back_inserter(out), algebra_term_before);
  return AlgebraElement(a.ctx_, a.alpha_, std::move(out));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_compatible(a, b, "mul");
  std::vector<AlgebraTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      AlgebraTerm t{ta.coeff.times(tb.coeff), ta.word};
      t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
      out.push_back(std::move(t));
    }
  return AlgebraElement(a.ctx_, a.alpha_, normalize(std::move(out)));
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return same_context(ctx_, o.ctx_) && same_alphabet(alpha_, o.alpha_) && terms_ == o.terms_;
}

AlgebraElement operator*(const LaurentPoly& c, const AlgebraElement& x) {
  return AlgebraElement::scalar(x.alphabet(), c) * x;
}

bool homogeneous_of_degree(const AlgebraElement& x, int d) {
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const AlgebraTerm& t) {
    return word_grading(x.alphabet(), t.word) == d;
  });
}

AlgebraElement extend_derivation(const AlgebraElement& x,
                                 const std::vector<AlgebraElement>& gen_images) {
  if (static_cast<int>(gen_images.size()) != x.alphabet()->size())
    throw std::invalid_argument("extend_derivation: expected one image per generator");
  for (const auto& img : gen_images) require_compatible(x, img, "extend_derivation");

  AlgebraElement acc = AlgebraElement::zero(x.ctx(), x.alphabet());
  for (const auto& t : x.terms()) {
    for (size_t i = 0; i < t.word.size(); ++i) {
      std::vector<int> prefix(t.word.begin(), t.word.begin() + i);
      std::vector<int> suffix(t.word.begin() + i + 1, t.word.end());
      AlgebraElement piece =
          AlgebraElement::from_terms(x.ctx(), x.alphabet(), {{t.coeff, std::move(prefix)}}) *
          gen_images[t.word[i]] *
          AlgebraElement::word(x.ctx(), x.alphabet(), std::move(suffix));
      acc = acc + piece;
    }
  }
  return acc;
}

AlgebraElement apply_hom(const AlgebraElement& x,
                         const std::vector<AlgebraElement>& chord_images) {
  if (static_cast<int>(chord_images.size()) != x.alphabet()->size())
    throw std::invalid_argument("apply_hom: expected one image per generator");
  if (chord_images.empty()) throw std::invalid_argument("apply_hom: empty alphabet");
  const Ctx& tctx = chord_images[0].ctx();
  const Alphabet& talpha = chord_images[0].alphabet();
  for (const auto& img : chord_images)
    if (!same_context(img.ctx(), tctx) || !same_alphabet(img.alphabet(), talpha))
      throw std::invalid_argument("apply_hom: images disagree on target algebra");

  AlgebraElement acc = AlgebraElement::zero(tctx, talpha);
  for (const auto& t : x.terms()) {
    LaurentPoly c = embed(LaurentPoly::from_monomial(x.ctx(), t.coeff), tctx);
    AlgebraElement piece = AlgebraElement::scalar(talpha, c);
    for (int g : t.word) piece = piece * chord_images[g];
    acc = acc + piece;
  }
  return acc;
}

LaurentPoly evaluate(const AlgebraElement& x, const std::vector<LaurentPoly>& var_images,
                     const std::vector<LaurentPoly>& chord_images, const Ctx& target) {
  if (static_cast<int>(chord_images.size()) != x.alphabet()->size())
    throw std::invalid_argument("evaluate: expected one image per generator");
  for (const auto& img : chord_images)
    if (!same_context(img.ctx(), target))
      throw std::invalid_argument("evaluate: chord image context mismatch");

  LaurentPoly acc = LaurentPoly::zero(target);
  for (const auto& t : x.terms()) {
    LaurentPoly piece =
        substitute(LaurentPoly::from_monomial(x.ctx(), t.coeff), var_images, target);
    for (int g : t.word) piece = piece * chord_images[g];
    acc = acc + piece;
  }
  return acc;
}

}  // namespace legfill
