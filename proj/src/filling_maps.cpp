#include "legfill/filling_maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace legfill {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<char> seen(n + 1, 0);
  for (int v : vals_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) throw std::invalid_argument("permutation position out of range");
  return vals_[i - 1];
}

int Permutation::position_of(int value) const {
  for (int i = 1; i <= size(); ++i)
    if (vals_[i - 1] == value) return i;
  throw std::invalid_argument("permutation value out of range");
}

std::string Permutation::str() const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vals_[i]);
  }
  return s + ")";
}

static void require_chord(const Permutation& sigma, int i) {
  if (i < 1 || i > sigma.size()) throw std::invalid_argument("chord index out of range");
}

std::vector<int> pinch_targets(const Permutation& sigma, int i) {
  require_chord(sigma, i);
  const int pi = sigma.position_of(i);
  std::vector<int> out;
  for (int j = 1; j <= sigma.size(); ++j) {
    if (j == i || sigma.position_of(j) <= pi) continue;
    bool gap_pinched = true;
    for (int k = std::min(i, j) + 1; k < std::max(i, j) && gap_pinched; ++k)
      gap_pinched = sigma.position_of(k) < pi;
    if (gap_pinched) out.push_back(j);
  }
  return out;
}

std::vector<int> term_sources(const Permutation& sigma, int i) {
  require_chord(sigma, i);
  const int pi = sigma.position_of(i);
  std::vector<int> out;
  for (int j = 1; j <= sigma.size(); ++j) {
    if (j == i || sigma.position_of(j) >= pi) continue;
    const int pj = sigma.position_of(j);
    bool heard = true;
    for (int k = std::min(i, j) + 1; k < std::max(i, j) && heard; ++k)
      heard = sigma.position_of(k) < pj;
    if (heard) out.push_back(j);
  }
  return out;
}

static Alphabet torus_alphabet(int n) {
  std::vector<ChordInfo> chords;
  for (int i = 1; i <= n; ++i) chords.push_back({"b" + std::to_string(i), 0});
  chords.push_back({"a1", 1});
  chords.push_back({"a2", 1});
  return make_alphabet(std::move(chords));
}

PinchState initial_state(int n) {
  if (n < 1) throw std::invalid_argument("twist chord count must be >= 1");
  PinchState st;
  st.n = n;
  st.ctx = make_context({"s0"});
  st.alpha = torus_alphabet(n);
  for (int c = 0; c < st.alpha->size(); ++c)
    st.images.push_back(AlgebraElement::generator(st.ctx, st.alpha, c));
  return st;
}

PinchState pinch_move(const PinchState& st, int p) {
  if (p < 1 || p > st.n) throw std::invalid_argument("pinch chord out of range");
  std::vector<char> done(st.n + 1, 0);
  for (int q : st.pinched) done[q] = 1;
  if (done[p]) throw std::invalid_argument("chord " + std::to_string(p) + " already pinched");

  // Chords that hear this pinch: unpinched, with a fully pinched gap to p.
  std::vector<int> targets;
  for (int j = 1; j <= st.n; ++j) {
    if (j == p || done[j]) continue;
    bool gap_pinched = true;
    for (int k = std::min(j, p) + 1; k < std::max(j, p) && gap_pinched; ++k)
      gap_pinched = done[k];
    if (gap_pinched) targets.push_back(j);
  }

  // The coefficient ring grows by s_p; variables stay sorted by subscript.
  std::vector<int> subs = st.pinched;
  subs.push_back(p);
  std::sort(subs.begin(), subs.end());
  std::vector<std::string> names = {"s0"};
  for (int k : subs) names.push_back("s" + std::to_string(k));
  Ctx nctx = make_context(std::move(names));
  auto var_of = [&](int k) { return nctx->index_of("s" + std::to_string(k)); };

  std::vector<AlgebraElement> hom;
  for (int c = 0; c < st.alpha->size(); ++c)
    hom.push_back(AlgebraElement::generator(nctx, st.alpha, c));
  hom[p - 1] = AlgebraElement::scalar(st.alpha, LaurentPoly::variable(nctx, var_of(p)));
  for (int j : targets) {
    std::vector<std::int64_t> e(nctx->arity(), 0);
    e[var_of(p)] = -1;
    for (int k = std::min(j, p) + 1; k < std::max(j, p); ++k) e[var_of(k)] = -2;
    hom[j - 1] = hom[j - 1] + AlgebraElement::scalar(
                                  st.alpha, LaurentPoly::from_monomial(nctx, Monomial(e)));
  }

  PinchState out;
  out.n = st.n;
  out.ctx = nctx;
  out.alpha = st.alpha;
  out.pinched = st.pinched;
  out.pinched.push_back(p);
  for (const AlgebraElement& img : st.images) out.images.push_back(apply_hom(img, hom));
  return out;
}

PinchState run_pinches(int n, const Permutation& sigma) {
  if (sigma.size() != n) throw std::invalid_argument("pinch order size mismatch");
  PinchState st = initial_state(n);
  for (int i = 1; i <= n; ++i) st = pinch_move(st, sigma(i));
  return st;
}

static Ctx surface_context(int n) {
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) names.push_back("s" + std::to_string(i));
  return make_context(std::move(names));
}

std::string Augmentation::str() const {
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (i) s += "; ";
    s += "b" + std::to_string(i + 1) + " -> " + images[i].str();
  }
  return s;
}

Augmentation close_filling(const PinchState& st) {
  if (st.steps_done() != st.n)
    throw std::invalid_argument("close_filling needs all chords pinched");

  Augmentation aug;
  aug.n = st.n;
  aug.ctx = surface_context(st.n);
  aug.sigma = st.pinched;

  // st.ctx is s0..sn; s0 and the product of all pinch variables die on H1.
  if (st.ctx->arity() != st.n + 1) throw std::logic_error("pinch state context incomplete");
  std::vector<LaurentPoly> var_images;
  var_images.push_back(LaurentPoly::one(aug.ctx));
  for (int k = 1; k < st.n; ++k) var_images.push_back(LaurentPoly::variable(aug.ctx, k - 1));
  var_images.push_back(LaurentPoly::from_monomial(
      aug.ctx, Monomial(std::vector<std::int64_t>(st.n - 1, -1))));

  for (int i = 0; i < st.n; ++i) {
    if (!st.images[i].is_scalar())
      throw std::logic_error("chord image still involves chords after all pinches");
    aug.images.push_back(substitute(st.images[i].scalar_part(), var_images, aug.ctx));
  }
  return aug;
}

Augmentation closed_form_augmentation(const Permutation& sigma) {
  const int n = sigma.size();
  Augmentation aug;
  aug.n = n;
  aug.ctx = surface_context(n);
  aug.sigma = sigma.values();

  // A monomial in s1..sn, with sn folded to (s1...s_{n-1})^-1.
  auto fold = [&](const std::vector<std::pair<int, std::int64_t>>& factors) {
    std::vector<std::int64_t> e(n - 1, 0);
    for (auto [k, ex] : factors) {
      if (k < n) {
        e[k - 1] = checked_add(e[k - 1], ex);
      } else {
        for (int t = 0; t < n - 1; ++t) e[t] = checked_add(e[t], -ex);
      }
    }
    return Monomial(std::move(e));
  };

  for (int i = 1; i <= n; ++i) {
    std::vector<Monomial> ms = {fold({{i, 1}})};
    for (int j : term_sources(sigma, i)) {
      std::vector<std::pair<int, std::int64_t>> factors = {{j, -1}};
      for (int k = std::min(i, j) + 1; k < std::max(i, j); ++k) factors.push_back({k, -2});
      ms.push_back(fold(factors));
    }
    aug.images.push_back(LaurentPoly::from_monomials(aug.ctx, std::move(ms)));
  }
  return aug;
}

Permutation lift_permutation(const Permutation& sigma) {
  std::vector<int> v = {sigma.size() + 1};
  v.insert(v.end(), sigma.values().begin(), sigma.values().end());
  return Permutation(std::move(v));
}

bool is_augmentation(const Dga& dga, const Augmentation& aug) {
  if (dga.alphabet->size() != aug.n + 2 || dga.ctx->arity() != 1)
    throw std::invalid_argument("augmentation does not match the DGA");

  std::vector<LaurentPoly> var_images = {LaurentPoly::one(aug.ctx)};  // s0 -> 1
  std::vector<LaurentPoly> chord_images = aug.images;
  chord_images.push_back(LaurentPoly::zero(aug.ctx));
  chord_images.push_back(LaurentPoly::zero(aug.ctx));

  for (int c = 0; c < dga.alphabet->size(); ++c)
    if (!evaluate(dga.of(c), var_images, chord_images, aug.ctx).is_zero()) return false;
  return true;
}

}  // namespace legfill
