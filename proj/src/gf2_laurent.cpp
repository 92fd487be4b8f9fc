#include "legfill/gf2_laurent.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace legfill {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in add");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in mul");
  return r;
}

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
}

const std::string& VariableContext::name(int i) const {
  if (i < 0 || i >= arity()) throw std::invalid_argument("variable index out of range");
  return names_[i];
}

int VariableContext::index_of(const std::string& nm) const {
  for (int i = 0; i < arity(); ++i)
    if (names_[i] == nm) return i;
  return -1;
}

Ctx make_context(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

bool same_context(const Ctx& a, const Ctx& b) {
  if (!a || !b) return false;
  return a == b || *a == *b;
}

static void require_same_context(const Ctx& a, const Ctx& b, const char* op) {
  if (!same_context(a, b)) throw std::invalid_argument(std::string("context mismatch in ") + op);
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (auto e : e_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(e_.begin(), e_.end(), [](std::int64_t e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& o) const {
  if (arity() != o.arity()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<std::int64_t> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = checked_add(e_[i], o.e_[i]);
  return Monomial(std::move(r));
}

Monomial Monomial::inverse() const {
  std::vector<std::int64_t> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == INT64_MIN) throw std::overflow_error("exponent overflow in inverse");
    r[i] = -e_[i];
  }
  return Monomial(std::move(r));
}

Monomial Monomial::pow(std::int64_t k) const {
  std::vector<std::int64_t> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = checked_mul(e_[i], k);
  return Monomial(std::move(r));
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
  std::int64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  if (a.exponents() < b.exponents()) return -1;
  if (b.exponents() < a.exponents()) return 1;
  return 0;
}

// Canonical storage order: largest term first.
static bool term_before(const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) > 0; }

// Sorts and cancels equal pairs mod 2.
static std::vector<Monomial> normalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), term_before);
  std::vector<Monomial> out;
  size_t i = 0;
  while (i < ms.size()) {
    size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(ms[i]);
    i = j;
  }
  return out;
}

LaurentPoly LaurentPoly::zero(Ctx ctx) { return LaurentPoly(std::move(ctx), {}); }

LaurentPoly LaurentPoly::one(Ctx ctx) {
  int k = ctx->arity();
  return LaurentPoly(std::move(ctx), {Monomial::unit(k)});
}

LaurentPoly LaurentPoly::variable(Ctx ctx, int index, std::int64_t exp) {
  if (index < 0 || index >= ctx->arity())
    throw std::invalid_argument("variable index out of range");
  std::vector<std::int64_t> e(ctx->arity(), 0);
  e[index] = exp;
  return LaurentPoly(std::move(ctx), {Monomial(std::move(e))});
}

LaurentPoly LaurentPoly::from_monomial(Ctx ctx, Monomial m) {
  if (m.arity() != ctx->arity()) throw std::invalid_argument("monomial arity mismatch");
  return LaurentPoly(std::move(ctx), {std::move(m)});
}

LaurentPoly LaurentPoly::from_monomials(Ctx ctx, std::vector<Monomial> ms) {
  for (const auto& m : ms)
    if (m.arity() != ctx->arity()) throw std::invalid_argument("monomial arity mismatch");
  return LaurentPoly(std::move(ctx), normalize(std::move(ms)));
}

bool LaurentPoly::is_one() const { return terms_.size() == 1 && terms_[0].is_unit(); }

const Monomial& LaurentPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero");
  return terms_[0];
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_context(a.ctx_, b.ctx_, "add");
  std::vector<Monomial> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::set_symmetric_difference(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                b.terms_.end(), std::back_inserter(out), term_before);
  return LaurentPoly(a.ctx_, std::move(out));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_context(a.ctx_, b.ctx_, "mul");
  std::vector<Monomial> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ma : a.terms_)
    for (const auto& mb : b.terms_) out.push_back(ma.times(mb));
  return LaurentPoly(a.ctx_, normalize(std::move(out)));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(std::uint64_t k) const {
  LaurentPoly acc = one(ctx_);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

std::string monomial_str(const VariableContext& ctx, const Monomial& m) {
  if (m.arity() != ctx.arity()) throw std::invalid_argument("monomial arity mismatch");
  std::string s;
  for (int i = 0; i < m.arity(); ++i) {
    std::int64_t e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += ctx.name(i);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& m : terms_) {
    if (!s.empty()) s += " + ";
    s += monomial_str(*ctx_, m);
  }
  return s;
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images,
                       const Ctx& target) {
  const int k = p.ctx()->arity();
  if (static_cast<int>(images.size()) != k)
    throw std::invalid_argument("substitute: expected one image per variable");
  for (const auto& img : images)
    if (!same_context(img.ctx(), target))
      throw std::invalid_argument("substitute: image context mismatch");

  LaurentPoly acc = LaurentPoly::zero(target);
  for (const auto& m : p.terms()) {
    LaurentPoly t = LaurentPoly::one(target);
    for (int v = 0; v < k; ++v) {
      std::int64_t e = m.exponent(v);
      if (e == 0) continue;
      const LaurentPoly& img = images[v];
      if (e > 0) {
        t = t * img.pow(static_cast<std::uint64_t>(e));
      } else {
        if (!img.is_monomial())
          throw std::domain_error("substitute: negative power of a non-monomial image of " +
                                  p.ctx()->name(v));
        t = t * LaurentPoly::from_monomial(target, img.leading().pow(e));
      }
    }
    acc = acc + t;
  }
  return acc;
}

LaurentPoly embed(const LaurentPoly& p, const Ctx& target) {
  std::vector<LaurentPoly> images;
  images.reserve(p.ctx()->arity());
  for (int i = 0; i < p.ctx()->arity(); ++i) {
    int j = target->index_of(p.ctx()->name(i));
    if (j < 0)
      throw std::invalid_argument("embed: variable " + p.ctx()->name(i) +
                                  " absent from target context");
    images.push_back(LaurentPoly::variable(target, j));
  }
  return substitute(p, images, target);
}

}  // namespace legfill
