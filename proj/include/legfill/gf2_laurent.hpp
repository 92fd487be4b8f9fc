#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

// Sparse Laurent polynomials over GF(2) in finitely many commuting variables.
// A polynomial is the set of monomials with coefficient 1; addition is
// symmetric difference.  All values are immutable after construction.

namespace legfill {

// Ordered list of variable names.  Every value carries a shared pointer to the
// context it was built over; operations on mismatched contexts throw.
class VariableContext {
public:
  explicit VariableContext(std::vector<std::string> names);
  int arity() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const;
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& nm) const;  // -1 if absent
  bool operator==(const VariableContext& o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
};

using Ctx = std::shared_ptr<const VariableContext>;

Ctx make_context(std::vector<std::string> names);
bool same_context(const Ctx& a, const Ctx& b);

// Exponent vector of one Laurent monomial.  Exponents are signed and checked
// for overflow; every monomial is invertible.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::int64_t> exps) : e_(std::move(exps)) {}
  static Monomial unit(int arity) { return Monomial(std::vector<std::int64_t>(arity, 0)); }

  int arity() const { return static_cast<int>(e_.size()); }
  std::int64_t exponent(int i) const { return e_.at(i); }
  const std::vector<std::int64_t>& exponents() const { return e_; }
  std::int64_t degree() const;  // sum of exponents
  bool is_unit() const;

  Monomial times(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(std::int64_t k) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

private:
  std::vector<std::int64_t> e_;
};

// Graded-lexicographic comparison: by total degree, then lexicographic on the
// exponent tuple.  Canonical term order is descending in this comparison.
int grlex_cmp(const Monomial& a, const Monomial& b);

class LaurentPoly {
public:
  static LaurentPoly zero(Ctx ctx);
  static LaurentPoly one(Ctx ctx);
  static LaurentPoly variable(Ctx ctx, int index, std::int64_t exp = 1);
  static LaurentPoly from_monomial(Ctx ctx, Monomial m);
  // Sums the given monomials mod 2.
  static LaurentPoly from_monomials(Ctx ctx, std::vector<Monomial> ms);

  const Ctx& ctx() const { return ctx_; }
  // Terms in canonical order (grlex descending).
  const std::vector<Monomial>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Monomial& leading() const;

  LaurentPoly pow(std::uint64_t k) const;
  std::string str() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const;

private:
  LaurentPoly(Ctx ctx, std::vector<Monomial> terms)
      : ctx_(std::move(ctx)), terms_(std::move(terms)) {}
  Ctx ctx_;
  std::vector<Monomial> terms_;  // strictly decreasing under grlex_cmp
};

// Ring homomorphism determined by variable images.  images[i] is the image of
// variable i and must live over `target`.  Any variable carrying a negative
// exponent somewhere in p must map to a single monomial, since only monomials
// are invertible.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images,
                       const Ctx& target);

// Renames p into a context that contains every variable of p's context,
// matching variables by name.
LaurentPoly embed(const LaurentPoly& p, const Ctx& target);

std::string monomial_str(const VariableContext& ctx, const Monomial& m);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace legfill
