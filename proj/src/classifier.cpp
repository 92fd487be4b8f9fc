#include "legfill/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "legfill/diagram.hpp"
#include "legfill/disk_engine.hpp"

namespace legfill {

std::vector<int> invariant_vector(const Permutation& sigma) {
  std::vector<int> out;
  out.reserve(sigma.size());
  for (int i = 1; i <= sigma.size(); ++i)
    out.push_back(static_cast<int>(term_sources(sigma, i).size()) + 1);
  return out;
}

bool equivalent(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pinch orders of different links");
  return invariant_vector(a) == invariant_vector(b);
}

std::uint64_t catalan(int n) {
  if (n < 0 || n > 35) throw std::invalid_argument("catalan index out of range");
  unsigned __int128 c = 1;
  for (int k = 1; k <= n; ++k)
    c = c * static_cast<unsigned>(4 * k - 2) / static_cast<unsigned>(k + 1);
  // exact division: (k+1) C_k = (4k-2) C_{k-1}; C_35 is the last to fit
  return static_cast<std::uint64_t>(c);
}

std::vector<Permutation> relation_neighbors(const Permutation& sigma) {
  const auto& v = sigma.values();
  const int n = sigma.size();
  std::vector<int> pos(n + 1);
  for (int q = 0; q < n; ++q) pos[v[q]] = q;

  std::vector<Permutation> out;
  for (int q = 0; q + 1 < n; ++q) {
    int i = std::min(v[q], v[q + 1]), j = std::max(v[q], v[q + 1]);
    bool legal = false;
    for (int k = i + 1; k < j && !legal; ++k) legal = pos[k] > q + 1;
    if (legal) {
      auto w = v;
      std::swap(w[q], w[q + 1]);
      out.push_back(Permutation(std::move(w)));
    }
  }
  return out;
}

std::vector<Permutation> all_pinch_orders(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("pinch order listing is limited to n <= 9");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Lexicographic rank via the factorial number system.
static std::size_t perm_rank(const std::vector<int>& v) {
  std::size_t r = 0;
  const std::size_t n = v.size();
  for (std::size_t a = 0; a < n; ++a) {
    int smaller = 0;
    for (std::size_t b = a + 1; b < n; ++b)
      if (v[b] < v[a]) ++smaller;
    r = r * (n - a) + static_cast<std::size_t>(smaller);
  }
  return r;
}

std::vector<int> relation_components(int n) {
  auto orders = all_pinch_orders(n);
  std::vector<int> comp(orders.size(), -1);
  int next_id = 0;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < orders.size(); ++start) {
    if (comp[start] != -1) continue;
    comp[start] = next_id;
    stack.push_back(start);
    while (!stack.empty()) {
      std::size_t at = stack.back();
      stack.pop_back();
      for (const Permutation& nb : relation_neighbors(orders[at])) {
        std::size_t r = perm_rank(nb.values());
        if (comp[r] == -1) {
          comp[r] = next_id;
          stack.push_back(r);
        }
      }
    }
    ++next_id;
  }
  return comp;
}

ClassReport enumerate_classes(int n, bool force) {
  if (n < 1) throw std::invalid_argument("twist chord count must be >= 1");
  if (n > 12) throw std::invalid_argument("class enumeration is not supported past n = 12");
  if (n > 10 && !force)
    throw std::invalid_argument("class enumeration past n = 10 is expensive; force to proceed");

  struct Accum {
    std::vector<int> rep;
    std::uint64_t size = 0;
  };
  std::unordered_map<std::uint64_t, Accum> buckets;

  std::vector<int> v(n), pos(n + 1);
  std::iota(v.begin(), v.end(), 1);
  do {
    for (int q = 0; q < n; ++q) pos[v[q]] = q;
    std::uint64_t code = 0;
    for (int i = 1; i <= n; ++i) {
      const int pi = pos[i];
      int cnt = 1;
      for (int j = 1; j <= n; ++j) {
        const int pj = pos[j];
        if (j == i || pj >= pi) continue;
        bool heard = true;
        for (int k = std::min(i, j) + 1, hi = std::max(i, j); k < hi && heard; ++k)
          heard = pos[k] < pj;
        if (heard) ++cnt;
      }
      code |= static_cast<std::uint64_t>(cnt) << (4 * (i - 1));
    }
    Accum& acc = buckets[code];
    if (acc.size++ == 0) acc.rep = v;
  } while (std::next_permutation(v.begin(), v.end()));

  std::vector<std::pair<std::uint64_t, Accum>> ordered(buckets.begin(), buckets.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.second.rep < b.second.rep; });

  ClassReport report;
  report.n = n;
  report.catalan_number = catalan(n);
  for (auto& [code, acc] : ordered) {
    Permutation rep(acc.rep);
    Permutation carrier = (n % 2 == 1) ? rep : lift_permutation(rep);
    report.classes.push_back(
        {rep, invariant_vector(rep), acc.size, closed_form_augmentation(carrier)});
  }
  return report;
}

std::string distinctness_report(const ClassReport& report) {
  if (report.classes.size() != report.catalan_number)
    return "class count " + std::to_string(report.classes.size()) +
           " differs from the Catalan number " + std::to_string(report.catalan_number);

  const int m = (report.n % 2 == 1) ? report.n : report.n + 1;
  auto dga = differential(build_torus_2n(m));
  for (int c = 0; c < dga.alphabet->size(); ++c) {
    int g = dga.alphabet->grading(c);
    if (g < 0) return "chord " + dga.alphabet->label(c) + " has negative degree";
    if ((c < m) != (g == 0))
      return "degree-0 chords are not exactly the twist chords";
  }

  std::set<std::string> seen;
  for (const ClassInfo& cls : report.classes) {
    if (cls.aug.n != m) return "augmentation size mismatch for rep " + cls.rep.str();
    if (!is_augmentation(dga, cls.aug))
      return "augmentation of rep " + cls.rep.str() + " does not kill the differential";
    if (!seen.insert(cls.aug.str()).second)
      return "duplicate augmentation for rep " + cls.rep.str();
  }
  return "";
}

// Fraction-free determinant; exact for integer matrices.
static __int128 int_det(std::vector<std::vector<__int128>> a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return 1;
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < m && p < 0; ++r)
        if (a[r][k] != 0) p = r;
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int r = k + 1; r < m; ++r)
      for (int c = k + 1; c < m; ++c)
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

Augmentation apply_basis_change(const Augmentation& aug,
                                const std::vector<std::vector<std::int64_t>>& M) {
  const int m = aug.ctx->arity();
  if (static_cast<int>(M.size()) != m)
    throw std::invalid_argument("basis change has the wrong size");
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("basis change is not square");

  std::vector<std::vector<__int128>> a(m, std::vector<__int128>(m));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) a[r][c] = M[r][c];
  __int128 det = int_det(std::move(a));
  if (det != 1 && det != -1)
    throw std::invalid_argument("basis change must be unimodular");

  std::vector<LaurentPoly> images;
  for (int i = 0; i < m; ++i) {
    std::vector<std::int64_t> e(m);
    for (int j = 0; j < m; ++j) e[j] = M[j][i];
    images.push_back(LaurentPoly::from_monomial(aug.ctx, Monomial(std::move(e))));
  }

  Augmentation out;
  out.n = aug.n;
  out.ctx = aug.ctx;
  out.sigma = aug.sigma;
  for (const LaurentPoly& p : aug.images)
    out.images.push_back(substitute(p, images, aug.ctx));
  return out;
}

}  // namespace legfill
