// Acceptance checks for the full pipeline: one line of output per criterion,
// nonzero exit when any of them fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "legfill/classifier.hpp"
#include "legfill/diagram.hpp"
#include "legfill/disk_engine.hpp"
#include "legfill/filling_maps.hpp"

using namespace legfill;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& what, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char timing[32];
  std::snprintf(timing, sizeof timing, " [%.1fs]", secs);
  if (!ok) ++g_failures;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << what
            << timing << note << "\n";
}

std::string key_of(const std::vector<int>& v) {
  std::string k;
  for (int x : v) k += std::to_string(x) + ",";
  return k;
}

// The trefoil augmentation table, one image triple per pinch order.
const std::vector<std::pair<std::vector<int>, std::vector<std::string>>> kTrefoilTable = {
    {{1, 2, 3}, {"s1", "s2 + s1^-1", "s2^-1 + s1^-1*s2^-1"}},
    {{1, 3, 2}, {"s1", "s1*s2 + s2 + s1^-1", "s1^-1*s2^-1"}},
    {{2, 1, 3}, {"s1 + s2^-1", "s2", "s2^-1 + s1^-1*s2^-1 + s1^-1*s2^-2"}},
    {{2, 3, 1}, {"s1 + s1*s2^-1 + s2^-1", "s2", "s2^-1 + s1^-1*s2^-1"}},
    {{3, 1, 2}, {"s1", "s1*s2 + s2 + s1^-1", "s1^-1*s2^-1"}},
    {{3, 2, 1}, {"s1 + s2^-1", "s1*s2 + s2", "s1^-1*s2^-1"}},
};

}  // namespace

int main() {
  criterion(1, "the (2,3) torus link differential matches the known form", [] {
    auto dia = build_torus_2n(3);
    auto dga = differential(dia);
    bool ok = enumerate_rigid_disks(dia).size() == 8;
    for (int c = 0; c < 3; ++c) ok = ok && dga.of(c).is_zero();
    ok = ok && dga.of(3).str() == "s0^-1 + b1 + b3 + b1*b2*b3";
    ok = ok && dga.of(4).str() == "1 + b1 + b3 + b3*b2*b1";
    return ok;
  });

  criterion(2, "capped-off unknot differentials for n = 1..8", [] {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
      auto dia = build_final_unknot(n);
      auto dga = differential(dia);
      ok = ok && enumerate_rigid_disks(dia).size() == 4;
      std::vector<std::int64_t> e(n + 1, 1);
      e[0] = 0;
      auto prod = LaurentPoly::from_monomial(dia.ctx(), Monomial(e));
      auto top = prod + LaurentPoly::variable(dia.ctx(), 0, -1);
      auto bot = prod + LaurentPoly::one(dia.ctx());
      ok = ok && dga.of(0) == AlgebraElement::scalar(dia.alphabet(), top);
      ok = ok && dga.of(1) == AlgebraElement::scalar(dia.alphabet(), bot);
    }
    return ok;
  });

  criterion(3, "all six pinch orders of the trefoil give the known augmentations", [] {
    bool ok = closed_form_augmentation(Permutation({1})).str() == "b1 -> 1";
    for (const auto& [vals, images] : kTrefoilTable) {
      auto aug = closed_form_augmentation(Permutation(vals));
      for (int i = 0; i < 3; ++i) ok = ok && aug.images[i].str() == images[i];
    }
    ok = ok && closed_form_augmentation(Permutation({1, 3, 2})) ==
                   closed_form_augmentation(Permutation({3, 1, 2}));
    return ok;
  });

  criterion(4, "trefoil C-vectors", [] {
    const std::map<std::vector<int>, std::vector<int>> expected = {
        {{1, 2, 3}, {1, 2, 2}}, {{1, 3, 2}, {1, 3, 1}}, {{3, 1, 2}, {1, 3, 1}},
        {{2, 1, 3}, {2, 1, 3}}, {{2, 3, 1}, {3, 1, 2}}, {{3, 2, 1}, {2, 2, 1}},
    };
    bool ok = true;
    for (const auto& [vals, cvec] : expected)
      ok = ok && invariant_vector(Permutation(vals)) == cvec;
    return ok;
  });

  criterion(5, "filling classes match the Catalan numbers for n = 1..10", [] {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
      auto report = enumerate_classes(n);
      ok = ok && report.classes.size() == catalan(n);
    }
    return ok && std::chrono::steady_clock::now() - t0 < std::chrono::minutes(2);
  });

  criterion(6, "every pinch sequence augments the DGA for n in {1,3,5,7}", [] {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n : {1, 3, 5, 7}) {
      auto dga = differential(build_torus_2n(n));
      for (const auto& s : all_pinch_orders(n)) {
        auto aug = closed_form_augmentation(s);
        ok = ok && aug == close_filling(run_pinches(n, s));
        ok = ok && is_augmentation(dga, aug);
        auto cvec = invariant_vector(s);
        for (int i = 0; i < n; ++i) ok = ok && aug.images[i].term_count() == cvec[i];
      }
      if (!ok) break;
    }
    return ok && std::chrono::steady_clock::now() - t0 < std::chrono::minutes(2);
  });

  criterion(7, "augmentations separate the classes for n in {3,5,7}", [] {
    bool ok = true;
    for (int n : {3, 5, 7}) {
      auto report = enumerate_classes(n);
      ok = ok && distinctness_report(report).empty();
      std::map<std::string, std::string> rep_for_cvec;
      for (const auto& cls : report.classes)
        rep_for_cvec[key_of(cls.cvec)] = cls.aug.str();
      for (const auto& s : all_pinch_orders(n))  // constant within each class
        ok = ok && closed_form_augmentation(s).str() ==
                       rep_for_cvec.at(key_of(invariant_vector(s)));
    }
    return ok;
  });

  criterion(8, "elementary moves generate the invariant partition for n <= 7", [] {
    bool ok = true;
    for (int n = 1; n <= 7; ++n) {
      auto orders = all_pinch_orders(n);
      auto comp = relation_components(n);
      std::map<std::string, int> comp_for_cvec;
      std::set<int> ids;
      for (std::size_t r = 0; r < orders.size(); ++r) {
        auto key = key_of(invariant_vector(orders[r]));
        auto [it, fresh] = comp_for_cvec.emplace(key, comp[r]);
        ok = ok && it->second == comp[r];
        ids.insert(comp[r]);
      }
      ok = ok && comp_for_cvec.size() == ids.size() && ids.size() == catalan(n);
    }
    return ok;
  });

  criterion(9, "lifting carries even-n fillings to the next odd link (n in {2,4,6})", [] {
    bool ok = true;
    for (int n : {2, 4, 6}) {
      std::map<std::string, std::string> lifted_for_cvec;
      std::set<std::string> lifted;
      for (const auto& s : all_pinch_orders(n)) {
        auto c = invariant_vector(s);
        auto lc = invariant_vector(lift_permutation(s));
        ok = ok && static_cast<int>(lc.size()) == n + 1;
        ok = ok && lc[n] == 1 && lc[n - 1] == c[n - 1] + 1;
        for (int i = 0; i + 1 < n; ++i) ok = ok && lc[i] == c[i];
        auto str = closed_form_augmentation(lift_permutation(s)).str();
        auto [it, fresh] = lifted_for_cvec.emplace(key_of(c), str);
        ok = ok && it->second == str;  // lifted augmentation is a class invariant
        lifted.insert(str);
      }
      ok = ok && lifted.size() == catalan(n);  // and distinct across classes
    }
    return ok;
  });

  criterion(10, "the differential squares to zero with degree -1 for n in {1,3,5,7,9}", [] {
    bool ok = true;
    for (int n : {1, 3, 5, 7, 9}) ok = ok && check_dga(differential(build_torus_2n(n))).empty();
    return ok;
  });

  if (g_failures) {
    std::cout << g_failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
