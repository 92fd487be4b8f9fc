#include "legfill/serialization.hpp"

#include <stdexcept>

namespace legfill {

using nlohmann::json;

json to_json(const LaurentPoly& p) {
  json rows = json::array();
  for (const auto& m : p.terms()) rows.push_back(m.exponents());
  return rows;
}

json to_json(const AlgebraElement& x) {
  json terms = json::array();
  for (const auto& t : x.terms()) {
    json word = json::array();
    for (int c : t.word) word.push_back(x.alphabet()->label(c));
    terms.push_back({{"coeff", t.coeff.exponents()}, {"word", word}});
  }
  return terms;
}

json to_json(const Augmentation& aug) {
  json images = json::object();
  for (int i = 0; i < aug.n; ++i)
    images["b" + std::to_string(i + 1)] = to_json(aug.images[i]);
  return {{"images", images},
          {"n", aug.n},
          {"sigma", aug.sigma},
          {"vars", aug.ctx->names()}};
}

json to_json(const Dga& dga) {
  json chords = json::array();
  json diffs = json::object();
  for (int c = 0; c < dga.alphabet->size(); ++c) {
    chords.push_back({{"grading", dga.alphabet->grading(c)},
                      {"label", dga.alphabet->label(c)}});
    diffs[dga.alphabet->label(c)] = to_json(dga.of(c));
  }
  return {{"chords", chords}, {"differentials", diffs}, {"vars", dga.ctx->names()}};
}

json to_json(const ClassInfo& cls) {
  return {{"C", cls.cvec},
          {"aug", to_json(cls.aug)},
          {"rep", cls.rep.values()},
          {"size", cls.size}};
}

json to_json(const ClassReport& report) {
  json classes = json::array();
  for (const auto& cls : report.classes) classes.push_back(to_json(cls));
  return {{"catalan", report.catalan_number}, {"classes", classes}, {"n", report.n}};
}

LaurentPoly poly_from_json(const json& j, const Ctx& ctx) {
  if (!j.is_array()) throw std::invalid_argument("polynomial json must be an array");
  std::vector<Monomial> ms;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != ctx->arity())
      throw std::invalid_argument("exponent row has the wrong arity");
    ms.push_back(Monomial(row.get<std::vector<std::int64_t>>()));
  }
  return LaurentPoly::from_monomials(ctx, std::move(ms));
}

Augmentation augmentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("vars") || !j.contains("images"))
    throw std::invalid_argument("augmentation json must carry n, vars, images");
  Augmentation aug;
  aug.n = j.at("n").get<int>();
  if (aug.n < 1) throw std::invalid_argument("augmentation json has n < 1");
  aug.ctx = make_context(j.at("vars").get<std::vector<std::string>>());
  const auto& images = j.at("images");
  for (int i = 0; i < aug.n; ++i) {
    std::string key = "b" + std::to_string(i + 1);
    if (!images.contains(key))
      throw std::invalid_argument("augmentation json misses the image of " + key);
    aug.images.push_back(poly_from_json(images.at(key), aug.ctx));
  }
  if (j.contains("sigma")) aug.sigma = j.at("sigma").get<std::vector<int>>();
  return aug;
}

}  // namespace legfill
