#include <stdexcept>

#include "json.hpp"

#include "cochar/hook.hpp"
#include "cochar/schur.hpp"
#include "cochar/series.hpp"

namespace cochar {

using json = nlohmann::ordered_json;

namespace {

json parts_json(const std::vector<int>& parts) { return json(parts); }

std::vector<int> trimmed(const Monomial& m, int start, int size) {
  std::vector<int> out;
  for (int i = 0; i < size; ++i) out.push_back(m[start + i]);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

std::string to_json(const Series& s) {
  json arr = json::array();
  for (const auto& [m, c] : s.terms()) {
    std::vector<int> exps;
    for (int i = 0; i < s.vars().size(); ++i) exps.push_back(m[i]);
    arr.push_back({{"exp", exps}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return arr.dump();
}

Series series_from_json(std::string_view text, const VarSet& vars, int bound) {
  json arr;
  try {
    arr = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
  }
  if (!arr.is_array()) throw std::invalid_argument("series JSON must be an array");
  std::vector<Series::Term> terms;
  for (const auto& t : arr) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("num") || !t.contains("den"))
      throw std::invalid_argument("series JSON term needs exp, num and den");
    auto exps = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != vars.size())
      throw std::invalid_argument("series JSON exponent vector has the wrong length");
    for (int x : exps)
      if (x < 0) throw std::invalid_argument("series JSON exponent is negative");
    mpz_class num, den;
    if (num.set_str(t.at("num").get<std::string>(), 10) != 0 ||
        den.set_str(t.at("den").get<std::string>(), 10) != 0 || den == 0)
      throw std::invalid_argument("series JSON coefficient is malformed");
    Rational c(num, den);
    c.canonicalize();
    terms.emplace_back(make_monomial(exps), c);
  }
  return Series::from_terms(vars, bound, std::move(terms));
}

std::string to_json(const PartitionMap& m) {
  json arr = json::array();
  for (const auto& [lam, c] : m)
    arr.push_back({{"partition", parts_json(lam.parts())}, {"coeff", c.get_str()}});
  return arr.dump();
}

std::string to_json(const HookMultSeries& h) {
  const VarSet& vars = h.series.vars();
  const VarBlock* v = vars.block("V");
  const VarBlock* t = vars.block("T");
  const VarBlock* y = vars.block("Y");
  if (!v || !t || !y) throw std::invalid_argument("hook multiplicity series needs V, T, Y blocks");
  json terms = json::array();
  for (const auto& [m, c] : h.series.terms())
    terms.push_back({{"lambda0", trimmed(m, v->start, v->size)},
                     {"mu", trimmed(m, t->start, t->size)},
                     {"nu", trimmed(m, y->start, y->size)},
                     {"coeff", c.get_str()}});
  json out = {{"hook", {h.k, h.l}}, {"terms", terms}};
  return out.dump();
}

}  // namespace cochar
