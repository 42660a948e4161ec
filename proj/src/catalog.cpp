#include "svb/catalog.hpp"

#include <fstream>
#include <stdexcept>

namespace svb {

using nlohmann::json;

AlgebraSpec make_super_virasoro(HalfInt s) {
  if (s != HalfInt::whole(0) && s != HalfInt::from_doubled(1))
    throw std::invalid_argument("unsupported sector");
  std::string name = s == HalfInt::whole(0) ? "sv0" : "sv0.5";
  std::vector<Family> families = {
      {"G", Parity::odd, s},
      {"L", Parity::even, HalfInt::whole(0)},
  };
  std::vector<BracketRule> rules = {
      // [L_m,L_n] = (n-m) L_{m+n}
      {"L", "L", "L", {{Scalar(1), 0, 1}, {Scalar(-1), 1, 0}}},
      // [L_m,G_k] = (k-m/2) G_{m+k}
      {"L", "G", "G", {{Scalar(1), 0, 1}, {Scalar(-1, 2), 1, 0}}},
      // [G_k,G_l] = 2 L_{k+l}
      {"G", "G", "L", {{Scalar(2), 0, 0}}},
  };
  return AlgebraSpec(name, std::move(families), std::move(rules));
}

AlgebraSpec make_witt() {
  std::vector<Family> families = {{"L", Parity::even, HalfInt::whole(0)}};
  std::vector<BracketRule> rules = {
      {"L", "L", "L", {{Scalar(1), 0, 1}, {Scalar(-1), 1, 0}}},
  };
  return AlgebraSpec("witt", std::move(families), std::move(rules));
}

namespace {

mpz_class parse_bigint(const json& j, const std::string& where) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("algebra file: " + where +
                              " must be an integer or integer string");
}

}  // namespace

AlgebraSpec load_algebra(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("algebra file: not a JSON object");
  if (!doc.contains("name") || !doc["name"].is_string())
    throw std::invalid_argument("algebra file: missing string field 'name'");
  if (!doc.contains("families") || !doc["families"].is_array())
    throw std::invalid_argument("algebra file: missing array field 'families'");
  if (!doc.contains("rules") || !doc["rules"].is_array())
    throw std::invalid_argument("algebra file: missing array field 'rules'");

  std::vector<Family> families;
  for (const auto& f : doc["families"]) {
    if (!f.contains("symbol") || !f.contains("parity") || !f.contains("offset2"))
      throw std::invalid_argument(
          "algebra file: family needs 'symbol', 'parity', 'offset2'");
    int p = f["parity"].get<int>();
    if (p != 0 && p != 1)
      throw std::invalid_argument("algebra file: parity must be 0 or 1");
    families.push_back(Family{f["symbol"].get<std::string>(),
                              p == 0 ? Parity::even : Parity::odd,
                              HalfInt::from_doubled(f["offset2"].get<int>())});
  }

  std::vector<BracketRule> rules;
  for (const auto& r : doc["rules"]) {
    if (!r.contains("left") || !r.contains("right") || !r.contains("result") ||
        !r.contains("poly") || !r["poly"].is_array())
      throw std::invalid_argument(
          "algebra file: rule needs 'left', 'right', 'result', 'poly'");
    BracketRule rule{r["left"].get<std::string>(), r["right"].get<std::string>(),
                     r["result"].get<std::string>(), {}};
    std::string where = "rule (" + rule.left + "," + rule.right + ")";
    for (const auto& t : r["poly"]) {
      if (!t.is_array() || t.size() != 4)
        throw std::invalid_argument("algebra file: " + where +
                                    ": poly term must be [numer,denom,powM,powN]");
      mpz_class num = parse_bigint(t[0], where + " numerator");
      mpz_class den = parse_bigint(t[1], where + " denominator");
      int pm = t[2].get<int>(), pn = t[3].get<int>();
      if (pm < 0 || pn < 0)
        throw std::invalid_argument("algebra file: " + where +
                                    ": negative exponent");
      rule.poly.push_back(PolyTerm{Scalar(num, den), pm, pn});
    }
    rules.push_back(std::move(rule));
  }

  // AlgebraSpec's constructor validates parity and lattice consistency.
  return AlgebraSpec(doc["name"].get<std::string>(), std::move(families),
                     std::move(rules));
}

AlgebraSpec load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("algebra file " + path + ": " + e.what());
  }
  return load_algebra(doc);
}

json serialize_algebra(const AlgebraSpec& alg) {
  json doc;
  doc["name"] = alg.name();
  doc["families"] = json::array();
  for (const Family& f : alg.families())
    doc["families"].push_back({{"symbol", f.symbol},
                               {"parity", int(f.parity)},
                               {"offset2", f.offset.doubled}});
  doc["rules"] = json::array();
  for (const BracketRule& r : alg.rules()) {
    json poly = json::array();
    for (const PolyTerm& t : r.poly)
      poly.push_back({t.coeff.num().get_str(), t.coeff.den().get_str(),
                      t.pow_m, t.pow_n});
    doc["rules"].push_back({{"left", r.left},
                            {"right", r.right},
                            {"result", r.result},
                            {"poly", poly}});
  }
  return doc;
}

AlgebraSpec resolve_algebra(const std::string& selector) {
  if (selector == "sv0") return make_super_virasoro(HalfInt::whole(0));
  if (selector == "sv0.5") return make_super_virasoro(HalfInt::from_doubled(1));
  if (selector == "witt") return make_witt();
  return load_algebra_file(selector);
}

}  // namespace svb
