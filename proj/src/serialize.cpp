#include "schubcalc/serialize.hpp"

#include "schubcalc/errors.hpp"

namespace schubcalc {

namespace {

Json window_json(const Permutation& w) {
  Json a = Json::array();
  for (int v : w.window()) a.push_back(v);
  return a;
}

Json labels_json(const std::vector<int>& d) {
  Json a = Json::array();
  for (int v : d) a.push_back(v);
  return a;
}

Json coefficients_json(const std::map<Permutation, std::uint64_t>& coeffs) {
  Json a = Json::array();
  for (const auto& [v, c] : coeffs) a.push_back({{"v", window_json(v)}, {"c", c}});
  return a;
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an integer array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer array");
    out.push_back(v.get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

Json to_json(const Permutation& w) { return window_json(w); }

Json to_json(const CoverEdge& e) {
  return {{"source", window_json(e.source)},
          {"target", window_json(e.target)},
          {"a", e.t.a},
          {"b", e.t.b},
          {"labels", {e.label_lo(), e.label_hi()}}};
}

Json to_json(const CompatibleSequence& c) {
  return {{"top", labels_json(c.top)}, {"bottom", labels_json(c.bottom)}};
}

Json to_json(const Chain& c) {
  Json steps = Json::array();
  for (const auto& e : c.edges) steps.push_back({{"a", e.t.a}, {"b", e.t.b}});
  return {{"start", window_json(c.start)}, {"steps", steps}};
}

Json to_json(const LabeledChain& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    steps.push_back({{"a", s.edge.t.a}, {"b", s.edge.t.b}, {"label", s.label}});
  }
  return {{"start", window_json(c.start)}, {"steps", steps}};
}

Json to_json(const MonkMatching& m) {
  Json pairs = Json::array();
  for (const auto& p : m.pairs) {
    pairs.push_back(Json::array({Json{{"j", p.j}, {"sequence", to_json(p.source)}},
                                 Json{{"w", window_json(p.target)}, {"sequence", to_json(p.image)}}}));
  }
  return pairs;
}

Json to_json(const InsertionResult& r) {
  return {{"target", window_json(r.target)},
          {"record", to_json(r.record)},
          {"chain", to_json(r.chain)}};
}

Json to_json(const BoundedBiword& b) {
  return {{"top", labels_json(b.indices())}, {"bottom", labels_json(b.labels())}};
}

Json to_json(const DualityReport& r) {
  Json failures = Json::array();
  for (const auto& [u, w, value] : r.failures) {
    failures.push_back({{"u", window_json(u)}, {"w", window_json(w)}, {"value", value.get_str()}});
  }
  return {{"schema", kJsonSchema},
          {"check", "duality"},
          {"params", {{"n", r.n}}},
          {"pairs", r.pairs},
          {"failures", failures},
          {"pass", r.pass()}};
}

Json to_json(const CauchyReport& r) {
  Json contributing = Json::array();
  for (const auto& w : r.contributing) contributing.push_back(window_json(w));
  return {{"schema", kJsonSchema},
          {"check", "cauchy"},
          {"params", {{"m", r.m}, {"p", r.p}, {"support", r.support}}},
          {"lhs", r.lhs.to_string()},
          {"rhs", r.rhs.to_string()},
          {"contributing", contributing},
          {"pass", r.pass()}};
}

Json to_json(const ChainSymmetryReport& r) {
  return {{"schema", kJsonSchema},
          {"check", "chain-symmetry"},
          {"params",
           {{"u", window_json(r.u)},
            {"w", window_json(r.w)},
            {"labels", labels_json(r.labels)},
            {"support", r.support}}},
          {"coefficients", coefficients_json(r.coefficients)},
          {"labeled", {{"lhs", r.labeled_lhs}, {"rhs", r.labeled_rhs}}},
          {"any_label", {{"lhs", r.any_label_lhs}, {"rhs", r.any_label_rhs}}},
          {"pass", r.pass()}};
}

Json to_json(const LabelPermutationReport& r) {
  Json counts = Json::array();
  for (const auto& [d, c] : r.counts) counts.push_back({{"labels", labels_json(d)}, {"count", c}});
  return {{"schema", kJsonSchema},
          {"check", "label-permutation"},
          {"params",
           {{"u", window_json(r.u)},
            {"w", window_json(r.w)},
            {"labels", labels_json(r.labels)},
            {"support", r.support}}},
          {"counts", counts},
          {"pass", r.pass()}};
}

Json to_json(const IncreasingReport& r) {
  return {{"schema", kJsonSchema},
          {"check", "increasing"},
          {"params",
           {{"u", window_json(r.u)},
            {"w", window_json(r.w)},
            {"order", labels_json(r.order.preferred())},
            {"support", r.support}}},
          {"dual", r.dual.to_string()},
          {"bar_dual", r.bar_dual.to_string()},
          {"chain_sum", r.chain_sum.to_string()},
          {"lr_sum", r.lr_sum.to_string()},
          {"equal",
           {{"bar_dual=chain_sum", r.bar_matches_chain_sum()},
            {"bar_dual=lr_sum", r.bar_matches_lr_sum()},
            {"chain_sum=lr_sum", r.chain_sum_matches_lr_sum()},
            {"chain_sum=dual", r.chain_sum_matches_dual()}}},
          {"pass", r.pass()}};
}

Permutation permutation_from_json(const Json& j) {
  auto w = int_array(j, "permutation");
  if (w.empty()) return Permutation{};
  return Permutation(std::move(w));
}

CompatibleSequence compatible_sequence_from_json(const Json& j) {
  CompatibleSequence c{int_array(field(j, "top"), "top"), int_array(field(j, "bottom"), "bottom")};
  if (c.top.size() != c.bottom.size()) throw InputError("top and bottom lengths differ");
  return c;
}

LabeledChain labeled_chain_from_json(const Json& j) {
  LabeledChain c{permutation_from_json(field(j, "start")), {}};
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) throw InputError("steps must be an array");
  Permutation current = c.start;
  for (const auto& s : steps) {
    const int a = field(s, "a").get<int>();
    const int b = field(s, "b").get<int>();
    const int label = field(s, "label").get<int>();
    if (a < 1 || b <= a) throw InputError("step transposition must satisfy 1 <= a < b");
    Permutation next = current.swap_positions(a, b);
    c.steps.push_back({{current, next, {a, b}}, label});
    current = std::move(next);
  }
  return c;
}

InsertionResult insertion_result_from_json(const Json& j) {
  try {
    return {compatible_sequence_from_json(field(j, "record")),
            labeled_chain_from_json(field(j, "chain")), permutation_from_json(field(j, "target"))};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed insertion result: ") + e.what());
  }
}

}  // namespace schubcalc
