#include "schubcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "schubcalc/cauchy.hpp"
#include "schubcalc/chains.hpp"
#include "schubcalc/errors.hpp"
#include "schubcalc/serialize.hpp"

namespace schubcalc::cli {

namespace {

struct Options {
  std::string perm;
  std::string perm2;
  std::string perm3;
  int k = 1;
  std::optional<int> cover_k;
  std::string labels;
  std::string indices;
  std::string order;
  int n = 1;
  int m = 1;
  int p = 0;
  std::optional<int> support;
  std::optional<int> nvars;
  std::string format = "text";
  bool oracle = false;
  bool labeled = false;
  std::string inverse;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError(std::string("malformed ") + what + " entry '" + field + "'");
    }
  }
  return out;
}

std::vector<int> parse_labels(const std::string& text) {
  auto d = parse_int_list(text, "label");
  for (int v : d) {
    if (v < 1) throw InputError("labels must be positive");
  }
  return d;
}

Permutation perm_or_identity(const std::string& text) {
  return text.empty() ? Permutation{} : Permutation::parse(text);
}

int span_support(const Permutation& u, const Permutation& w) {
  return std::max({u.support(), w.support(), 1});
}

// For two-permutation commands: --perm alone names w (u = identity); --perm
// with --perm3 names u and w.
std::pair<Permutation, Permutation> interval(const Options& o) {
  if (o.perm3.empty()) return {Permutation{}, Permutation::parse(o.perm)};
  return {perm_or_identity(o.perm), Permutation::parse(o.perm3)};
}

std::string labels_text(const std::vector<int>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

std::string sequence_text(const CompatibleSequence& c) {
  return "(" + labels_text(c.top) + "; " + labels_text(c.bottom) + ")";
}

std::string chain_text(const LabeledChain& c, bool with_labels) {
  std::string s = c.start.to_string();
  for (const auto& st : c.steps) {
    s += " -(" + std::to_string(st.edge.t.a) + "," + std::to_string(st.edge.t.b) + ")";
    if (with_labels) s += "[" + std::to_string(st.label) + "]";
    s += "-> " + st.edge.target.to_string();
  }
  return s;
}

bool json_output(const Options& o) { return o.format == "json"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_perm(const Options& o, std::ostream& out) {
  const Permutation w = Permutation::parse(o.perm);
  const int n = o.support.value_or(std::max(w.support(), 1) + 1);
  const auto words = reduced_words(w);
  const auto covers = o.cover_k ? k_bruhat_covers(w, *o.cover_k, n) : bruhat_covers(w, n);
  if (json_output(o)) {
    Json words_json = Json::array();
    for (const auto& word : words) words_json.push_back(word);
    Json covers_json = Json::array();
    for (const auto& e : covers) covers_json.push_back(to_json(e));
    emit(out, {{"schema", kJsonSchema},
               {"params", {{"perm", to_json(w)}, {"support", n}}},
               {"length", length(w)},
               {"reduced_words", words_json},
               {"covers", covers_json}});
    return kOk;
  }
  out << "perm: " << w.to_string() << '\n';
  out << "length: " << length(w) << '\n';
  out << "support: " << n << '\n';
  for (const auto& word : words) out << "word: " << labels_text(word) << '\n';
  for (const auto& e : covers) {
    out << "cover: (" << e.t.a << "," << e.t.b << ") -> " << e.target.to_string() << " labels "
        << e.label_lo() << ".." << e.label_hi() << '\n';
  }
  return kOk;
}

int cmd_schubert(const Options& o, std::ostream& out) {
  const Permutation w = Permutation::parse(o.perm);
  Polynomial s = o.oracle ? schubert_oracle(w) : schubert(w);
  if (o.nvars) s = project(s, *o.nvars);
  if (json_output(o)) {
    Json params = {{"perm", to_json(w)}, {"method", o.oracle ? "divided-difference" : "bjs"}};
    if (o.nvars) params["nvars"] = *o.nvars;
    emit(out, {{"schema", kJsonSchema}, {"params", params}, {"polynomial", s.to_string()}});
  } else {
    out << s.to_string() << '\n';
  }
  return kOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const auto [u, w] = interval(o);
  const int n = o.support.value_or(span_support(u, w));
  Polynomial d = o.labeled ? dual_schubert_labeled(u, w, n) : dual_schubert(u, w, n);
  if (o.nvars) d = project(d, *o.nvars);
  if (json_output(o)) {
    Json params = {{"u", to_json(u)}, {"w", to_json(w)}, {"support", n},
                   {"formula", o.labeled ? "labeled" : "weighted"}};
    if (o.nvars) params["nvars"] = *o.nvars;
    emit(out, {{"schema", kJsonSchema}, {"params", params}, {"polynomial", d.to_string()}});
  } else {
    out << d.to_string() << '\n';
  }
  return kOk;
}

int cmd_chains(const Options& o, std::ostream& out) {
  const auto [u, w] = interval(o);
  const int n = o.support.value_or(span_support(u, w));
  std::vector<LabeledChain> chains;
  std::string mode;
  if (!o.labels.empty()) {
    mode = "labeled";
    chains = enumerate_labeled_chains(u, w, parse_labels(o.labels), n);
  } else if (!o.order.empty()) {
    mode = "increasing";
    chains = increasing_chains(u, w, TotalOrder(parse_labels(o.order)), n);
  } else {
    mode = "all";
    for (auto& c : enumerate_chains(u, w, n)) {
      LabeledChain lc{c.start, {}};
      for (auto& e : c.edges) lc.steps.push_back({e, e.label_lo()});
      chains.push_back(std::move(lc));
    }
  }
  const bool with_labels = mode != "all";
  if (json_output(o)) {
    Json params = {{"u", to_json(u)}, {"w", to_json(w)}, {"mode", mode}, {"support", n}};
    if (!o.labels.empty()) params["labels"] = parse_labels(o.labels);
    if (!o.order.empty()) params["order"] = parse_labels(o.order);
    Json list = Json::array();
    for (const auto& c : chains) {
      if (with_labels) {
        list.push_back(to_json(c));
      } else {
        Chain plain{c.start, {}};
        for (const auto& s : c.steps) plain.edges.push_back(s.edge);
        list.push_back(to_json(plain));
      }
    }
    emit(out, {{"schema", kJsonSchema}, {"params", params}, {"count", chains.size()}, {"chains", list}});
    return kOk;
  }
  for (const auto& c : chains) out << chain_text(c, with_labels) << '\n';
  out << "count: " << chains.size() << '\n';
  out << "support: " << n << '\n';
  return kOk;
}

int cmd_monk(const Options& o, std::ostream& out) {
  const Permutation v = perm_or_identity(o.perm);
  const int n = o.support.value_or(monk_support_bound(o.k, v));
  const auto targets = monk_expand(o.k, v, n);
  const Polynomial lhs = schubert(Permutation::simple(o.k)) * schubert(v);
  Polynomial rhs;
  for (const auto& w : targets) rhs += schubert(w);
  const bool identity = lhs == rhs;
  const MonkMatching match = monk_match(o.k, v, n);
  if (json_output(o)) {
    Json list = Json::array();
    for (const auto& w : targets) list.push_back(to_json(w));
    emit(out, {{"schema", kJsonSchema},
               {"params", {{"k", o.k}, {"v", to_json(v)}, {"support", n}}},
               {"targets", list},
               {"lhs", lhs.to_string()},
               {"rhs", rhs.to_string()},
               {"matching", to_json(match)},
               {"pass", identity}});
  } else {
    for (const auto& w : targets) out << "target: " << w.to_string() << '\n';
    for (const auto& p : match.pairs) {
      out << "match: " << p.j << " " << sequence_text(p.source) << " -> " << p.target.to_string()
          << " " << sequence_text(p.image) << '\n';
    }
    out << "lhs: " << lhs.to_string() << '\n';
    out << "rhs: " << rhs.to_string() << '\n';
    out << "support: " << n << '\n';
    out << (identity ? "pass" : "FAIL") << '\n';
  }
  return identity ? kOk : kCheckFailed;
}

int cmd_insert(const Options& o, std::ostream& out) {
  if (!o.inverse.empty()) {
    std::ifstream in(o.inverse);
    if (!in) throw InputError("cannot open " + o.inverse);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
    const InsertionResult r = insertion_result_from_json(j);
    // Same bound insert would have used for the biword behind this chain.
    int max_label = 0;
    for (const auto& s : r.chain.steps) max_label = std::max(max_label, s.label);
    const int n = o.support.value_or(max_label + static_cast<int>(r.chain.steps.size()) + 1);
    const BoundedBiword b = inverse_insert(r, n);
    if (json_output(o)) {
      emit(out, {{"schema", kJsonSchema}, {"params", {{"support", n}}}, {"biword", to_json(b)}});
    } else {
      out << "indices: " << labels_text(b.indices()) << '\n';
      out << "labels: " << labels_text(b.labels()) << '\n';
    }
    return kOk;
  }
  const auto idx = parse_int_list(o.indices, "index");
  const auto lab = parse_labels(o.labels);
  if (idx.size() != lab.size()) throw InputError("--indices and --labels differ in length");
  BoundedBiword b;
  for (std::size_t j = 0; j < idx.size(); ++j) b.letters.push_back({idx[j], lab[j]});
  const int n = o.support.value_or(insertion_support_bound(b));
  const InsertionResult r = insert(b, n);
  if (json_output(o)) {
    Json j = to_json(r);
    emit(out, {{"schema", kJsonSchema},
               {"params", {{"biword", to_json(b)}, {"support", n}}},
               {"target", j["target"]},
               {"record", j["record"]},
               {"chain", j["chain"]}});
  } else {
    out << "target: " << r.target.to_string() << '\n';
    out << "record: " << sequence_text(r.record) << '\n';
    out << "chain: " << chain_text(r.chain, true) << '\n';
    out << "support: " << n << '\n';
  }
  return kOk;
}

int cmd_lr(const Options& o, std::ostream& out) {
  const Permutation u = Permutation::parse(o.perm);
  const Permutation v = Permutation::parse(o.perm2);
  const Permutation w = Permutation::parse(o.perm3);
  const auto c = lr_coefficient(u, v, w);
  if (json_output(o)) {
    emit(out, {{"schema", kJsonSchema},
               {"params", {{"u", to_json(u)}, {"v", to_json(v)}, {"w", to_json(w)}}},
               {"coefficient", c}});
  } else {
    out << c << '\n';
  }
  return kOk;
}

int report(const Options& o, std::ostream& out, const Json& j, const std::string& summary,
           bool pass) {
  if (json_output(o)) {
    emit(out, j);
  } else {
    out << summary << '\n' << (pass ? "pass" : "FAIL") << '\n';
  }
  return pass ? kOk : kCheckFailed;
}

int cmd_verify_duality(const Options& o, std::ostream& out) {
  const auto r = verify_duality(o.n);
  std::string summary = "duality n=" + std::to_string(r.n) + " pairs=" + std::to_string(r.pairs) +
                        " failures=" + std::to_string(r.failures.size());
  for (const auto& [u, w, value] : r.failures) {
    summary += "\n  <S_" + u.to_string() + ", D_" + w.to_string() + "> = " + value.get_str();
  }
  return report(o, out, to_json(r), summary, r.pass());
}

int cmd_verify_cauchy(const Options& o, std::ostream& out) {
  const auto r = verify_cauchy(o.m, o.p);
  const std::string summary = "cauchy m=" + std::to_string(r.m) + " p=" + std::to_string(r.p) +
                              " support=" + std::to_string(r.support) + "\nlhs: " +
                              r.lhs.to_string() + "\nrhs: " + r.rhs.to_string();
  return report(o, out, to_json(r), summary, r.pass());
}

int cmd_verify_chain_symmetry(const Options& o, std::ostream& out) {
  const auto [u, w] = interval(o);
  const int n = o.support.value_or(span_support(u, w));
  const auto r = verify_chain_symmetry(u, w, parse_labels(o.labels), n);
  const std::string summary =
      "chain-symmetry u=" + u.to_string() + " w=" + w.to_string() + " labels=" +
      labels_text(r.labels) + " support=" + std::to_string(n) +
      "\nlabeled: " + std::to_string(r.labeled_lhs) + " = " + std::to_string(r.labeled_rhs) +
      "\nany label: " + std::to_string(r.any_label_lhs) + " = " + std::to_string(r.any_label_rhs);
  return report(o, out, to_json(r), summary, r.pass());
}

int cmd_verify_label_permutation(const Options& o, std::ostream& out) {
  const auto [u, w] = interval(o);
  const int n = o.support.value_or(span_support(u, w));
  const auto r = verify_label_permutation(u, w, parse_labels(o.labels), n);
  std::string summary = "label-permutation u=" + u.to_string() + " w=" + w.to_string() +
                        " support=" + std::to_string(n);
  for (const auto& [d, c] : r.counts) summary += "\n  " + labels_text(d) + ": " + std::to_string(c);
  return report(o, out, to_json(r), summary, r.pass());
}

int cmd_verify_increasing(const Options& o, std::ostream& out) {
  const auto [u, w] = interval(o);
  const int n = o.support.value_or(span_support(u, w));
  const auto r = verify_increasing(u, w, TotalOrder(parse_labels(o.order)), n);
  const std::string summary = "increasing u=" + u.to_string() + " w=" + w.to_string() +
                              " order=" + labels_text(r.order.preferred()) +
                              " support=" + std::to_string(n) +
                              "\nbar_dual: " + r.bar_dual.to_string() +
                              "\nchain_sum: " + r.chain_sum.to_string() +
                              "\nlr_sum: " + r.lr_sum.to_string();
  return report(o, out, to_json(r), summary, r.pass());
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_support(CLI::App* app, Options& o) {
  app->add_option("--support", o.support, "Support bound N (enumerations stay inside S_N)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Schubert polynomials, dual Schubert polynomials and Bruhat chains", "schubcalc"};
  app.require_subcommand(1);

  int (*action)(const Options&, std::ostream&) = nullptr;
  auto bind = [&action](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* perm = app.add_subcommand("perm", "Length, reduced words and Bruhat covers");
  perm->add_option("--perm", o.perm, "Permutation, one-line comma form")->required();
  perm->add_option("--k", o.cover_k, "Restrict to k-Bruhat covers")->check(CLI::PositiveNumber);
  add_support(perm, o);
  add_format(perm, o);
  bind(perm, cmd_perm);

  auto* schub = app.add_subcommand("schubert", "Schubert polynomial S_w");
  schub->add_option("--perm", o.perm, "Permutation w")->required();
  schub->add_option("--nvars", o.nvars, "Project onto x_1..x_n")->check(CLI::NonNegativeNumber);
  schub->add_flag("--oracle", o.oracle, "Use divided differences instead of compatible sequences");
  add_format(schub, o);
  bind(schub, cmd_schubert);

  auto* dual = app.add_subcommand("dual", "Dual Schubert polynomial D_w or skew D_{u,w}");
  dual->add_option("--perm", o.perm, "w, or u when --perm3 is given")->required();
  dual->add_option("--perm3", o.perm3, "w for the skew polynomial D_{u,w}");
  dual->add_option("--nvars", o.nvars, "Project onto x_1..x_n")->check(CLI::NonNegativeNumber);
  dual->add_flag("--labeled", o.labeled, "Sum over labeled chains of X_d products");
  add_support(dual, o);
  add_format(dual, o);
  bind(dual, cmd_dual);

  auto* chains = app.add_subcommand("chains", "Enumerate (labeled, increasing) Bruhat chains");
  chains->add_option("--perm", o.perm, "w, or u when --perm3 is given")->required();
  chains->add_option("--perm3", o.perm3, "w");
  auto* chain_labels = chains->add_option("--labels", o.labels, "Label vector d");
  chains->add_option("--order", o.order, "Preferred prefix of the total order")
      ->excludes(chain_labels);
  add_support(chains, o);
  add_format(chains, o);
  bind(chains, cmd_chains);

  auto* monk = app.add_subcommand("monk", "Monk expansion S_{s_k} S_v and its bijection");
  monk->add_option("--k", o.k, "k")->required()->check(CLI::PositiveNumber);
  monk->add_option("--perm", o.perm, "v");
  add_support(monk, o);
  add_format(monk, o);
  bind(monk, cmd_monk);

  auto* ins = app.add_subcommand("insert", "Insert a bounded biword, or invert an insertion");
  auto* ins_idx = ins->add_option("--indices", o.indices, "Top row i_1,...,i_n");
  auto* ins_lab = ins->add_option("--labels", o.labels, "Bottom row d_1,...,d_n");
  ins->add_option("--inverse", o.inverse, "JSON insertion result to invert")
      ->excludes(ins_idx)
      ->excludes(ins_lab);
  add_support(ins, o);
  add_format(ins, o);
  bind(ins, cmd_insert);

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^w_{uv}");
  lr->add_option("--perm", o.perm, "u")->required();
  lr->add_option("--perm2", o.perm2, "v")->required();
  lr->add_option("--perm3", o.perm3, "w")->required();
  add_format(lr, o);
  bind(lr, cmd_lr);

  auto* verify = app.add_subcommand("verify", "Exact identity checks");
  verify->require_subcommand(1);

  auto* v_dual = verify->add_subcommand("duality", "<S_u, D_w> = delta over S_n");
  v_dual->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  add_format(v_dual, o);
  bind(v_dual, cmd_verify_duality);

  auto* v_cauchy = verify->add_subcommand("cauchy", "Degree-p Cauchy identity in m variables");
  v_cauchy->add_option("--m", o.m, "m")->required()->check(CLI::PositiveNumber);
  v_cauchy->add_option("--p", o.p, "p")->required()->check(CLI::NonNegativeNumber);
  add_format(v_cauchy, o);
  bind(v_cauchy, cmd_verify_cauchy);

  auto* v_sym = verify->add_subcommand("chain-symmetry", "|C_d(u,w)| = sum_v c |C_d(1,v)|");
  v_sym->add_option("--perm", o.perm, "w, or u when --perm3 is given")->required();
  v_sym->add_option("--perm3", o.perm3, "w");
  v_sym->add_option("--labels", o.labels, "Label vector d")->required();
  add_support(v_sym, o);
  add_format(v_sym, o);
  bind(v_sym, cmd_verify_chain_symmetry);

  auto* v_perm = verify->add_subcommand("label-permutation", "|C_d| = |C_d'| for rearrangements");
  v_perm->add_option("--perm", o.perm, "w, or u when --perm3 is given")->required();
  v_perm->add_option("--perm3", o.perm3, "w");
  v_perm->add_option("--labels", o.labels, "Label vector d")->required();
  add_support(v_perm, o);
  add_format(v_perm, o);
  bind(v_perm, cmd_verify_label_permutation);

  auto* v_inc = verify->add_subcommand("increasing", "Increasing-chain identity");
  v_inc->add_option("--perm", o.perm, "w, or u when --perm3 is given")->required();
  v_inc->add_option("--perm3", o.perm3, "w");
  v_inc->add_option("--order", o.order, "Preferred prefix of the total order");
  add_support(v_inc, o);
  add_format(v_inc, o);
  bind(v_inc, cmd_verify_increasing);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (action == nullptr) {
    err << "error: no command given\n";
    return kInputError;
  }
  try {
    return action(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace schubcalc::cli
