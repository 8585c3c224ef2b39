// universal build | value | intgens | morphisms

#include "common.hpp"
#include "coverforge/universal/factor.hpp"

namespace coverforge::cli {

namespace {

nlohmann::ordered_json vectors_json(const std::vector<IVec>& vs) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& v : vs) j.push_back(v);
  return j;
}

std::string vectors_text(const std::vector<IVec>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : ", ") + to_string(v);
  return "{" + s + "}";
}

void build_cmd(const std::string& group, Report& r) {
  UniversalMonoids u(group_argument(group));
  const auto& A = u.group();
  const auto& pa = u.PA();
  r.line("P_A for A = " + A.description() + ": " + std::to_string(u.rank()) + " generators, " +
         std::to_string(pa.presentation().relations().size()) + " relations, " +
         std::to_string(pa.system().rules().size()) + " rules");
  std::size_t zero = 0;
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = 0; b < A.order(); ++b) zero += u.e(a, b).is_zero();
  r.data["group"] = group_json(A);
  r.data["generators"] = u.rank();
  r.data["relations"] = pa.presentation().relations().size();
  r.data["rules"] = pa.system().rules().size();
  r.data["zero_generators"] = zero;

  auto bad = replay_derivations(pa.presentation(), pa.system());
  r.check("derivations-replay", !bad, "every rule follows from the cocycle relations",
          bad ? "rule " + std::to_string(*bad) : "");
  auto sharp = sharp_by_grading(pa, u.pa_grading());
  r.check("sharp", sharp.certified, "value grading |phi_A| is positive on the nonzero generators", sharp.reason);
  Groupification gp(pa.presentation());
  std::string torsion;
  for (const auto& t : gp.torsion()) torsion += " x Z/" + t.get_str();
  r.line("P_A^gp = Z^" + std::to_string(gp.free_rank()) + torsion);
  r.data["groupification_free_rank"] = gp.free_rank();
}

/// "e_{1,1} + 2e_{1,2}" or "2*e_{(1,0),(0,1)}".
FreeElem parse_pa_element(const UniversalMonoids& u, const std::string& text) {
  FreeElem x(u.rank());
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t == "0") return x;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t digits = pos;
    while (digits < t.size() && std::isdigit(static_cast<unsigned char>(t[digits]))) ++digits;
    std::uint32_t k = digits > pos ? static_cast<std::uint32_t>(std::stoul(t.substr(pos, digits - pos))) : 1;
    pos = digits;
    if (pos < t.size() && t[pos] == '*') ++pos;
    if (t.compare(pos, 3, "e_{") != 0)
      throw ParseError("--elem: expected e_{l,l'} in '" + text + "'", 1, pos + 1);
    pos += 3;
    int depth = 0;
    std::size_t close = pos;
    for (; close < t.size(); ++close) {
      if (t[close] == '(') ++depth;
      if (t[close] == ')') --depth;
      if (t[close] == '}' && depth == 0) break;
    }
    if (close == t.size()) throw ParseError("--elem: missing '}' in '" + text + "'", 1, pos + 1);
    auto [a, b] = parse_pair_key(u.group(), t.substr(pos, close - pos), "--elem");
    x[u.index(a, b)] += k;
    pos = close + 1;
    if (pos < t.size()) {
      if (t[pos] != '+') throw ParseError("--elem: expected '+' in '" + text + "'", 1, pos + 1);
      ++pos;
    }
  }
  return x;
}

void value_cmd(const std::string& group, const std::string& elem, Report& r) {
  UniversalMonoids u(group_argument(group));
  FreeElem p = parse_pa_element(u, elem);
  FreeElem nf = u.PA().normal_form(p);
  IVec phi = u.phi(p);
  r.line("normal form  " + u.show(nf));
  r.line("phi_A        " + to_string(phi));
  r.line("value        " + std::to_string(UniversalMonoids::value(phi)));
  r.line("m(phi_A)     " + u.group().to_string(u.m(phi)));
  r.data["normal_form"] = u.show(nf);
  r.data["phi"] = phi;
  r.data["value"] = UniversalMonoids::value(phi);
  r.data["m"] = u.group().to_string(u.m(phi));
}

void intgens_cmd(const std::string& group, Report& r) {
  UniversalMonoids u(group_argument(group));
  const auto& A = u.group();
  auto P = u.P_int(), Q = u.Q_int();
  r.line("P_A^int = <" + vectors_text(P.generators()) + ">");
  r.line("Q_A^int = <" + vectors_text(Q.generators()) + ">");
  r.data["P_int"] = vectors_json(P.generators());
  r.data["Q_int"] = vectors_json(Q.generators());

  // both inclusions between <phi_A(e_{l,l'})> and the reduced generator set
  std::vector<IVec> images;
  for (GroupElem a = 1; a < A.order(); ++a)
    for (GroupElem b = 1; b < A.order(); ++b) images.push_back(u.phi(u.raw(a, b)));
  std::string missing;
  for (const auto& x : images)
    if (!affine_membership(P, x, u.value_grading())) missing = to_string(x);
  r.check("phi-images-in-P_int", missing.empty(), "every phi_A(e_{l,l'}) lies in the reduced monoid",
          missing + " is not generated");
  std::vector<IVec> nonzero;
  for (const auto& x : images)
    if (UniversalMonoids::value(x) != 0) nonzero.push_back(x);
  AffineMonoid generated(A.order() - 1, nonzero);
  missing.clear();
  for (const auto& g : P.generators())
    if (!affine_membership(generated, g, u.value_grading())) missing = to_string(g);
  r.check("P_int-in-phi-images", missing.empty(), "every reduced generator is a sum of phi_A images",
          missing + " is not a sum of phi_A images");
}

/// {"group", "P": [[...]], "Q": [[...]], "quotient": [[...]], "grading": [...]}.
struct KummerPair {
  AbelianGroup group;
  std::vector<IVec> P, Q;
  std::vector<IVec> quotient;  ///< one row per cyclic factor
  IVec grading;
};

KummerPair read_kummer_pair(const std::string& path) {
  auto j = read_json_file(path);
  check_fields(j, path, {"group", "P", "Q", "quotient", "grading"});
  KummerPair k;
  k.group = read_group(j["group"], path + ".group");
  k.P = get_as<std::vector<IVec>>(j["P"], path + ".P");
  k.Q = get_as<std::vector<IVec>>(j["Q"], path + ".Q");
  k.quotient = get_as<std::vector<IVec>>(j["quotient"], path + ".quotient");
  k.grading = get_as<IVec>(j["grading"], path + ".grading");
  const std::size_t dim = k.grading.size();
  auto same_dim = [&](const std::vector<IVec>& vs, const std::string& name) {
    for (const auto& v : vs)
      if (v.size() != dim) throw ParseError(path + "." + name + ": every vector needs " + std::to_string(dim) + " entries");
  };
  same_dim(k.P, "P");
  same_dim(k.Q, "Q");
  same_dim(k.quotient, "quotient");
  if (k.quotient.size() != k.group.cyclic_orders().size())
    throw ParseError(path + ".quotient: one row per cyclic factor of the group is required");
  return k;
}

void morphisms_cmd(const std::string& path, std::int64_t bound, Report& r) {
  auto k = read_kummer_pair(path);
  UniversalMonoids u(k.group);
  const auto& A = u.group();
  auto P = std::make_shared<const AffineMonoid>(k.grading.size(), k.P);
  AffineMonoid Q(k.grading.size(), k.Q);
  auto quotient = [&](const IVec& x) {
    std::vector<std::int64_t> res;
    for (const auto& row : k.quotient) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) s += row[i] * x[i];
      res.push_back(s);
    }
    return A.element(res);
  };
  for (const auto& g : k.P)
    if (quotient(g) != A.zero()) throw InvalidInput("generator " + to_string(g) + " of P does not map to 0 in A");
  auto m = universal_morphisms(u, P, Q, k.grading, quotient, bound);
  r.line("iota:");
  auto& iota = r.data["iota"] = nlohmann::ordered_json::object();
  for (GroupElem l = 0; l < A.order(); ++l) {
    r.line("  iota(" + A.to_string(l) + ") = " + to_string(m.iota[l]));
    iota[A.to_string(l)] = m.iota[l];
  }
  r.line("cocycle iota(l) + iota(l') - iota(l + l'):");
  for (const auto& l : table_lines(m.cocycle, "f")) r.line(l);
  r.line("P_A -> P:");
  auto& images = r.data["P_A_images"] = nlohmann::ordered_json::object();
  for (GroupElem a = 1; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b) {
      IVec img = m.pa_to_p.images()[u.index(a, b)];
      r.line("  e_{" + pair_key(A, a, b) + "} -> " + to_string(img));
      images[pair_key(A, a, b)] = img;
    }
  r.pass("free-extension", "every fiber of Q -> A is iota(l) + P among elements of value <= " + std::to_string(bound));
  auto v = m.cocycle.validate();
  r.check("cocycle", !v, "iota defines a 2-cocycle with values in P", v ? v->message : "");
}

}  // namespace

void add_universal_commands(CLI::App& app, Action& action) {
  auto* u = app.add_subcommand("universal", "universal monoids P_A and Q_A")->require_subcommand(1);

  auto group = slot<std::string>();
  auto* b = u->add_subcommand("build", "build P_A and certify its basic properties");
  b->add_option("--group", *group, "cyclic orders, e.g. '[3]' or '[2,2]'")->required();
  b->callback([&action, group] { action = [group](Report& r) { build_cmd(*group, r); }; });

  auto vgroup = slot<std::string>();
  auto elem = slot<std::string>();
  auto* v = u->add_subcommand("value", "normal form, phi_A and value of an element of P_A");
  v->add_option("--group", *vgroup, "cyclic orders")->required();
  v->add_option("--elem", *elem, "element such as 'e_{1,1} + 2e_{1,2}'")->required();
  v->callback([&action, vgroup, elem] { action = [vgroup, elem](Report& r) { value_cmd(*vgroup, *elem, r); }; });

  auto igroup = slot<std::string>();
  auto* i = u->add_subcommand("intgens", "generators of P_A^int and Q_A^int");
  i->add_option("--group", *igroup, "cyclic orders")->required();
  i->callback([&action, igroup] { action = [igroup](Report& r) { intgens_cmd(*igroup, r); }; });

  auto file = slot<std::string>();
  auto bound = slot<std::int64_t>(12);
  auto* m = u->add_subcommand("morphisms", "canonical maps P_A -> P and Q_A -> Q of an affine pair");
  m->add_option("file", *file, "pair file {\"group\", \"P\", \"Q\", \"quotient\", \"grading\"}")->required();
  m->add_option("--bound", *bound, "value bound for the fiber search")->capture_default_str()->check(CLI::Range(1, 1000));
  m->callback([&action, file, bound] { action = [file, bound](Report& r) { morphisms_cmd(*file, *bound, r); }; });
}

}  // namespace coverforge::cli
