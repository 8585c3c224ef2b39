// monoid complete | nf | props | gp

#include "common.hpp"
#include "coverforge/monoid.hpp"
#include "coverforge/universal/universal.hpp"

namespace coverforge::cli {

namespace {

struct MonoidSource {
  std::string file;
  std::string group;
};

void add_source(CLI::App* sub, MonoidSource& s) {
  auto* f = sub->add_option("file", s.file, "presentation file {\"rank\", \"relations\"}");
  auto* g = sub->add_option("--group", s.group, "use the universal monoid P_A of this group, e.g. '[2,2,2]'");
  f->excludes(g);
  g->excludes(f);
}

/// The monoid, and the universal monoids when it is P_A.
struct Loaded {
  std::shared_ptr<const PresentedMonoid> monoid;
  std::shared_ptr<UniversalMonoids> universal;
};

Loaded load(const MonoidSource& s) {
  if (s.file.empty() && s.group.empty()) throw InvalidInput("give a presentation file or --group");
  if (!s.group.empty()) {
    auto u = std::make_shared<UniversalMonoids>(group_argument(s.group));
    return {u->PA_ptr(), u};
  }
  auto p = read_presentation(read_json_file(s.file), s.file);
  return {std::make_shared<const PresentedMonoid>(std::move(p)), nullptr};
}

nlohmann::ordered_json exponents(const FreeElem& x) { return x.e; }

void complete_cmd(const MonoidSource& src, Report& r) {
  auto [m, u] = load(src);
  const auto& rs = m->system();
  r.line("rank " + std::to_string(m->rank()) + ", " + std::to_string(m->presentation().relations().size()) +
         " relations, " + std::to_string(rs.rules().size()) + " rules");
  auto& rules = r.data["rules"] = nlohmann::ordered_json::array();
  for (const auto& rule : rs.rules()) {
    r.line("  " + m->to_string(rule.lhs) + " -> " + m->to_string(rule.rhs));
    rules.push_back({{"lhs", exponents(rule.lhs)}, {"rhs", exponents(rule.rhs)}});
  }
  auto bad = replay_derivations(m->presentation(), rs);
  r.check("derivations-replay", !bad,
          bad ? "a rule does not follow from the relations"
              : "all " + std::to_string(rs.derivations().size()) + " derivations replay from the relations",
          bad ? "rule " + std::to_string(*bad) : "");
}

void nf_cmd(const MonoidSource& src, const std::string& word, Report& r) {
  auto [m, u] = load(src);
  FreeElem x = word_argument(word, m->rank());
  FreeElem nf = m->normal_form(x);
  r.line(m->to_string(x) + " -> " + m->to_string(nf));
  r.data["word"] = exponents(x);
  r.data["normal_form"] = exponents(nf);
  r.data["normal_form_text"] = m->to_string(nf);
}

struct PropsOptions {
  MonoidSource src;
  std::uint32_t integrality_bound = 4;
  std::uint32_t unit_bound = 4;
  std::string weights;
};

void props_cmd(const PropsOptions& o, Report& r) {
  auto [m, u] = load(o.src);
  Groupification gp(m->presentation());

  std::optional<GradingCert> cert;
  if (!o.weights.empty()) {
    auto w = parse_json(o.weights, "--weights");
    cert = GradingCert{get_as<std::vector<std::int64_t>>(w, "--weights"), {}};
    for (std::size_t g = 0; g < m->rank(); ++g)
      if (!m->normal_form(m->generator(g)).is_zero()) cert->positive_generators.push_back(g);
  } else if (u) {
    cert = u->pa_grading();
  }
  bool sharp_done = false;
  if (cert) {
    auto v = sharp_by_grading(*m, *cert);
    if (v.certified) {
      r.pass("sharp", "certified by a grading positive on every nonzero generator");
      sharp_done = true;
    } else {
      r.line("grading certificate does not apply: " + v.reason);
    }
  }
  if (!sharp_done) {
    auto unit = find_unit_up_to(*m, o.unit_bound);
    if (unit)
      r.fail("sharp", "nonzero units exist", m->to_string(unit->first) + " + " + m->to_string(unit->second) + " = 0");
    else
      r.inconclusive("sharp", "no nonzero unit among classes of degree <= " + std::to_string(o.unit_bound),
                     o.unit_bound);
  }

  auto iv = is_integral_up_to(*m, gp, o.integrality_bound);
  r.data["integrality"] = {{"bound", iv.bound}, {"classes_checked", iv.classes_checked}};
  if (iv.counterexample) {
    const auto& [a, b] = *iv.counterexample;
    bool distinct = !(m->normal_form(a) == m->normal_form(b));
    bool same_image = gp.image(a) == gp.image(b);
    std::string w = m->to_string(a) + " != " + m->to_string(b) + " with equal image in M^gp";
    if (u) {
      same_image = same_image && u->phi(a) == u->phi(b);
      w += " and phi_A = " + to_string(u->phi(a));
    }
    if (!distinct || !same_image) throw std::logic_error("integrality counterexample does not verify");
    r.data["integrality"]["counterexample"] = {exponents(a), exponents(b)};
    r.fail("integral", "not integral", w);
  } else {
    r.inconclusive("integral",
                   "YES(" + std::to_string(iv.bound) + "): " + std::to_string(iv.classes_checked) +
                       " classes of degree <= " + std::to_string(iv.bound) + " have distinct images in M^gp",
                   iv.bound);
  }
  std::string torsion;
  for (const auto& t : gp.torsion()) torsion += " x Z/" + t.get_str();
  r.line("groupification Z^" + std::to_string(gp.free_rank()) + torsion);
  r.data["groupification"] = {{"free_rank", gp.free_rank()}, {"torsion", nlohmann::ordered_json::array()}};
  for (const auto& t : gp.torsion()) r.data["groupification"]["torsion"].push_back(t.get_str());
}

void gp_cmd(const MonoidSource& src, Report& r) {
  auto [m, u] = load(src);
  Groupification gp(m->presentation());
  std::string torsion;
  for (const auto& t : gp.torsion()) torsion += " x Z/" + t.get_str();
  r.line("M^gp = Z^" + std::to_string(gp.free_rank()) + torsion);
  auto& imgs = r.data["generator_images"] = nlohmann::ordered_json::array();
  for (std::size_t g = 0; g < m->rank(); ++g) {
    std::string s;
    nlohmann::ordered_json img = nlohmann::ordered_json::array();
    for (const auto& c : gp.generator_images()[g]) {
      s += (s.empty() ? "" : ", ") + c.get_str();
      img.push_back(c.get_str());
    }
    r.line("  " + m->presentation().generator_name(g) + " -> (" + s + ")");
    imgs.push_back(img);
  }
  r.data["free_rank"] = gp.free_rank();
  r.data["torsion"] = nlohmann::ordered_json::array();
  for (const auto& t : gp.torsion()) r.data["torsion"].push_back(t.get_str());
}

}  // namespace

void add_monoid_commands(CLI::App& app, Action& action) {
  auto* m = app.add_subcommand("monoid", "finitely presented commutative monoids")->require_subcommand(1);

  auto complete = slot<MonoidSource>();
  auto* c = m->add_subcommand("complete", "complete a presentation and replay every rule's derivation");
  add_source(c, *complete);
  c->callback([&action, complete] { action = [complete](Report& r) { complete_cmd(*complete, r); }; });

  auto nf_src = slot<MonoidSource>();
  auto word = slot<std::string>();
  auto* n = m->add_subcommand("nf", "normal form of a word");
  add_source(n, *nf_src);
  n->add_option("--word", *word, "exponent vector, e.g. '[2,0,1]'")->required();
  n->callback([&action, nf_src, word] { action = [nf_src, word](Report& r) { nf_cmd(*nf_src, *word, r); }; });

  auto props = slot<PropsOptions>();
  auto* p = m->add_subcommand("props", "sharpness and integrality up to explicit bounds");
  add_source(p, props->src);
  p->add_option("--integrality-bound", props->integrality_bound, "degree bound D for the integrality search")
      ->capture_default_str()
      ->check(CLI::Range(1, 64));
  p->add_option("--unit-bound", props->unit_bound, "degree bound for the unit search")
      ->capture_default_str()
      ->check(CLI::Range(1, 64));
  p->add_option("--weights", props->weights, "grading certificate for sharpness, e.g. '[1,1,2]'");
  p->callback([&action, props] { action = [props](Report& r) { props_cmd(*props, r); }; });

  auto gp = slot<MonoidSource>();
  auto* g = m->add_subcommand("gp", "groupification by Smith normal form");
  add_source(g, *gp);
  g->callback([&action, gp] { action = [gp](Report& r) { gp_cmd(*gp, r); }; });
}

}  // namespace coverforge::cli
