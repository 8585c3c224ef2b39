// hopf ideal | hopfcheck | grouplike | search | stabilizer
//
// Elements of a group algebra E0[A] are written with the base labels and
// T_l, e.g. "1 + a*(T_1 - 1)"; over a cover O_X[A] the x_l are available
// too.  Lists of elements are separated by ';'.

#include "common.hpp"
#include "coverforge/hopf/hopf.hpp"

namespace coverforge::cli {

namespace {

SymbolTable<FAElem> group_algebra_symbols(const GroupAlgebra& S) {
  SymbolTable<FAElem> t{S.algebra()->zero(), {}};
  const auto& base = S.base();
  for (std::size_t i = 0; i < base->dim(); ++i)
    if (base->labels()[i] != "1") t.symbols.push_back({base->labels()[i], S.embed(base->basis(i))});
  for (GroupElem l = 0; l < S.group().order(); ++l) t.symbols.push_back({"T_" + S.group().to_string(l), S.T(l)});
  return t;
}

std::vector<FAElem> parse_list(const std::string& text, const SymbolTable<FAElem>& t) {
  std::vector<FAElem> out;
  for (const auto& piece : split_list(text)) out.push_back(parse_element(piece, t));
  return out;
}

nlohmann::ordered_json elements_json(const std::vector<FAElem>& xs) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& x : xs) j.push_back(to_string(x));
  return j;
}

void ideal_cmd(const std::string& path, const std::string& gens, Report& r) {
  auto alg = read_algebra(read_json_file(path), path);
  auto h = algebra_handle(alg);
  std::vector<FAElem> g;
  for (const auto& piece : split_list(gens)) g.push_back(h.parse(piece));
  auto I = ideal_closure(alg, g);
  r.line("ideal of dimension " + std::to_string(I.dim()) + " in an algebra of dimension " + std::to_string(alg->dim()));
  for (const auto& b : I.basis()) r.line("  " + to_string(b));
  r.data["dim"] = I.dim();
  r.data["basis"] = elements_json(I.basis());
}

struct HopfOptions {
  std::string file, group, gens, element, directions;
  std::size_t cap = 24;
};

struct Setup {
  GroupAlgebra S;
  IdealSubspace I;
  SymbolTable<FAElem> symbols;
};

Setup setup(const HopfOptions& o) {
  auto base = read_algebra(read_json_file(o.file), o.file);
  GroupAlgebra S(base, group_argument(o.group));
  auto symbols = group_algebra_symbols(S);
  auto I = ideal_closure(S.algebra(), parse_list(o.gens, symbols));
  return {std::move(S), std::move(I), std::move(symbols)};
}

void report_hopf(const GroupAlgebra& S, const IdealSubspace& I, Report& r) {
  r.line("E = " + std::to_string(S.base()->dim()) + "-dimensional base [" + S.group().description() + "], dim " +
         std::to_string(S.dim()) + "; I has dimension " + std::to_string(I.dim()));
  r.data["dim_E"] = S.dim();
  r.data["dim_I"] = I.dim();
  auto v = is_hopf_ideal(S, I);
  r.check("hopf-ideal", v.ok, "counit, antipode and coproduct conditions on a basis of I", v.message());
}

void hopfcheck_cmd(const HopfOptions& o, Report& r) {
  auto s = setup(o);
  report_hopf(s.S, s.I, r);
}

void grouplike_cmd(const HopfOptions& o, Report& r) {
  auto s = setup(o);
  report_hopf(s.S, s.I, r);
  if (r.status() == Status::fail) return;
  auto g = parse_element(o.element, s.symbols);
  r.check("grouplike", is_grouplike_mod(s.S, s.I, g), "Delta(g) = g (x) g and eps(g) = 1 modulo I",
          to_string(g) + " is not group-like modulo I");
}

void report_search(const GrouplikeSearch& found, const IdealSubspace& I, Report& r) {
  r.line(std::to_string(found.classes.size()) + " group-like classes among " + std::to_string(found.tested) +
         " candidates 1 + span of " + std::to_string(found.directions) + " directions:");
  auto& cls = r.data["grouplikes"] = nlohmann::ordered_json::array();
  for (const auto& g : found.classes) {
    r.line("  " + to_string(I.reduce(g)));
    cls.push_back(to_string(I.reduce(g)));
  }
  r.data["tested"] = found.tested;
  r.pass("search", "exhaustive over 1 + span of the directions over GF(" +
                       std::to_string(I.ambient()->characteristic()) + ")");
}

void search_cmd(const HopfOptions& o, Report& r) {
  auto s = setup(o);
  report_hopf(s.S, s.I, r);
  if (r.status() == Status::fail) return;
  report_search(grouplike_search(s.S, s.I, parse_list(o.directions, s.symbols), o.cap), s.I, r);
}

struct StabilizerOptions {
  std::string file, grouplike, directions, member;
  std::size_t cap = 24;
};

void stabilizer_cmd(const StabilizerOptions& o, Report& r) {
  TableFile file = read_datum_file(read_json_file(o.file), o.file);
  if (!file.algebra) throw CapabilityError("stabilizer ideals need a datum over a finite algebra (ring \"algebra\")");
  auto h = algebra_handle(read_algebra(*file.algebra, o.file + ".algebra"));
  auto d = ring_table(file, h);
  auto st = stabilizer_ideal(d);
  const auto& S = st.structure;
  auto symbols = group_algebra_symbols(S);
  for (GroupElem l = 1; l < d.group().order(); ++l)
    symbols.symbols.push_back({"x_" + d.group().to_string(l), S.embed(st.cover.x(l))});
  r.line("O_X has dimension " + std::to_string(st.cover.algebra->dim()) + " over GF(" +
         std::to_string(h.one.alg->characteristic()) + ")");
  report_hopf(S, st.ideal, r);
  if (r.status() == Status::fail) return;
  if (!o.member.empty()) {
    auto& mem = r.data["members"] = nlohmann::ordered_json::object();
    for (const auto& piece : split_list(o.member)) {
      bool in = st.ideal.contains(parse_element(piece, symbols));
      r.line(piece + (in ? " lies in I" : " does not lie in I"));
      mem[piece] = in;
    }
  }
  if (!o.grouplike.empty())
    for (const auto& piece : split_list(o.grouplike)) {
      auto g = parse_element(piece, symbols);
      r.check("grouplike " + piece, is_grouplike_mod(S, st.ideal, g), "group-like modulo I",
              piece + " is not group-like modulo I");
    }
  if (!o.directions.empty())
    report_search(grouplike_search(S, st.ideal, parse_list(o.directions, symbols), o.cap), st.ideal, r);
}

void add_group_algebra_options(CLI::App* c, HopfOptions& o) {
  c->add_option("algebra", o.file, "finite-algebra file {\"p\", \"basis\", \"mult\"}")->required();
  c->add_option("--group", o.group, "the group A of E = E0[A], e.g. '[2,2]'")->required();
  c->add_option("--gens", o.gens, "generators of the ideal I, separated by ';'")->required();
}

}  // namespace

void add_hopf_commands(CLI::App& app, Action& action) {
  auto* h = app.add_subcommand("hopf", "Hopf ideals and group-like elements of group algebras over finite bases")
                ->require_subcommand(1);

  auto ifile = slot<std::string>(), igens = slot<std::string>();
  auto* i = h->add_subcommand("ideal", "ideal generated by elements of a finite algebra");
  i->add_option("algebra", *ifile, "finite-algebra file")->required();
  i->add_option("--gens", *igens, "generators separated by ';'")->required();
  i->callback([&action, ifile, igens] { action = [ifile, igens](Report& r) { ideal_cmd(*ifile, *igens, r); }; });

  auto hc = slot<HopfOptions>();
  auto* c = h->add_subcommand("hopfcheck", "whether I is a Hopf ideal of E0[A]");
  add_group_algebra_options(c, *hc);
  c->callback([&action, hc] { action = [hc](Report& r) { hopfcheck_cmd(*hc, r); }; });

  auto gl = slot<HopfOptions>();
  auto* g = h->add_subcommand("grouplike", "whether g is group-like modulo I");
  add_group_algebra_options(g, *gl);
  g->add_option("--g", gl->element, "the element g")->required();
  g->callback([&action, gl] { action = [gl](Report& r) { grouplike_cmd(*gl, r); }; });

  auto se = slot<HopfOptions>();
  auto* s = h->add_subcommand("search", "all group-likes 1 + span(directions) modulo I");
  add_group_algebra_options(s, *se);
  s->add_option("--directions", se->directions, "directions separated by ';'")->required();
  s->add_option("--cap", se->cap, "largest number of directions")->capture_default_str();
  s->callback([&action, se] { action = [se](Report& r) { search_cmd(*se, r); }; });

  auto sb = slot<StabilizerOptions>();
  auto* b = h->add_subcommand("stabilizer", "stabilizer ideal of a cover over a finite base");
  b->add_option("datum", sb->file, "building-datum file with ring \"algebra\"")->required();
  b->add_option("--grouplike", sb->grouplike, "elements to test for being group-like, separated by ';'");
  b->add_option("--directions", sb->directions, "search group-likes 1 + span of these, separated by ';'");
  b->add_option("--member", sb->member, "elements to test for membership in I, separated by ';'");
  b->add_option("--cap", sb->cap, "largest number of directions")->capture_default_str();
  b->callback([&action, sb] { action = [sb](Report& r) { stabilizer_cmd(*sb, r); }; });
}

}  // namespace coverforge::cli
