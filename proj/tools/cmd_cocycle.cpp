// cocycle validate | add | pardini | extension

#include "common.hpp"

namespace coverforge::cli {

namespace {

/// Calls f(cocycle, target label) for an N^k- or ring-valued cocycle file.
template <class F>
void with_cocycle(const TableFile& file, F&& f) {
  if (!file.target.ring) {
    const auto k = file.target.nat_dim;
    f(nat_cocycle(file), k == 1 ? std::string("NN") : "NN^" + std::to_string(k));
    return;
  }
  with_ring(*file.target.ring, [&](const auto& h) { f(ring_table(file, h), "ring:" + h.spec); });
}

template <class Target>
void report_validation(const Cocycle<Target>& c, Report& r) {
  auto v = c.validate();
  std::string witness;
  if (v) {
    for (auto l : v->witness) witness += (witness.empty() ? "" : ", ") + c.group().to_string(l);
    witness = "(" + witness + "): " + v->message;
  }
  r.check("cocycle", !v, "normalized, symmetric, exchange identity on all " +
                             std::to_string(c.group().order() * c.group().order() * c.group().order()) + " triples",
          witness);
}

void validate_cmd(const std::string& path, Report& r) {
  auto file = read_cocycle_file(read_json_file(path), path);
  with_cocycle(file, [&](const auto& c, const std::string& target) {
    r.line("cocycle on " + c.group().description() + " with values in " + target);
    for (const auto& l : table_lines(c, "f")) r.line(l);
    report_validation(c, r);
  });
}

void add_cmd(const std::string& p1, const std::string& p2, Report& r) {
  auto f1 = read_cocycle_file(read_json_file(p1), p1);
  auto f2 = read_cocycle_file(read_json_file(p2), p2);
  if (!(f1.group == f2.group)) throw InvalidInput("the cocycles live on different groups");
  if (f1.target.ring || f2.target.ring) {
    if (!f1.target.ring || !f2.target.ring || f1.target.ring->text != f2.target.ring->text)
      throw InvalidInput("the cocycles have different targets");
    with_ring(*f1.target.ring, [&](const auto& h) {
      auto s = add(ring_table(f1, h), ring_table(f2, h));
      for (const auto& l : table_lines(s, "f")) r.line(l);
      r.data["cocycle"] = cocycle_json(s, "ring:" + h.spec);
      report_validation(s, r);
    });
    return;
  }
  if (f1.target.nat_dim != f2.target.nat_dim) throw InvalidInput("the cocycles have different targets");
  auto s = add(nat_cocycle(f1), nat_cocycle(f2));
  const auto k = f1.target.nat_dim;
  for (const auto& l : table_lines(s, "f")) r.line(l);
  r.data["cocycle"] = cocycle_json(s, k == 1 ? std::string("NN") : "NN^" + std::to_string(k));
  report_validation(s, r);
}

void pardini_cmd(std::int64_t n, std::int64_t psi, Report& r) {
  if (n < 2) throw InvalidInput("--n must be at least 2");
  auto d = pardini_cyclic(n, static_cast<GroupElem>(((psi % n) + n) % n));
  auto eps = pardini_epsilon(d);
  r.line("epsilon for Z/" + std::to_string(n) + " with generator " + std::to_string(psi) + ":");
  for (const auto& l : table_lines(eps, "eps")) r.line(l);
  r.data["cocycle"] = cocycle_json(eps, "NN");
  report_validation(eps, r);
}

void extension_cmd(const std::string& path, Report& r) {
  auto file = read_cocycle_file(read_json_file(path), path);
  auto f = nat_cocycle(file);
  const auto& A = f.group();
  auto ext = extension_from_cocycle(f);
  // samples: (p, l) for p among 0 and the table values, l in A
  std::vector<IVec> ps{f.target().identity()};
  for (GroupElem a = 1; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b)
      if (std::find(ps.begin(), ps.end(), f(a, b)) == ps.end() && ps.size() < 4) ps.push_back(f(a, b));
  std::vector<TwistedElem<NatVector>> samples;
  for (const auto& p : ps)
    for (GroupElem l = 0; l < A.order(); ++l) samples.push_back(ext.element(p, l));
  auto axioms = check_extension_axioms(ext, samples);
  r.check("extension-axioms", !axioms,
          "P x A with the twisted sum is a commutative monoid on " + std::to_string(samples.size()) + " samples",
          axioms.value_or(""));
  auto back = cocycle_from_extension(ext);
  r.check("round-trip", back == f, "the cocycle read off iota(l) + iota(l') is the input", back.to_string());
  r.line("E = N^" + std::to_string(f.target().dim) + " x " + A.description() +
         " with (p, l) + (p', l') = (p + p' + f(l, l'), l + l')");
  for (GroupElem a = 1; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b)
      r.line("  iota(" + A.to_string(a) + ") + iota(" + A.to_string(b) + ") = " +
             ext.show(ext.add(ext.iota(a), ext.iota(b))));
}

}  // namespace

void add_cocycle_commands(CLI::App& app, Action& action) {
  auto* c = app.add_subcommand("cocycle", "commutative 2-cocycles with values in N^k or (R, *)")->require_subcommand(1);

  auto vfile = slot<std::string>();
  auto* v = c->add_subcommand("validate", "check the cocycle axioms");
  v->add_option("file", *vfile, "cocycle file")->required();
  v->callback([&action, vfile] { action = [vfile](Report& r) { validate_cmd(*vfile, r); }; });

  auto f1 = slot<std::string>(), f2 = slot<std::string>();
  auto* a = c->add_subcommand("add", "pointwise sum (product for ring values)");
  a->add_option("first", *f1, "cocycle file")->required();
  a->add_option("second", *f2, "cocycle file")->required();
  a->callback([&action, f1, f2] { action = [f1, f2](Report& r) { add_cmd(*f1, *f2, r); }; });

  auto n = slot<std::int64_t>(), psi = slot<std::int64_t>(1);
  auto* p = c->add_subcommand("pardini", "the 0/1 cocycle of Z/n with a distinguished generator");
  p->add_option("--n", *n, "order of the cyclic group")->required()->check(CLI::Range(2, 64));
  p->add_option("--psi", *psi, "distinguished generator")->capture_default_str();
  p->callback([&action, n, psi] { action = [n, psi](Report& r) { pardini_cmd(*n, *psi, r); }; });

  auto efile = slot<std::string>();
  auto* e = c->add_subcommand("extension", "free extension of an N-valued cocycle and the round trip");
  e->add_option("file", *efile, "cocycle file with target NN or NN^k")->required();
  e->callback([&action, efile] { action = [efile](Report& r) { extension_cmd(*efile, r); }; });
}

}  // namespace coverforge::cli
