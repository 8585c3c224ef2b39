// cover validate | torsor | wedge | induced | quotient | disc | ord | cocycle | monomial | cyclic

#include "common.hpp"
#include "coverforge/cover/valuation.hpp"

namespace coverforge::cli {

namespace {

/// Two datum files over the same ring: f(d1, d2, handle).
template <class F>
void with_datum_pair(const std::string& p1, const std::string& p2, F&& f) {
  TableFile a = read_datum_file(read_json_file(p1), p1);
  TableFile b = read_datum_file(read_json_file(p2), p2);
  if (a.algebra || b.algebra) {
    if (!a.algebra || !b.algebra || *a.algebra != *b.algebra)
      throw RingMismatch("the two data are over different rings");
    auto h = algebra_handle(read_algebra(*a.algebra, p1 + ".algebra"));
    f(ring_table(a, h), ring_table(b, h), h);
    return;
  }
  if (a.target.ring->text != b.target.ring->text)
    throw RingMismatch("'" + a.target.ring->text + "' and '" + b.target.ring->text + "'");
  with_ring(*a.target.ring, [&](const auto& h) { f(ring_table(a, h), ring_table(b, h), h); });
}

template <class R>
void show_datum(const BuildingDatum<R>& d, const RingHandle<R>& h, Report& r, const std::string& key = "datum") {
  r.line("datum on " + d.group().description() + " over " + h.spec + ":");
  for (const auto& l : table_lines(d, "s")) r.line(l);
  r.data[key] = datum_json(d, h.spec);
}

template <class R>
bool is_trivial(const BuildingDatum<R>& d) {
  const auto& A = d.group();
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b)
      if (!(d(a, b) == d.target().one)) return false;
  return true;
}

void validate_cmd(const std::string& path, std::size_t samples, Report& r) {
  with_datum(path, [&](const auto& d, const auto& h) {
    show_datum(d, h, r);
    auto v = validate_datum(d, samples);
    r.check("cocycle", !v.violation, "exchange identity on all triples", v.violation ? v.violation->message : "");
    r.check("algebra", v.algebra.ok(),
            "unital, commutative and associative on basis triples and " + std::to_string(samples) + " random triples",
            v.algebra.witness);
  });
}

void torsor_cmd(const std::string& path, Report& r) {
  with_datum(path, [&](const auto& d, const auto& h) {
    show_datum(d, h, r);
    std::string witness;
    const auto& A = d.group();
    for (GroupElem a = 1; a < A.order() && witness.empty(); ++a)
      for (GroupElem b = a; b < A.order() && witness.empty(); ++b)
        if (!is_unit(d(a, b))) witness = "s_{" + pair_key(A, a, b) + "} = " + to_string(d(a, b)) + " is not a unit";
    r.check("torsor", is_torsor(d), "every section is a unit in " + h.spec, witness);
    if (!is_torsor(d)) return;
    auto inv = inverse_torsor(d);
    r.line("inverse:");
    for (const auto& l : table_lines(inv, "s")) r.line(l);
    r.data["inverse"] = datum_json(inv, h.spec);
    auto w = wedge(inv, d);
    r.check("inverse-wedge", is_trivial(w), "the wedge of the inverse with the datum is trivial", w.to_string());
  });
}

struct WedgeOptions {
  std::string first, second, source, phi1, phi2;
};

void wedge_cmd(const WedgeOptions& o, Report& r) {
  with_datum_pair(o.first, o.second, [&](const auto& d1, const auto& d2, const auto& h) {
    if (o.source.empty()) {
      if (!o.phi1.empty() || !o.phi2.empty()) throw InvalidInput("--phi1/--phi2 need --source");
      show_datum(wedge(d1, d2), h, r);
      return;
    }
    if (o.phi1.empty() || o.phi2.empty()) throw InvalidInput("--source needs both --phi1 and --phi2");
    AbelianGroup B = group_argument(o.source);
    auto phi1 = hom_argument(B, d1.group(), o.phi1, "--phi1");
    auto phi2 = hom_argument(B, d2.group(), o.phi2, "--phi2");
    auto w = wedge(d1, d2, phi1, phi2);
    show_datum(w, h, r);
    auto v = w.validate();
    r.check("cocycle", !v, "the wedge satisfies the exchange identity", v ? v->message : "");
  });
}

void induced_cmd(const std::string& path, const std::string& source, const std::string& images, Report& r) {
  with_datum(path, [&](const auto& d, const auto& h) {
    AbelianGroup B = group_argument(source);
    auto psi = hom_argument(B, d.group(), images, "--images");
    show_datum(induced(d, psi), h, r);
  });
}

void quotient_cmd(const std::string& path, const std::string& subgroup, Report& r) {
  with_datum(path, [&](const auto& d, const auto& h) {
    auto j = parse_json(subgroup, "--subgroup");
    if (!j.is_array()) throw ParseError("--subgroup: expected a list of group elements");
    std::vector<GroupElem> elems;
    for (const auto& x : j)
      elems.push_back(parse_group_element(d.group(), x.is_string() ? x.get<std::string>() : x.dump(), "--subgroup"));
    auto [sub, emb] = quotient_sub(d, elems);
    std::string gens;
    for (std::size_t i = 0; i < sub.group().cyclic_orders().size(); ++i)
      gens += (gens.empty() ? "" : ", ") + d.group().to_string(emb(sub.group().standard_generator(i)));
    r.line("subgroup " + sub.group().description() + " with generators " + gens);
    show_datum(sub, h, r);
  });
}

void disc_cmd(const std::string& path, Report& r) {
  with_datum(path, [&](const auto& d, const auto& h) {
    show_datum(d, h, r);
    auto formula = discriminant_formula(d);
    auto trace = discriminant_trace(d);
    r.line("discriminant |A|^|A| prod s_{l,-l} = " + to_string(formula));
    r.line("det of the trace form              = " + to_string(trace));
    r.data["formula"] = to_string(formula);
    r.data["trace"] = to_string(trace);
    bool sign = trace == formula || trace == -formula;
    r.check("formula-vs-trace", sign, "the trace determinant equals the closed form up to sign",
            to_string(formula) + " vs " + to_string(trace));
  });
}

template <class R>
Valuation<R> valuation_argument(const RingHandle<R>& h, const std::string& text, unsigned limit) {
  return Valuation<R>(h.parse(text), text, limit);
}

void ord_cmd(const std::string& path, const std::string& prime, unsigned limit, Report& r) {
  with_datum(path, [&](const auto& d, const auto& h) {
    auto v = valuation_argument(h, prime, limit);
    const auto& A = d.group();
    r.line("ord_" + prime + " of the sections:");
    auto& ords = r.data["ord"] = nlohmann::ordered_json::object();
    for (GroupElem a = 1; a < A.order(); ++a)
      for (GroupElem b = a; b < A.order(); ++b) {
        try {
          unsigned k = ord_section(d, v, a, b);
          r.line("  ord s_{" + pair_key(A, a, b) + "} = " + std::to_string(k));
          ords[pair_key(A, a, b)] = k;
        } catch (const BoundExceeded& e) {
          r.inconclusive("ord", e.what(), limit);
          return;
        }
      }
  });
}

void cocycle_cmd(const std::string& path, const std::vector<std::string>& primes, unsigned limit, Report& r) {
  with_datum(path, [&](const auto& d, const auto& h) {
    using R = std::decay_t<decltype(h.one)>;
    std::vector<Valuation<R>> vals;
    for (const auto& p : primes) vals.push_back(valuation_argument(h, p, limit));
    Cocycle<NatVector> f(d.group(), NatVector{vals.size()});
    try {
      f = cover_cocycle(d, vals);
    } catch (const BoundExceeded& e) {
      r.inconclusive("cover-cocycle", e.what(), limit);
      return;
    }
    r.line("cover cocycle (ord at " + [&] {
      std::string s;
      for (const auto& p : primes) s += (s.empty() ? "" : ", ") + p;
      return s;
    }() + "):");
    for (const auto& l : table_lines(f, "f")) r.line(l);
    r.data["cocycle"] = cocycle_json(f, vals.size() == 1 ? std::string("NN") : "NN^" + std::to_string(vals.size()));
    auto v = f.validate();
    r.check("cocycle", !v, "the orders form an N-valued cocycle", v ? v->message : "");
  });
}

void monomial_cmd(const std::string& path, const std::string& ring, const std::string& t, Report& r) {
  auto file = read_cocycle_file(read_json_file(path), path);
  auto f = nat_cocycle(file);
  with_ring(parse_ring_spec(ring), [&](const auto& h) {
    auto d = monomial_cover(h.one, h.parse(t), f);
    show_datum(d, h, r);
    auto v = validate_datum(d);
    r.check("datum", v.ok(), "the monomial datum is a cover", v.violation ? v.violation->message : v.algebra.witness);
  });
}

void cyclic_cmd(std::int64_t n, std::int64_t psi, const std::string& ring, const std::string& t, Report& r) {
  if (n < 2) throw InvalidInput("--n must be at least 2");
  with_ring(parse_ring_spec(ring), [&](const auto& h) {
    auto d = standard_cyclic(n, static_cast<GroupElem>(((psi % n) + n) % n), h.parse(t));
    show_datum(d, h, r);
    auto v = validate_datum(d);
    r.check("datum", v.ok(), "the cyclic datum is a cover", v.violation ? v.violation->message : v.algebra.witness);
  });
}

}  // namespace

void add_cover_commands(CLI::App& app, Action& action) {
  auto* c = app.add_subcommand("cover", "building data of D(A)-covers")->require_subcommand(1);

  auto vfile = slot<std::string>();
  auto samples = slot<std::size_t>(16);
  auto* v = c->add_subcommand("validate", "cocycle axioms and the algebra structure");
  v->add_option("file", *vfile, "building-datum file")->required();
  v->add_option("--samples", *samples, "random dense triples for the associativity check")->capture_default_str();
  v->callback([&action, vfile, samples] { action = [vfile, samples](Report& r) { validate_cmd(*vfile, *samples, r); }; });

  auto tfile = slot<std::string>();
  auto* t = c->add_subcommand("torsor", "whether every section is a unit, and the inverse torsor");
  t->add_option("file", *tfile, "building-datum file")->required();
  t->callback([&action, tfile] { action = [tfile](Report& r) { torsor_cmd(*tfile, r); }; });

  auto w = slot<WedgeOptions>();
  auto* wc = c->add_subcommand("wedge", "wedge of two data, along identities or along --phi1/--phi2");
  wc->add_option("first", w->first, "building-datum file")->required();
  wc->add_option("second", w->second, "building-datum file")->required();
  wc->add_option("--source", w->source, "source group of phi1 and phi2");
  wc->add_option("--phi1", w->phi1, "images of the source generators in the first group");
  wc->add_option("--phi2", w->phi2, "images of the source generators in the second group");
  wc->callback([&action, w] { action = [w](Report& r) { wedge_cmd(*w, r); }; });

  auto ifile = slot<std::string>(), isource = slot<std::string>(), images = slot<std::string>();
  auto* i = c->add_subcommand("induced", "datum induced along a homomorphism into the datum's group");
  i->add_option("file", *ifile, "building-datum file")->required();
  i->add_option("--source", *isource, "source group")->required();
  i->add_option("--images", *images, "images of the source generators, e.g. '[2]'")->required();
  i->callback([&action, ifile, isource, images] {
    action = [ifile, isource, images](Report& r) { induced_cmd(*ifile, *isource, *images, r); };
  });

  auto qfile = slot<std::string>(), sub = slot<std::string>();
  auto* q = c->add_subcommand("quotient", "restriction of the datum to a subgroup");
  q->add_option("file", *qfile, "building-datum file")->required();
  q->add_option("--subgroup", *sub, "subgroup elements, e.g. '[0,2]' or '[\"(0,0)\",\"(1,1)\"]'")->required();
  q->callback([&action, qfile, sub] { action = [qfile, sub](Report& r) { quotient_cmd(*qfile, *sub, r); }; });

  auto dfile = slot<std::string>();
  auto* d = c->add_subcommand("disc", "discriminant by the closed form and by the trace form");
  d->add_option("file", *dfile, "building-datum file")->required();
  d->callback([&action, dfile] { action = [dfile](Report& r) { disc_cmd(*dfile, r); }; });

  auto ofile = slot<std::string>(), prime = slot<std::string>();
  auto olimit = slot<unsigned>(4096);
  auto* o = c->add_subcommand("ord", "orders of the sections at a prime element");
  o->add_option("file", *ofile, "building-datum file")->required();
  o->add_option("--prime", *prime, "prime element of the ring, e.g. 's'")->required();
  o->add_option("--limit", *olimit, "largest order searched")->capture_default_str();
  o->callback([&action, ofile, prime, olimit] {
    action = [ofile, prime, olimit](Report& r) { ord_cmd(*ofile, *prime, *olimit, r); };
  });

  auto cfile = slot<std::string>();
  auto primes = slot<std::vector<std::string>>();
  auto climit = slot<unsigned>(4096);
  auto* cc = c->add_subcommand("cocycle", "the N^k-valued cocycle of orders at k prime elements");
  cc->add_option("file", *cfile, "building-datum file")->required();
  cc->add_option("--primes", *primes, "comma-separated prime elements, e.g. 's,s+1'")->required()->delimiter(',');
  cc->add_option("--limit", *climit, "largest order searched")->capture_default_str();
  cc->callback([&action, cfile, primes, climit] {
    action = [cfile, primes, climit](Report& r) { cocycle_cmd(*cfile, *primes, *climit, r); };
  });

  auto mfile = slot<std::string>(), mring = slot<std::string>(), mt = slot<std::string>();
  auto* m = c->add_subcommand("monomial", "the datum s_{l,l'} = t^f(l,l') of an N-valued cocycle");
  m->add_option("file", *mfile, "cocycle file with target NN")->required();
  m->add_option("--ring", *mring, "ring, e.g. 'QQ[s]'")->required();
  m->add_option("--t", *mt, "the element t")->required();
  m->callback([&action, mfile, mring, mt] {
    action = [mfile, mring, mt](Report& r) { monomial_cmd(*mfile, *mring, *mt, r); };
  });

  auto n = slot<std::int64_t>(), psi = slot<std::int64_t>(1);
  auto yring = slot<std::string>(), yt = slot<std::string>();
  auto* y = c->add_subcommand("cyclic", "the standard cyclic datum of Z/n with generator psi");
  y->add_option("--n", *n, "order")->required()->check(CLI::Range(2, 64));
  y->add_option("--psi", *psi, "distinguished generator")->capture_default_str();
  y->add_option("--ring", *yring, "ring, e.g. 'QQ[s]'")->required();
  y->add_option("--t", *yt, "the element t")->required();
  y->callback([&action, n, psi, yring, yt] {
    action = [n, psi, yring, yt](Report& r) { cyclic_cmd(*n, *psi, *yring, *yt, r); };
  });
}

}  // namespace coverforge::cli
