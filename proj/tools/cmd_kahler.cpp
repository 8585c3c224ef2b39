// kahler omega | ann | lemma228
//
// Defined for data over univariate polynomial rings ZZ[s], QQ[s], GF(p)[s].

#include "common.hpp"
#include "coverforge/kahler/omega.hpp"

namespace coverforge::cli {

namespace {

/// Calls f(datum, handle) when the datum lives over K[s].
template <class F>
void with_poly_datum(const std::string& path, F&& f) {
  with_datum(path, [&](const auto& d, const auto& h) {
    using R = std::decay_t<decltype(h.one)>;
    if constexpr (coverforge::detail::is_univariate_poly<R>::value) {
      h.one.require_univariate();
      f(d, h);
    } else {
      throw CapabilityError("Kahler differentials are computed over ZZ[s], QQ[s] and GF(p)[s], not '" + h.spec + "'");
    }
  });
}

template <class R>
nlohmann::ordered_json strings(const std::vector<R>& xs) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& x : xs) j.push_back(to_string(x));
  return j;
}

void omega_cmd(const std::string& path, Report& r) {
  with_poly_datum(path, [&](const auto& d, const auto& h) {
    auto om = omega_presentation(d);
    r.line("Omega over " + h.spec + ": " + std::to_string(om.generators.size()) + " generators v_m dv_l, " +
           std::to_string(om.relations.rows()) + " relations");
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < om.generators.size(); ++c) labels.push_back(om.label(c));
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < om.relations.rows(); ++i) {
      std::string s;
      nlohmann::ordered_json row = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < om.generators.size(); ++c) {
        const auto& x = om.relations(i, c);
        if (is_zero(x)) continue;
        s += (s.empty() ? "" : " + ") + std::string("(") + to_string(x) + ") " + labels[c];
        row[labels[c]] = to_string(x);
      }
      const auto& [m, l, l2] = om.row_labels[i];
      const auto& A = om.group;
      r.line("  [" + A.to_string(m) + "," + A.to_string(l) + "," + A.to_string(l2) + "]  " + s + " = 0");
      rows.push_back(row);
    }
    r.data["generators"] = labels;
    r.data["relations"] = std::move(rows);
  });
}

template <class R>
void report_ann(const Annihilator<R>& a, const std::string& over, Report& r) {
  std::string divs;
  for (const auto& x : a.divisors) divs += (divs.empty() ? "" : ", ") + to_string(x);
  r.line("over " + over + ": Ann(Omega) = (" + to_string(a.generator) + "), elementary divisors (" + divs +
         "), free rank " + std::to_string(a.free_rank));
  r.data["ann"][over] = {{"generator", to_string(a.generator)}, {"divisors", strings(a.divisors)}, {"free_rank", a.free_rank}};
}

void ann_cmd(const std::string& path, const std::vector<std::int64_t>& primes, Report& r) {
  with_poly_datum(path, [&](const auto& d, const auto& h) {
    using R = std::decay_t<decltype(h.one)>;
    if constexpr (std::is_same_v<R, Poly<Integer>>) {
      const auto& var = h.one.context()->variables[0];
      report_ann(ann_snf(omega_presentation(datum_over_rationals(d))), "QQ[" + var + "]", r);
      for (auto p : primes) {
        if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
        report_ann(ann_snf(omega_presentation(datum_mod_p(d, p))), "GF(" + std::to_string(p) + ")[" + var + "]", r);
      }
    } else {
      if (!primes.empty()) throw InvalidInput("--mod applies to data over ZZ[s]");
      report_ann(ann_snf(omega_presentation(d)), h.spec, r);
    }
  });
}

void lemma_cmd(const std::string& path, std::optional<unsigned> bound, const std::string& replay_path, Report& r) {
  with_poly_datum(path, [&](const auto& d, const auto& h) {
    using R = std::decay_t<decltype(h.one)>;
    auto om = omega_presentation(d);
    auto disc = discriminant_formula(d);
    r.line("discriminant " + to_string(disc));
    r.data["discriminant"] = to_string(disc);

    if (!replay_path.empty()) {
      auto rep = read_json_file(replay_path);
      if (!rep.is_object() || rep.value("schema", "") != report_schema)
        throw ParseError(replay_path + ": not a " + std::string(report_schema) + " report");
      if (!rep.contains("data") || !rep["data"].contains("certificates"))
        throw ParseError(replay_path + ": the report carries no certificates");
      std::size_t k = 0;
      std::string bad;
      for (const auto& c : rep["data"]["certificates"]) {
        const std::string at = replay_path + ".certificates[" + std::to_string(k++) + "]";
        check_fields(c, at, {"generator", "target", "coefficients", "bound"});
        std::vector<R> target, coefs;
        for (const auto& x : c["target"]) target.push_back(h.parse(get_as<std::string>(x, at + ".target")));
        for (const auto& x : c["coefficients"]) coefs.push_back(h.parse(get_as<std::string>(x, at + ".coefficients")));
        auto label = get_as<std::string>(c["generator"], at + ".generator");
        std::size_t col = om.generators.size();
        for (std::size_t i = 0; i < om.generators.size(); ++i)
          if (om.label(i) == label) col = i;
        if (col == om.generators.size()) throw ParseError(at + ": unknown generator '" + label + "'");
        auto [m, l] = om.generators[col];
        if (target != om.multiple(disc, m, l)) bad = label + ": target is not the discriminant times " + label;
        else if (replay(om, coefs) != target) bad = label + ": coefficients do not reproduce the target";
        if (!bad.empty()) break;
      }
      r.check("replay", bad.empty(), std::to_string(k) + " certificates replay against the relation matrix", bad);
      return;
    }

    auto rep = discriminant_annihilates(d, bound);
    if constexpr (std::is_same_v<R, Poly<Integer>>) {
      auto& certs = r.data["certificates"] = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < rep.certificates.size(); ++i) {
        const auto& c = rep.certificates[i];
        certs.push_back({{"generator", om.label(i)},
                         {"target", strings(c.target)},
                         {"coefficients", strings(c.coefficients)},
                         {"bound", c.bound}});
      }
      r.line(std::to_string(rep.certificates.size()) + " membership certificates of coefficient degree <= " +
             std::to_string(rep.bound));
    } else if (rep.ann) {
      report_ann(*rep.ann, h.spec, r);
    }
    switch (rep.status) {
      case Status::pass: r.pass("discriminant-annihilates", rep.detail); break;
      case Status::fail: r.fail("discriminant-annihilates", "the discriminant does not kill Omega", rep.detail); break;
      case Status::inconclusive: r.inconclusive("discriminant-annihilates", rep.detail, rep.bound); break;
    }
  });
}

}  // namespace

void add_kahler_commands(CLI::App& app, Action& action) {
  auto* k = app.add_subcommand("kahler", "relative Kahler differentials of covers over K[s]")->require_subcommand(1);

  auto ofile = slot<std::string>();
  auto* o = k->add_subcommand("omega", "presentation of Omega by generators v_m dv_l");
  o->add_option("file", *ofile, "building-datum file")->required();
  o->callback([&action, ofile] { action = [ofile](Report& r) { omega_cmd(*ofile, r); }; });

  auto afile = slot<std::string>();
  auto mods = slot<std::vector<std::int64_t>>();
  auto* a = k->add_subcommand("ann", "annihilator of Omega by Smith normal form");
  a->add_option("file", *afile, "building-datum file")->required();
  a->add_option("--mod", *mods, "over ZZ[s], also reduce mod these primes (comma-separated)")->delimiter(',');
  a->callback([&action, afile, mods] { action = [afile, mods](Report& r) { ann_cmd(*afile, *mods, r); }; });

  auto lfile = slot<std::string>(), lreplay = slot<std::string>();
  auto lbound = slot<unsigned>(0);
  auto* l = k->add_subcommand("lemma228", "the discriminant annihilates Omega, with replayable certificates over ZZ[s]");
  l->add_option("file", *lfile, "building-datum file")->required();
  auto* bopt = l->add_option("--bound", *lbound, "coefficient degree bound over ZZ[s] (default: deg disc + 2)");
  l->add_option("--replay", *lreplay, "re-check the certificates of a JSON report");
  l->callback([&action, lfile, lbound, lreplay, bopt] {
    std::optional<unsigned> b;
    if (bopt->count()) b = *lbound;
    action = [lfile, b, lreplay](Report& r) { lemma_cmd(*lfile, b, *lreplay, r); };
  });
}

}  // namespace coverforge::cli
