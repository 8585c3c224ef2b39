#pragma once

// JSON input files: monoid presentations, groups, cocycles, building data
// and finite algebras.  Every object is checked against its field list, so
// a misspelt key is an error rather than a silent default.

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coverforge/cocycle/cocycle.hpp"
#include "coverforge/hopf/algebra.hpp"
#include "coverforge/monoid.hpp"
#include "ring_spec.hpp"

namespace coverforge::cli {

using json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors carry line and column.
inline json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') ++line, col = 1;
      else ++col;
    }
    std::string msg = e.what();
    auto cut = msg.find(", column ");
    if (cut != std::string::npos) cut = msg.find(": ", cut);
    throw ParseError(source + ": " + (cut == std::string::npos ? msg : msg.substr(cut + 2)), line, col);
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

/// Rejects keys outside `allowed` and reports missing `required` keys.
inline void check_fields(const json& j, const std::string& where, const std::set<std::string>& required,
                         const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!required.count(it.key()) && !optional.count(it.key()))
      throw ParseError(where + ": unknown field '" + it.key() + "'");
  for (const auto& k : required)
    if (!j.contains(k)) throw ParseError(where + ": missing field '" + k + "'");
}

template <class T>
T get_as(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + ": unexpected value " + j.dump());
  }
}

// ------------------------------------------------------------ groups

inline AbelianGroup group_from_orders(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of cyclic orders");
  std::vector<std::int64_t> orders;
  for (const auto& o : j) {
    if (!o.is_number_integer() || o.get<std::int64_t>() < 1)
      throw ParseError(where + ": cyclic orders must be positive integers, got " + o.dump());
    orders.push_back(o.get<std::int64_t>());
  }
  return AbelianGroup(orders);
}

/// {"cyclic_orders": [...]}.
inline AbelianGroup read_group(const json& j, const std::string& where = "group") {
  check_fields(j, where, {"cyclic_orders"});
  return group_from_orders(j["cyclic_orders"], where + ".cyclic_orders");
}

/// A group given inline on the command line: "[2,2,2]" or a group object.
inline AbelianGroup group_argument(const std::string& text) {
  json j = parse_json(text, "--group");
  return j.is_array() ? group_from_orders(j, "--group") : read_group(j, "--group");
}

/// "2" in a cyclic group, "(1,0)" in a product.
inline GroupElem parse_group_element(const AbelianGroup& A, const std::string& raw, const std::string& where) {
  std::string t;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  std::vector<std::int64_t> residues;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw ParseError(where + ": bad group element '" + raw + "'");
    return v;
  };
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw ParseError(where + ": bad group element '" + raw + "'");
    std::string inner = t.substr(1, t.size() - 2);
    std::size_t a = 0;
    while (a <= inner.size()) {
      std::size_t b = inner.find(',', a);
      if (b == std::string::npos) b = inner.size();
      residues.push_back(number(inner.substr(a, b - a)));
      a = b + 1;
    }
  } else {
    residues.push_back(number(t));
  }
  if (residues.size() != A.cyclic_orders().size())
    throw ParseError(where + ": '" + raw + "' has " + std::to_string(residues.size()) + " coordinates, the group " +
                     A.description() + " needs " + std::to_string(A.cyclic_orders().size()));
  return A.element(residues);
}

/// "l,l'" with elements as in parse_group_element.
inline std::pair<GroupElem, GroupElem> parse_pair_key(const AbelianGroup& A, const std::string& key,
                                                      const std::string& where) {
  int depth = 0;
  for (std::size_t k = 0; k < key.size(); ++k) {
    if (key[k] == '(') ++depth;
    if (key[k] == ')') --depth;
    if (key[k] == ',' && depth == 0)
      return {parse_group_element(A, key.substr(0, k), where), parse_group_element(A, key.substr(k + 1), where)};
  }
  throw ParseError(where + ": expected a key \"l,l'\", got '" + key + "'");
}

/// Symmetric table entries keyed by "l,l'", normalized to l <= l'.
/// Entries involving 0 are returned too; the caller decides about them.
inline std::map<std::pair<GroupElem, GroupElem>, json> read_pair_table(const AbelianGroup& A, const json& table,
                                                                        const std::string& where) {
  if (!table.is_object()) throw ParseError(where + ": expected an object keyed by \"l,l'\"");
  std::map<std::pair<GroupElem, GroupElem>, json> out;
  for (auto it = table.begin(); it != table.end(); ++it) {
    auto [a, b] = parse_pair_key(A, it.key(), where);
    if (a > b) std::swap(a, b);
    auto [slot, fresh] = out.try_emplace({a, b}, it.value());
    if (!fresh && slot->second != it.value())
      throw ParseError(where + ": entries for " + A.to_string(a) + "," + A.to_string(b) + " disagree");
  }
  return out;
}

// ------------------------------------------------------------ monoids

/// {"rank": n, "relations": [[[u...], [v...]], ...]}.
inline MonoidPresentation read_presentation(const json& j, const std::string& where = "presentation") {
  check_fields(j, where, {"rank", "relations"});
  auto rank = get_as<std::int64_t>(j["rank"], where + ".rank");
  if (rank < 0) throw ParseError(where + ".rank: must be non-negative");
  MonoidPresentation p(static_cast<std::size_t>(rank));
  if (!j["relations"].is_array()) throw ParseError(where + ".relations: expected a list");
  std::size_t k = 0;
  for (const auto& r : j["relations"]) {
    const std::string at = where + ".relations[" + std::to_string(k++) + "]";
    if (!r.is_array() || r.size() != 2) throw ParseError(at + ": expected [[u...], [v...]]");
    std::vector<FreeElem> sides;
    for (const auto& side : r) {
      if (!side.is_array() || side.size() != static_cast<std::size_t>(rank))
        throw ParseError(at + ": each side needs " + std::to_string(rank) + " exponents");
      FreeElem x(static_cast<std::size_t>(rank));
      for (std::size_t i = 0; i < side.size(); ++i) {
        if (!side[i].is_number_integer() || side[i].get<std::int64_t>() < 0)
          throw ParseError(at + ": exponents must be non-negative integers");
        x[i] = side[i].get<std::uint32_t>();
      }
      sides.push_back(x);
    }
    p.add_relation(sides[0], sides[1]);
  }
  return p;
}

/// An exponent vector given as a JSON list.
inline FreeElem word_argument(const std::string& text, std::size_t rank) {
  json j = parse_json(text, "--word");
  if (!j.is_array() || j.size() != rank)
    throw ParseError("--word: expected a list of " + std::to_string(rank) + " non-negative integers");
  FreeElem x(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (!j[i].is_number_integer() || j[i].get<std::int64_t>() < 0)
      throw ParseError("--word: exponents must be non-negative integers");
    x[i] = j[i].get<std::uint32_t>();
  }
  return x;
}

// ------------------------------------------------------------ cocycles

/// "NN", "NN^k" or "ring:<spec>".
struct CocycleTarget {
  std::size_t nat_dim = 0;  ///< 0 for a ring target
  std::optional<RingSpec> ring;
};

inline CocycleTarget parse_cocycle_target(const std::string& t) {
  if (t == "NN") return {1, std::nullopt};
  if (t.rfind("NN^", 0) == 0) {
    std::size_t used = 0;
    long k = 0;
    try {
      k = std::stol(t.substr(3), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size() - 3 || k < 1) throw ParseError("target: bad exponent in '" + t + "'");
    return {static_cast<std::size_t>(k), std::nullopt};
  }
  if (t.rfind("ring:", 0) == 0) return {0, parse_ring_spec(t.substr(5))};
  throw ParseError("target: expected \"NN\", \"NN^k\" or \"ring:<spec>\", got '" + t + "'");
}

inline IVec parse_nat_value(const json& v, std::size_t dim, const std::string& where) {
  IVec out;
  if (v.is_number_integer()) {
    out.push_back(v.get<std::int64_t>());
  } else if (v.is_string()) {
    std::string t;
    for (char ch : v.get<std::string>())
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    std::size_t a = 0;
    while (a <= t.size()) {
      std::size_t b = t.find(',', a);
      if (b == std::string::npos) b = t.size();
      std::string part = t.substr(a, b - a);
      std::size_t used = 0;
      std::int64_t x = 0;
      try {
        x = std::stoll(part, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (part.empty() || used != part.size()) throw ParseError(where + ": bad value " + v.dump());
      out.push_back(x);
      a = b + 1;
    }
  } else {
    throw ParseError(where + ": bad value " + v.dump());
  }
  if (out.size() != dim) throw ParseError(where + ": expected " + std::to_string(dim) + " coordinates");
  for (auto x : out)
    if (x < 0) throw ParseError(where + ": values in N must be non-negative");
  return out;
}

/// Raw content of a cocycle or building-datum file, before the element type
/// is known.
struct TableFile {
  AbelianGroup group;
  CocycleTarget target;
  std::map<std::pair<GroupElem, GroupElem>, json> entries;
  bool default_identity = false;
  std::optional<json> algebra;  ///< inline finite algebra for ring "algebra"
  std::string where;
};

/// Cocycle file: {"group", "target", "table", "default_identity"?}.
inline TableFile read_cocycle_file(const json& j, const std::string& where) {
  check_fields(j, where, {"group", "target", "table"}, {"default_identity"});
  TableFile f;
  f.where = where;
  f.group = read_group(j["group"], where + ".group");
  f.target = parse_cocycle_target(get_as<std::string>(j["target"], where + ".target"));
  f.entries = read_pair_table(f.group, j["table"], where + ".table");
  if (j.contains("default_identity")) f.default_identity = get_as<bool>(j["default_identity"], where + ".default_identity");
  return f;
}

/// Building-datum file: {"group", "ring", "sections", "default_identity"?,
/// "algebra"? (only with ring "algebra")}.
inline TableFile read_datum_file(const json& j, const std::string& where) {
  check_fields(j, where, {"group", "ring", "sections"}, {"default_identity", "algebra"});
  TableFile f;
  f.where = where;
  f.group = read_group(j["group"], where + ".group");
  auto ring = get_as<std::string>(j["ring"], where + ".ring");
  if (ring == "algebra") {
    if (!j.contains("algebra")) throw ParseError(where + ": ring \"algebra\" needs an \"algebra\" field");
    f.algebra = j["algebra"];
  } else {
    if (j.contains("algebra")) throw ParseError(where + ": field 'algebra' is only allowed with ring \"algebra\"");
    f.target.ring = parse_ring_spec(ring);
  }
  f.entries = read_pair_table(f.group, j["sections"], where + ".sections");
  if (j.contains("default_identity")) f.default_identity = get_as<bool>(j["default_identity"], where + ".default_identity");
  return f;
}

/// Fills a table with `value` applied to the entries: s_{0,l} must be the
/// identity if given; other missing entries are the identity only with
/// default_identity.
template <class Target, class F>
Cocycle<Target> build_table(const TableFile& f, Target target, F&& value) {
  const auto& A = f.group;
  Cocycle<Target> c(A, target);
  for (GroupElem a = 0; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b) {
      const std::string at = f.where + "[" + A.to_string(a) + "," + A.to_string(b) + "]";
      auto it = f.entries.find({a, b});
      if (a == 0) {
        if (it != f.entries.end() && !target.equal(value(it->second, at), target.identity()))
          throw ParseError(at + ": entries with 0 must be the identity");
        continue;
      }
      if (it == f.entries.end()) {
        if (!f.default_identity) throw ParseError(at + ": missing entry (set \"default_identity\": true to fill it)");
        continue;
      }
      c.set(a, b, value(it->second, at));
    }
  return c;
}

inline Cocycle<NatVector> nat_cocycle(const TableFile& f) {
  if (f.target.ring) throw InvalidInput(f.where + ": expected an N-valued cocycle");
  const std::size_t dim = f.target.nat_dim;
  return build_table(f, NatVector{dim}, [&](const json& v, const std::string& at) { return parse_nat_value(v, dim, at); });
}

template <class R>
BuildingDatum<R> ring_table(const TableFile& f, const RingHandle<R>& ring) {
  return build_table(f, RingTarget<R>{ring.one}, [&](const json& v, const std::string& at) {
    if (!v.is_string() && !v.is_number_integer()) throw ParseError(at + ": expected an element string");
    try {
      return ring.parse(v.is_string() ? v.get<std::string>() : v.dump());
    } catch (const ParseError& e) {
      std::string msg = e.what();
      auto cut = msg.find(": ");
      throw ParseError(at + ": " + (e.column() ? "column " + std::to_string(e.column()) + " of the value: " : "") +
                       (cut == std::string::npos ? msg : msg.substr(cut + 2)));
    }
  });
}

// ------------------------------------------------------------ finite algebras

/// {"p", "basis", "mult": {"a*b": "ab", ...}}; the unit is the first basis
/// label and unlisted products are zero.
inline AlgebraPtr read_algebra(const json& j, const std::string& where = "algebra") {
  check_fields(j, where, {"p", "basis", "mult"});
  auto p = get_as<std::int64_t>(j["p"], where + ".p");
  if (p < 2 || p > 65521 || !is_prime(p)) throw ParseError(where + ".p: expected a prime below 65536");
  auto basis = get_as<std::vector<std::string>>(j["basis"], where + ".basis");
  for (const auto& b : basis)
    if (b.empty() || b.find_first_of("*+- ") != std::string::npos)
      throw ParseError(where + ".basis: label '" + b + "' may not be empty or contain '*', '+', '-' or spaces");
  if (!j["mult"].is_object()) throw ParseError(where + ".mult: expected an object");
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> table;
  for (auto it = j["mult"].begin(); it != j["mult"].end(); ++it) {
    auto star = it.key().find('*');
    if (star == std::string::npos || it.key().find('*', star + 1) != std::string::npos)
      throw ParseError(where + ".mult: key '" + it.key() + "' is not of the form \"a*b\"");
    table.push_back({{it.key().substr(0, star), it.key().substr(star + 1)},
                     get_as<std::string>(it.value(), where + ".mult[" + it.key() + "]")});
  }
  return FiniteAlgebra::from_table(static_cast<std::uint32_t>(p), basis, table);
}

}  // namespace coverforge::cli
