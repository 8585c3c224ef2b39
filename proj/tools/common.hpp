#pragma once

// Pieces shared by the subcommands: the action slot filled by the chosen
// subcommand, datum loading and datum output in the input file format.

#include <CLI11.hpp>

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "coverforge/cover/datum.hpp"
#include "io.hpp"
#include "output.hpp"

namespace coverforge::cli {

/// Set by the subcommand that was selected; fills the report.
using Action = std::function<void(Report&)>;

void add_monoid_commands(CLI::App& app, Action& action);
void add_universal_commands(CLI::App& app, Action& action);
void add_cocycle_commands(CLI::App& app, Action& action);
void add_cover_commands(CLI::App& app, Action& action);
void add_hopf_commands(CLI::App& app, Action& action);
void add_kahler_commands(CLI::App& app, Action& action);
void add_verify_command(CLI::App& app, Action& action);

template <class T>
std::shared_ptr<T> slot(T init = T{}) {
  return std::make_shared<T>(std::move(init));
}

/// Splits on `sep`, trimming blanks and dropping empty pieces.
inline std::vector<std::string> split_list(const std::string& text, char sep = ';') {
  std::vector<std::string> out;
  std::size_t a = 0;
  while (a <= text.size()) {
    std::size_t b = text.find(sep, a);
    if (b == std::string::npos) b = text.size();
    std::string piece = text.substr(a, b - a);
    auto first = piece.find_first_not_of(" \t"), last = piece.find_last_not_of(" \t");
    if (first != std::string::npos) out.push_back(piece.substr(first, last - first + 1));
    a = b + 1;
  }
  return out;
}

inline nlohmann::ordered_json group_json(const AbelianGroup& A) { return {{"cyclic_orders", A.cyclic_orders()}}; }

inline std::string pair_key(const AbelianGroup& A, GroupElem a, GroupElem b) {
  return A.to_string(a) + "," + A.to_string(b);
}

/// A datum in the building-datum file format.
template <class R>
nlohmann::ordered_json datum_json(const BuildingDatum<R>& d, const std::string& ring) {
  const auto& A = d.group();
  nlohmann::ordered_json j;
  j["group"] = group_json(A);
  j["ring"] = ring;
  auto& s = j["sections"] = nlohmann::ordered_json::object();
  for (GroupElem a = 1; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b) s[pair_key(A, a, b)] = to_string(d(a, b));
  return j;
}

template <class Target>
nlohmann::ordered_json cocycle_json(const Cocycle<Target>& f, const std::string& target) {
  const auto& A = f.group();
  nlohmann::ordered_json j;
  j["group"] = group_json(A);
  j["target"] = target;
  auto& t = j["table"] = nlohmann::ordered_json::object();
  for (GroupElem a = 1; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b) {
      const auto& v = f(a, b);
      if constexpr (std::is_same_v<Target, NatVector>) {
        if (v.size() == 1) {
          t[pair_key(A, a, b)] = v[0];
          continue;
        }
      }
      t[pair_key(A, a, b)] = f.target().show(v);
    }
  return j;
}

/// Table lines "s_{a,b} = value" for both indices nonzero.
template <class Target>
std::vector<std::string> table_lines(const Cocycle<Target>& f, const std::string& name) {
  const auto& A = f.group();
  std::vector<std::string> out;
  for (GroupElem a = 1; a < A.order(); ++a)
    for (GroupElem b = a; b < A.order(); ++b)
      out.push_back("  " + name + "_{" + pair_key(A, a, b) + "} = " + f.target().show(f(a, b)));
  return out;
}

/// Reads a building-datum file and calls f(datum, ring handle).
template <class F>
void with_datum(const std::string& path, F&& f) {
  TableFile file = read_datum_file(read_json_file(path), path);
  if (file.algebra) {
    auto h = algebra_handle(read_algebra(*file.algebra, path + ".algebra"));
    f(ring_table(file, h), h);
    return;
  }
  with_ring(*file.target.ring, [&](const auto& h) { f(ring_table(file, h), h); });
}

/// A homomorphism from `source` to `target` given by a JSON list of images
/// of the standard generators, e.g. '[1]' or '["(1,0)", "(0,1)"]'.
inline GroupHom hom_argument(const AbelianGroup& source, const AbelianGroup& target, const std::string& text,
                             const std::string& where) {
  auto j = parse_json(text, where);
  if (!j.is_array()) throw ParseError(where + ": expected a list of generator images");
  std::vector<GroupElem> images;
  for (const auto& x : j)
    images.push_back(parse_group_element(target, x.is_string() ? x.get<std::string>() : x.dump(), where));
  return GroupHom(source, target, images);
}

}  // namespace coverforge::cli
