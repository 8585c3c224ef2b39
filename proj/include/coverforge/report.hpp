#pragma once

#include <optional>
#include <string>
#include <vector>

namespace coverforge {

enum class Status { pass, fail, inconclusive };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "inconclusive";
  }
}

/// One check: a fail carries a witness, an inconclusive result its bound.
struct Verdict {
  std::string id;
  Status status = Status::pass;
  std::string detail;
  std::string witness;
  std::optional<long> bound;
};

/// Worst status: fail over inconclusive over pass.
inline Status combine(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::inconclusive || b == Status::inconclusive) return Status::inconclusive;
  return Status::pass;
}

inline Status overall(const std::vector<Verdict>& vs) {
  Status s = Status::pass;
  for (const auto& v : vs) s = combine(s, v.status);
  return s;
}

}  // namespace coverforge
