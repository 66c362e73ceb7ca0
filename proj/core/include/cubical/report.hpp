#pragma once

#include <string>
#include <vector>

namespace cubical {

enum class Status { pass, fail, skip };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  Status status = Status::pass;
  std::string witness;
};

using Report = std::vector<CheckResult>;

inline bool all_pass(const Report& r) {
  for (const auto& c : r) {
    if (c.status == Status::fail) return false;
  }
  return true;
}

}  // namespace cubical
