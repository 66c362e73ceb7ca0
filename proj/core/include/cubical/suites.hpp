#pragma once

// Named verification suites. Each check evaluates one property on a fixed
// family of small instances and reports pass/fail with a witness.

#include <string>
#include <string_view>
#include <vector>

#include "cubical/presheaf.hpp"
#include "cubical/report.hpp"

namespace cubical {

struct SuiteBounds {
  /// Truncation and dimension bound for the instances (m, n <= max_dim).
  int max_dim = 3;
  /// Largest k for the degeneracy pushout squares.
  int k = 3;
  /// Replace Q^2 in the cubical instance list by a copy with a broken face
  /// table.
  bool corrupt_q = false;
  /// Run checks on separate threads.
  bool parallel = true;
};

struct SuiteReport {
  std::string suite;
  Report checks;  // sorted by id
  double seconds = 0;
};

struct CheckInfo {
  std::string id;
  std::string suite;
};

/// Every registered check, sorted by id.
const std::vector<CheckInfo>& registered_checks();

/// boxcat, qshape, coreflection, model, homology, all.
const std::vector<std::string>& suite_names();

/// Throws PreconditionError on an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteBounds& bounds = {});

/// The check with this id alone. Throws PreconditionError if unknown.
CheckResult run_check(std::string_view id, const SuiteBounds& bounds = {});

struct NamedObject {
  std::string name;
  PresheafPtr object;
};

/// Simplicial instances: Delta^k, boundaries, horns, Delta^1 x Delta^1.
std::vector<NamedObject> simplicial_instances(int truncation);
/// Cubical instances: cubes, Q^k, open boxes, the boundary of the square and
/// Q-images of the simplicial instances.
std::vector<NamedObject> cubical_instances(int truncation, bool corrupt_q = false);

/// Q^2 with one face entry redirected; fails validation.
Presheaf corrupted_q2(int truncation);

}  // namespace cubical
