#pragma once

#include "mobius/isomin.hpp"
#include "mobius/matroid.hpp"

namespace mobius {

struct UnknownCheckId : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckReport {
  std::string id;
  std::string description;  // self-contained statement of the fact verified
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 60.0;
};

std::vector<std::string> check_ids();
CheckReport run_check(const std::string& id);
// Empty id list runs the whole registry; reports come back ordered by id.
std::vector<CheckReport> run_checks(std::vector<std::string> ids);

struct Verdict {
  enum class Kind {
    cographic,
    mobius_triangular,
    mobius_triadic,
    sporadic,
    has_mk33_minor,
    not_internally_4connected,
  };
  Kind kind;
  int r = 0;           // Moebius rank when applicable
  std::string id;      // sporadic id when applicable
  std::string evidence;
};

const char* to_string(Verdict::Kind k);

// Decision procedure behind the classification theorem, at desk scale.
Verdict classify(const BinaryMatroid& m);

}  // namespace mobius
