#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecke_atlas/parallel.hpp"

namespace hecke_atlas::verify {

enum class Status { Pass, Fail, Flagged };
std::string status_name(Status s);

struct Case {
  std::string input;
  std::string digest;
  std::string expected;
  std::string actual;
  Status status = Status::Pass;
};

struct Report {
  std::string suite;
  std::vector<Case> cases;
  int passed = 0;
  int failed = 0;
  int flagged = 0;
  bool ok(bool allow_flagged) const { return failed == 0 && (allow_flagged || flagged == 0); }
};

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

std::vector<std::string> suite_names();
/// Default size bound of each suite (ambient dimension, rank or d).
int default_max_rank(const std::string& suite);

/// Throws InputError on an unknown suite or a non-positive bound.
/// max_rank 0 selects the default.
Report run_suite(const std::string& suite, int max_rank = 0, Exec exec = Exec::Parallel);

nlohmann::json report_to_json(const Report& r);

}  // namespace hecke_atlas::verify
