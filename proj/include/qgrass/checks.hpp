#pragma once

#include "qgrass/grassmann.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qgrass {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckInfo {
  std::string id;
  std::string claim;  // what is verified
};

/// The fixed catalog, sorted by id.
const std::vector<CheckInfo>& check_catalog();
bool is_known_check(const std::string& id);

struct CheckOptions {
  unsigned seed = 20240611;
  /// Replace the row relation constant q by q^2 everywhere (harness self-test).
  bool mutate = false;
};

struct CheckReport {
  std::string id;
  GrassShape shape;
  CheckStatus status = CheckStatus::pass;
  std::string reason;                  // set when skipped
  std::vector<std::string> witnesses;  // counterexamples when failed
  std::vector<std::string> details;    // sub-check summaries
  unsigned seed = 0;
  double elapsed_ms = 0;
};

/// Runs one check on one grassmannian shape (k,n). Checks on quantum
/// matrices use the dehomogenised base O_q(M(k,n-k)). Throws
/// std::invalid_argument on an unknown id.
CheckReport run_check(const std::string& id, GrassShape shape, const CheckOptions& options = {});

std::vector<GrassShape> default_check_shapes();

/// Every catalog check on every shape, run concurrently, sorted by (id, shape).
std::vector<CheckReport> run_all(const std::vector<GrassShape>& shapes, const CheckOptions& options = {});

nlohmann::ordered_json to_json(const CheckReport& r, bool with_elapsed = true);
nlohmann::ordered_json report_json(const std::vector<CheckReport>& reports, const CheckOptions& options,
                                   bool with_elapsed = true);
bool any_failed(const std::vector<CheckReport>& reports);

}  // namespace qgrass
