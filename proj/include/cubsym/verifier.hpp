#pragma once

// Named checks, each an ordered list of exact assertions.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cubsym/catalog.hpp"

namespace cubsym {

enum class Status { pass, fail, error };
std::string to_string(Status s);

struct Assertion {
  std::string label;
  std::string claim;  // the mathematical statement being replayed
  std::string expected;
  std::string computed;
  bool held = false;
};

struct CheckReport {
  std::string check_id;
  std::string name;
  Status status = Status::pass;
  std::string details;
  std::vector<Assertion> assertions;
  long elapsed_ms = 0;
};

struct VerifyOptions {
  std::size_t max_closure = 100000;
  /// Stop a check at its first failed assertion.
  bool fail_fast = false;
};

struct CheckInfo {
  std::string id;
  std::string name;
  std::string summary;
};

const std::vector<CheckInfo>& check_registry();

class Verifier {
 public:
  explicit Verifier(Catalog catalog = Catalog(), VerifyOptions options = {});

  /// Accepts an id ("C5") or a name ("g1-invariant"). Throws DomainError
  /// for unknown checks.
  CheckReport run(std::string_view check) const;
  std::vector<CheckReport> run_all() const;

  const Catalog& catalog() const { return catalog_; }

 private:
  Catalog catalog_;
  VerifyOptions options_;
};

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const std::vector<CheckReport>& rs);

}  // namespace cubsym
