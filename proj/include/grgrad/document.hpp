#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "grgrad/errors.hpp"
#include "grgrad/module.hpp"

namespace grgrad {

/// Malformed document text: bad JSON, missing keys, unknown names.
class DocumentError : public InputError {
 public:
  explicit DocumentError(const std::string& what) : InputError(what) {}
};

/// Parsed objects violate an axiom; carries every violation found.
class ValidationFailure : public std::runtime_error {
 public:
  explicit ValidationFailure(ValidationReport report)
      : std::runtime_error(report.violations.empty() ? "validation failed" : report.violations.front()),
        report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct ModuleEntry {
  std::string name;
  GradedModule module;
};

/// A ring description file.
///
/// JSON keys, in canonical order: "prime"; "groupoid" ({"builder": "pair:<n>" |
/// "pair:<a,b,...>" | "group:Z/<n>" | "group:<rows ; separated>" | "trivial"} or
/// {"morphisms": [{"name","source","target"}], "composition": [[d,g,dg], ...]}
/// listing the products of non-identity morphisms); "basis" ([{"name","degree"}]);
/// "products" ([[left, right, result, coefficient], ...]); "units"
/// ({object: [[basis, coefficient], ...]}); optional "modules"
/// ([{"name", "basis": [{"name","degree"}], "action": [[m, b, m', c], ...]}]).
struct RingDocument {
  std::string builder;  // groupoid builder shorthand; empty for explicit tables
  RingPtr ring;
  std::vector<ModuleEntry> modules;

  std::uint32_t prime() const { return ring->prime(); }
  const GradedModule& module(const std::string& name) const;

  friend bool operator==(const RingDocument& a, const RingDocument& b);
};

/// Builds the groupoid named by a builder shorthand; throws DocumentError.
Groupoid groupoid_from_builder(const std::string& builder);

/// Throws DocumentError on malformed text and ValidationFailure when the
/// groupoid tables are not a groupoid (ring and modules are validated separately).
RingDocument parse_document(const std::string& text);
/// Canonical serialization: fixed key order, sparse tables in index order,
/// coefficients reduced mod p.
std::string emit_document(const RingDocument& doc);

RingDocument make_document(RingPtr ring, std::string builder = "", std::vector<ModuleEntry> modules = {});

/// Groupoid, ring and module violations, each prefixed by where it occurred.
ValidationReport validate_document(const RingDocument& doc);

}  // namespace grgrad
