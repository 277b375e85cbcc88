#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "grgrad/chains.hpp"
#include "grgrad/document.hpp"
#include "grgrad/radical.hpp"
#include "json.hpp"

namespace grgrad {

/// Analysis results in insertion order, so output is byte-stable.
using Report = nlohmann::ordered_json;

enum class Format { Text, Json };

struct ReportOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  /// Module block to analyze; the regular module when empty.
  std::optional<std::string> module;
};

/// Commands over a ring document: validate, radical, socle, loewy, compseries,
/// semisimple, semilocal, fitting, injective. Throws InputError for others.
Report run_document_command(const std::string& command, const RingDocument& doc, const ReportOptions& opts);
bool is_document_command(const std::string& command);

struct ChainQuery {
  PosetSpec poset;
  std::optional<ChainSide> side;          // both when empty
  std::optional<ChainCondition> condition;  // both when empty
  CoefficientFlags coefficients;
};
Report classify_chains_report(const ChainQuery& q);
Report witness_report(const PosetSpec& poset, int item, std::size_t length, const std::optional<std::string>& base);

struct BuildRequest {
  /// field | poly:K | matrix:N | ut | block:b1,b2,... | group:Z/N | category:j1,j2,...
  std::string kind;
  std::uint32_t prime = 2;
  /// Coefficient algebra: "field" or "poly:K".
  std::string coefficients = "field";
  /// Poset for `ut`.
  std::optional<PosetSpec> poset;
};
RingDocument build_document(const BuildRequest& req);

/// Text: indented "key: value" lines. Json: 2-space indented JSON.
std::string render(const Report& report, Format format);

}  // namespace grgrad
