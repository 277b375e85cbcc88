// grgrad: analyses of groupoid-graded rings and modules from JSON documents.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "grgrad/errors.hpp"
#include "grgrad/report.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kValidation = 3, kResource = 4, kConsistency = 5 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw grgrad::DocumentError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<grgrad::ChainSide> parse_side(const std::string& s) {
  if (s == "right") return grgrad::ChainSide::Right;
  if (s == "left") return grgrad::ChainSide::Left;
  if (s == "both") return std::nullopt;
  throw grgrad::InputError("--side must be right, left or both");
}

std::optional<grgrad::ChainCondition> parse_cond(const std::string& s) {
  if (s == "artinian") return grgrad::ChainCondition::Artinian;
  if (s == "noetherian") return grgrad::ChainCondition::Noetherian;
  if (s == "both") return std::nullopt;
  throw grgrad::InputError("--cond must be artinian, noetherian or both");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Jacobson radicals, socles and chain conditions over groupoid-graded rings"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t budget = grgrad::kDefaultBudget;
  std::uint64_t seed = 0;
  std::uint32_t prime = 0;
  std::string input, module, poset, side = "both", cond = "both", base, coeff = "field", kind;
  std::vector<std::string> coeff_fails;
  int item = 0;
  std::size_t length = 10;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--enum-budget", budget, "Enumeration budget (vectors per degree, lattice size)")
        ->capture_default_str();
    sub->add_option("--seed", seed, "Tie-break seed")->capture_default_str();
    sub->add_option("--prime", prime, "Expected (or, for build, chosen) prime");
  };

  const std::vector<std::pair<std::string, std::string>> doc_cmds{
      {"validate", "Check groupoid, ring and module axioms"},
      {"radical", "Graded Jacobson radical of the ring or of --module"},
      {"socle", "Graded socle of the ring or of --module"},
      {"loewy", "Loewy series by iterated socles and by annihilators of J^n"},
      {"compseries", "Composition series, gr-length and Jordan-Holder cross-check"},
      {"semisimple", "gr-semisimplicity test"},
      {"semilocal", "gr-semilocal test via the quotient and via the components"},
      {"fitting", "Fitting decomposition of seeded random degree-e endomorphisms"},
      {"injective", "Baer test for graded injectivity"}};
  for (const auto& [name, help] : doc_cmds) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("document", input, "Ring document (JSON)")->required();
    sub->add_option("--module", module, "Module block to analyze (default: regular module)");
    common(sub);
  }

  auto* classify = app.add_subcommand("classify-chains", "Chain conditions of UT_I(A)");
  classify->add_option("--poset", poset, "finite:<hasse-edges> | ordinal:w*K+M[:reversed]")->required();
  classify->add_option("--side", side)->check(CLI::IsMember({"right", "left", "both"}));
  classify->add_option("--cond", cond)->check(CLI::IsMember({"artinian", "noetherian", "both"}));
  classify->add_option("--coeff-fails", coeff_fails,
                       "Conditions the coefficient ring lacks: right-artinian, right-noetherian, ...")
      ->delimiter(',');
  common(classify);

  auto* witness = app.add_subcommand("witness", "Explicit strict chain of one-sided ideals");
  witness->add_option("--poset", poset)->required();
  witness->add_option("--item", item, "Failing item 1-4 (or give --side and --cond)");
  witness->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));
  witness->add_option("--cond", cond)->check(CLI::IsMember({"artinian", "noetherian"}));
  witness->add_option("--length", length)->capture_default_str();
  witness->add_option("--base", base, "Base index, e.g. 1 or w");
  common(witness);

  auto* build = app.add_subcommand("build", "Emit a builder output as a ring document");
  build->add_option("kind", kind, "field | poly:K | matrix:N | ut | block:b1,b2,... | group:Z/N | category:j1,j2,...")
      ->required();
  build->add_option("--coeff", coeff, "Coefficient algebra: field or poly:K")->capture_default_str();
  build->add_option("--poset", poset, "Poset for ut");
  common(build);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::string echo = "grgrad";
  for (int k = 1; k < argc; ++k) echo += std::string(" ") + argv[k];
  const grgrad::Format fmt = format == "json" ? grgrad::Format::Json : grgrad::Format::Text;
  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  try {
    grgrad::Report body;
    int status = kOk;
    if (command == "build") {
      grgrad::BuildRequest req;
      req.kind = kind;
      req.prime = prime == 0 ? 2 : prime;
      req.coefficients = coeff;
      if (!poset.empty()) req.poset = grgrad::PosetSpec::parse(poset);
      std::cout << grgrad::emit_document(grgrad::build_document(req));
      return kOk;
    }
    if (command == "classify-chains") {
      grgrad::ChainQuery q{grgrad::PosetSpec::parse(poset), parse_side(side), parse_cond(cond), {}};
      for (const auto& f : coeff_fails) {
        if (f == "right-artinian") q.coefficients.right_artinian = false;
        else if (f == "right-noetherian") q.coefficients.right_noetherian = false;
        else if (f == "left-artinian") q.coefficients.left_artinian = false;
        else if (f == "left-noetherian") q.coefficients.left_noetherian = false;
        else throw grgrad::InputError("unknown --coeff-fails entry '" + f + "'");
      }
      body = grgrad::classify_chains_report(q);
    } else if (command == "witness") {
      if (item == 0) {
        const auto s = parse_side(side);
        const auto c = parse_cond(cond);
        if (!s || !c) throw grgrad::InputError("witness needs --item or both --side and --cond");
        item = grgrad::criterion_item(*s, *c);
      }
      body = grgrad::witness_report(grgrad::PosetSpec::parse(poset), item, length,
                                    base.empty() ? std::nullopt : std::optional<std::string>(base));
    } else {
      const grgrad::RingDocument doc = grgrad::parse_document(read_file(input));
      if (prime != 0 && prime != doc.prime())
        throw grgrad::InputError("--prime " + std::to_string(prime) + " does not match the document prime " +
                                 std::to_string(doc.prime()));
      if (command != "validate") {
        const auto rep = grgrad::validate_document(doc);
        if (!rep.ok()) throw grgrad::ValidationFailure(rep);
      }
      grgrad::ReportOptions opts;
      opts.budget = budget;
      opts.seed = seed;
      if (!module.empty()) opts.module = module;
      body = grgrad::run_document_command(command, doc, opts);
      if (command == "validate" && !body.at("valid").get<bool>()) status = kValidation;
    }
    grgrad::Report out;
    out["command"] = echo;
    for (auto& [k, v] : body.items()) out[k] = v;
    std::cout << grgrad::render(out, fmt);
    return status;
  } catch (const grgrad::ValidationFailure& e) {
    std::cerr << "validation failed:\n";
    for (const auto& v : e.report().violations) std::cerr << "  " << v << "\n";
    return kValidation;
  } catch (const grgrad::DocumentError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const grgrad::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const grgrad::ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << " (raise --enum-budget)\n";
    return kResource;
  } catch (const grgrad::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kConsistency;
  }
}
