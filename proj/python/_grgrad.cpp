// Python bindings: documents in, JSON reports out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grgrad/document.hpp"
#include "grgrad/errors.hpp"
#include "grgrad/report.hpp"

namespace py = pybind11;

namespace {

std::optional<grgrad::ChainSide> side_of(const std::optional<std::string>& s) {
  if (!s || *s == "both") return std::nullopt;
  if (*s == "right") return grgrad::ChainSide::Right;
  if (*s == "left") return grgrad::ChainSide::Left;
  throw grgrad::InputError("side must be right, left or both");
}

std::optional<grgrad::ChainCondition> cond_of(const std::optional<std::string>& s) {
  if (!s || *s == "both") return std::nullopt;
  if (*s == "artinian") return grgrad::ChainCondition::Artinian;
  if (*s == "noetherian") return grgrad::ChainCondition::Noetherian;
  throw grgrad::InputError("cond must be artinian, noetherian or both");
}

std::string json(const grgrad::Report& r) { return grgrad::render(r, grgrad::Format::Json); }

}  // namespace

PYBIND11_MODULE(_grgrad, m) {
  m.doc() = "Graded radicals, socles and chain conditions over groupoid-graded rings";

  static py::exception<grgrad::InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<grgrad::DocumentError> document_error(m, "DocumentError", input_error.ptr());
  static py::exception<grgrad::ValidationFailure> validation_error(m, "ValidationError", PyExc_ValueError);
  static py::exception<grgrad::ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  static py::exception<grgrad::ConsistencyError> consistency_error(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const grgrad::DocumentError& e) {
      py::set_error(document_error, e.what());
    } catch (const grgrad::InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const grgrad::ValidationFailure& e) {
      std::string msg;
      for (const auto& v : e.report().violations) msg += (msg.empty() ? "" : "\n") + v;
      py::set_error(validation_error, msg.empty() ? e.what() : msg.c_str());
    } catch (const grgrad::ResourceError& e) {
      py::set_error(resource_error, e.what());
    } catch (const grgrad::ConsistencyError& e) {
      py::set_error(consistency_error, e.what());
    }
  });

  m.attr("DEFAULT_BUDGET") = grgrad::kDefaultBudget;

  m.def(
      "run_json",
      [](const std::string& command, const std::string& document, std::uint64_t budget, std::uint64_t seed,
         std::optional<std::string> module) {
        const grgrad::RingDocument doc = grgrad::parse_document(document);
        if (command != "validate") {
          const auto rep = grgrad::validate_document(doc);
          if (!rep.ok()) throw grgrad::ValidationFailure(rep);
        }
        grgrad::ReportOptions opts;
        opts.budget = budget;
        opts.seed = seed;
        opts.module = std::move(module);
        py::gil_scoped_release release;
        return json(grgrad::run_document_command(command, doc, opts));
      },
      py::arg("command"), py::arg("document"), py::arg("budget") = grgrad::kDefaultBudget, py::arg("seed") = 0,
      py::arg("module") = py::none());

  m.def(
      "classify_chains_json",
      [](const std::string& poset, std::optional<std::string> side, std::optional<std::string> cond,
         const std::vector<std::string>& coeff_fails) {
        grgrad::ChainQuery q{grgrad::PosetSpec::parse(poset), side_of(side), cond_of(cond), {}};
        for (const auto& f : coeff_fails) {
          if (f == "right-artinian") q.coefficients.right_artinian = false;
          else if (f == "right-noetherian") q.coefficients.right_noetherian = false;
          else if (f == "left-artinian") q.coefficients.left_artinian = false;
          else if (f == "left-noetherian") q.coefficients.left_noetherian = false;
          else throw grgrad::InputError("unknown coefficient condition '" + f + "'");
        }
        return json(grgrad::classify_chains_report(q));
      },
      py::arg("poset"), py::arg("side") = py::none(), py::arg("cond") = py::none(),
      py::arg("coeff_fails") = std::vector<std::string>{});

  m.def(
      "witness_json",
      [](const std::string& poset, int item, std::size_t length, std::optional<std::string> base) {
        return json(grgrad::witness_report(grgrad::PosetSpec::parse(poset), item, length, base));
      },
      py::arg("poset"), py::arg("item"), py::arg("length") = 10, py::arg("base") = py::none());

  m.def(
      "build",
      [](const std::string& kind, std::uint32_t prime, const std::string& coeff, std::optional<std::string> poset) {
        grgrad::BuildRequest req;
        req.kind = kind;
        req.prime = prime;
        req.coefficients = coeff;
        if (poset) req.poset = grgrad::PosetSpec::parse(*poset);
        return grgrad::emit_document(grgrad::build_document(req));
      },
      py::arg("kind"), py::arg("prime") = 2, py::arg("coeff") = "field", py::arg("poset") = py::none(),
      "Ring document text for a builder.");

  m.def(
      "canonicalize", [](const std::string& document) { return grgrad::emit_document(grgrad::parse_document(document)); },
      py::arg("document"), "Parse and re-emit a ring document in canonical form.");
}
