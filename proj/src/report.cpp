#include "grgrad/report.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "grgrad/errors.hpp"
#include "grgrad/random.hpp"
#include "grgrad/structure.hpp"

namespace grgrad {

namespace {

std::vector<std::string> names_of(const std::vector<BasisElement>& basis) {
  std::vector<std::string> out;
  for (const auto& b : basis) out.push_back(b.name);
  return out;
}

std::string element_string(std::span<const Elem> v, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!s.empty()) s += " + ";
    if (v[k] != 1) s += std::to_string(v[k]) + "*";
    s += names[k];
  }
  return s.empty() ? "0" : s;
}

Report degree_dims(const std::map<Morphism, std::size_t>& dims, const Groupoid& g) {
  Report o = Report::object();
  for (const auto& [d, k] : dims)
    if (k > 0) o[g.name(d)] = k;
  return o;
}

Report subspace_json(const Subspace& s, const std::vector<Morphism>& degrees, const std::vector<std::string>& names,
                     const Groupoid& g) {
  Report o;
  o["total_dim"] = s.dim();
  o["dims_by_degree"] = degree_dims(GradedSubspace(s, degrees).dims_by_degree(), g);
  Report b = Report::array();
  for (std::size_t r = 0; r < s.dim(); ++r) b.push_back(element_string(s.basis().row(r), names));
  o["basis"] = b;
  return o;
}

Report string_list(const std::vector<std::string>& xs) {
  Report a = Report::array();
  for (const auto& x : xs) a.push_back(x);
  return a;
}

Report morphism_list(const std::vector<Morphism>& ms, const Groupoid& g) {
  Report a = Report::array();
  for (auto m : ms) a.push_back(g.name(m));
  return a;
}

void provenance(Report& o, const std::string& engine, const std::vector<std::string>& confirmed,
                const std::vector<std::string>& skipped = {}) {
  o["engine"] = engine;
  o["oracle_confirmed"] = !confirmed.empty();
  o["confirmed_by"] = string_list(confirmed);
  if (!skipped.empty()) o["skipped"] = string_list(skipped);
}

struct Target {
  std::optional<GradedModule> owned;
  const GradedModule* external = nullptr;
  std::string label;
  const GradedModule& get() const { return owned ? *owned : *external; }
};

Target select_module(const RingDocument& doc, const ReportOptions& opts) {
  Target t;
  if (opts.module) {
    t.external = &doc.module(*opts.module);
    t.label = "module " + *opts.module;
  } else {
    t.owned.emplace(regular_module(doc.ring));
    t.label = "regular module";
  }
  return t;
}

/// Lattice oracle for a module-level subspace; returns the skip reason on failure.
std::optional<std::string> lattice_check(const GradedModule& m, std::uint64_t budget, const Subspace& value,
                                         bool radical) {
  if (!lattice_within_budget(m, budget)) return "lattice: a degree slice exceeds the enumeration budget";
  try {
    const SubmoduleLattice lat = submodule_lattice(m, budget);
    const Subspace oracle = radical ? lat.radical() : lat.socle();
    if (!(oracle == value)) throw ConsistencyError("lattice oracle disagrees with the computed submodule");
  } catch (const ResourceError& e) {
    return std::string("lattice: ") + e.what();
  }
  return std::nullopt;
}

Report radical_or_socle(const RingDocument& doc, const ReportOptions& opts, bool radical) {
  const GradedRing& r = *doc.ring;
  const Groupoid& g = r.groupoid();
  Report o;
  if (!opts.module) {
    const RadicalReport rr = radical ? rad_gr_ring(r, opts.budget) : soc_gr_ring(r, opts.budget);
    o["target"] = "ring";
    o[radical ? "radical" : "socle"] = subspace_json(rr.subspace.space(), r.degrees(), names_of(r.basis()), g);
    provenance(o, rr.engine, rr.confirmed_by, rr.skipped);
    return o;
  }
  const Target t = select_module(doc, opts);
  const GradedModule& m = t.get();
  const RadicalReport j = rad_gr_ring(r, opts.budget);
  const Subspace value = radical ? rad_gr_module(m, j.subspace.space()).space()
                                 : soc_gr_module(m, j.subspace.space()).space();
  std::vector<std::string> confirmed, skipped;
  if (!radical && lattice_within_budget(m, opts.budget)) {
    if (!(socle_by_spinning(m, opts.budget) == value))
      throw ConsistencyError("socle by spinning differs from the annihilator of J");
    confirmed.push_back("spinning");
  }
  if (auto why = lattice_check(m, opts.budget, value, radical))
    skipped.push_back(*why);
  else
    confirmed.push_back("lattice");
  o["target"] = t.label;
  o[radical ? "radical" : "socle"] = subspace_json(value, m.degrees(), names_of(m.basis()), g);
  provenance(o, (radical ? "M*J, J by " : "annihilator of J, J by ") + j.engine, confirmed, skipped);
  return o;
}

Report validate_cmd(const RingDocument& doc) {
  const GradedRing& r = *doc.ring;
  const ValidationReport rep = validate_document(doc);
  Report o;
  o["valid"] = rep.ok();
  o["prime"] = r.prime();
  o["groupoid"] = Report{{"morphisms", r.groupoid().size()}, {"objects", r.groupoid().objects().size()}};
  o["ring_dim"] = r.dim();
  Report mods = Report::array();
  for (const auto& [name, m] : doc.modules) mods.push_back(Report{{"name", name}, {"dim", m.dim()}});
  o["modules"] = mods;
  o["violations"] = string_list(rep.violations);
  provenance(o, "exhaustive axiom check over basis triples", {});
  return o;
}

Report loewy_cmd(const RingDocument& doc, const ReportOptions& opts) {
  const Target t = select_module(doc, opts);
  const GradedModule& m = t.get();
  const Groupoid& g = m.ring().groupoid();
  const RadicalReport j = rad_gr_ring(m.ring(), opts.budget);
  const LoewySeries ls = loewy_series(m, j.subspace.space(), opts.budget);
  Report o;
  o["target"] = t.label;
  o["length"] = ls.length();
  Report terms = Report::array();
  for (const auto& s : ls.terms)
    terms.push_back(Report{{"dim", s.dim()}, {"dims_by_degree", degree_dims(s.dims_by_degree(), g)}});
  o["terms"] = terms;
  Report prof = Report::array();
  for (const auto& p : ls.profiles) prof.push_back(morphism_list(p, g));
  o["profiles"] = prof;
  provenance(o, "iterated socle (" + ls.socle_engine + "), J by " + j.engine, {"annihilators of J^n"});
  return o;
}

Report compseries_cmd(const RingDocument& doc, const ReportOptions& opts) {
  const Target t = select_module(doc, opts);
  const GradedModule& m = t.get();
  const Groupoid& g = m.ring().groupoid();
  const CompositionSeries cs = composition_series(m, opts.seed, opts.budget);
  const CompositionSeries other = composition_series(m, opts.seed + 1, opts.budget);
  if (!jordan_holder_equivalent(cs, other, opts.budget))
    throw ConsistencyError("composition series for two seeds are not Jordan-Holder equivalent");
  const auto per_object = gamma0_length(m, opts.budget);
  std::size_t total = 0;
  Report lens = Report::object();
  for (const auto& [e, k] : per_object) {
    total += k;
    if (k > 0) lens[g.name(e)] = k;
  }
  if (total != cs.length()) throw ConsistencyError("gr-length differs from the sum of the Gamma0 lengths");
  Report o;
  o["target"] = t.label;
  o["seed"] = opts.seed;
  o["length"] = cs.length();
  Report fs = Report::array();
  for (const auto& f : cs.factors)
    fs.push_back(Report{{"object", g.name(f.object)}, {"dim", f.module.dim()}, {"dims_by_degree", degree_dims(f.dims, g)}});
  o["factors"] = fs;
  o["gamma0_lengths"] = lens;
  provenance(o, "minimal cyclic peeling",
             {"jordan-holder match against seed " + std::to_string(opts.seed + 1), "sum of component lengths"});
  return o;
}

Report semisimple_cmd(const RingDocument& doc, const ReportOptions& opts) {
  const GradedRing& r = *doc.ring;
  const SemisimpleVerdict v = is_gr_semisimple(r, opts.budget);
  Report o;
  o["semisimple"] = v.semisimple;
  o["radical_dim"] = v.radical.dim();
  o["socle_is_whole"] = v.socle_is_whole;
  Report dec = Report::array();
  for (const auto& s : v.decomposition)
    dec.push_back(Report{{"dim", s.dim()}, {"dims_by_degree", degree_dims(s.dims_by_degree(), r.groupoid())}});
  o["decomposition"] = dec;
  auto confirmed = v.radical.confirmed_by;
  confirmed.push_back("soc^gr(R) = R test");
  provenance(o, "rad^gr(R) = 0 test, radical by " + v.radical.engine, confirmed, v.radical.skipped);
  return o;
}

Report semilocal_cmd(const RingDocument& doc, const ReportOptions& opts) {
  const GradedRing& r = *doc.ring;
  const SemilocalVerdict v = is_gr_semilocal(r, opts.budget);
  Report o;
  o["semilocal"] = v.semilocal;
  o["via_quotient"] = v.via_quotient;
  o["via_components"] = v.via_components;
  Report per = Report::object();
  for (const auto& [e, ok] : v.per_object) per[r.groupoid().name(e)] = ok;
  o["per_object"] = per;
  provenance(o, "R/rad^gr(R) semisimplicity", {"R_e/rad(R_e) semisimplicity for every object"});
  return o;
}

Report fitting_cmd(const RingDocument& doc, const ReportOptions& opts) {
  const Target t = select_module(doc, opts);
  const GradedModule& m = t.get();
  const Groupoid& g = m.ring().groupoid();
  Rng rng(opts.seed);
  Report o;
  o["target"] = t.label;
  o["seed"] = opts.seed;
  Report maps = Report::array();
  bool any_inverse = false;
  for (auto e : g.objects()) {
    const Matrix map = random_endomorphism(m, e, rng);
    const FittingResult fr = fitting(m, map, e);
    if (!fr.direct_sum || !fr.bijective_on_image) throw ConsistencyError("Fitting decomposition failed at " + g.name(e));
    any_inverse = any_inverse || fr.inverse.has_value();
    maps.push_back(Report{{"degree", g.name(e)},
                          {"rank", rank(map)},
                          {"n", fr.n},
                          {"kernel_dim", fr.kernel.dim()},
                          {"image_dim", fr.image.dim()},
                          {"direct_sum", fr.direct_sum},
                          {"bijective_on_image", fr.bijective_on_image},
                          {"injective_on_component", fr.injective_on_component},
                          {"surjective_onto_component", fr.surjective_onto_component},
                          {"gr_invertible", fr.inverse.has_value()}});
  }
  o["maps"] = maps;
  std::vector<std::string> confirmed{"kernel/image complement check"};
  if (any_inverse) confirmed.push_back("inverse solved in END(M)");
  provenance(o, "stabilized powers of g", confirmed);
  return o;
}

Report injective_cmd(const RingDocument& doc, const ReportOptions& opts) {
  const Target t = select_module(doc, opts);
  const GradedModule& m = t.get();
  const GradedRing& r = m.ring();
  const BaerResult b = baer_gr_injective(m, opts.budget);
  Report o;
  o["target"] = t.label;
  o["injective"] = b.injective;
  o["ideals_checked"] = b.ideals_checked;
  if (!b.injective) {
    Report w;
    w["degree"] = r.groupoid().name(*b.witness_degree);
    w["ideal"] = subspace_json(*b.witness_ideal, r.degrees(), names_of(r.basis()), r.groupoid());
    o["witness"] = w;
  }
  provenance(o, "Baer test over every graded right ideal", {"exhaustive lattice"});
  return o;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t k = 0; k < labels.size(); ++k) s += (k ? "," : "") + labels[k];
  return s;
}

/// Builder shorthand reproducing g, or "" when none applies.
std::string infer_builder(const Groupoid& g) {
  std::vector<std::string> candidates{"trivial"};
  const std::size_t k = g.objects().size();
  if (k == 1) candidates.push_back("group:Z/" + std::to_string(g.size()));
  if (k * k == g.size()) {
    std::vector<std::string> labels;
    bool numeric = true;
    for (std::size_t i = 0; i < k; ++i) {
      const std::string& n = g.name(g.objects()[i]);
      const auto comma = n.find(',');
      if (n.size() < 5 || n.front() != '(' || comma == std::string::npos) return "";
      labels.push_back(n.substr(1, comma - 1));
      numeric = numeric && labels.back() == std::to_string(i + 1);
    }
    candidates.push_back(numeric ? "pair:" + std::to_string(k) : "pair:" + join_labels(labels));
  }
  for (const auto& c : candidates) {
    try {
      if (groupoid_from_builder(c) == g) return c;
    } catch (const InputError&) {
    }
  }
  return "";
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw InputError("bad " + what + " '" + s + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

GradedRing coefficient_algebra(const BuildRequest& req) {
  if (req.coefficients == "field") return field_algebra(req.prime);
  if (req.coefficients.rfind("poly:", 0) == 0)
    return truncated_polynomial_algebra(req.prime, parse_size(req.coefficients.substr(5), "polynomial degree"));
  throw InputError("coefficients must be 'field' or 'poly:K'");
}

}  // namespace

bool is_document_command(const std::string& c) {
  static const std::set<std::string> cmds{"validate", "radical", "socle", "loewy", "compseries",
                                          "semisimple", "semilocal", "fitting", "injective"};
  return cmds.count(c) > 0;
}

Report run_document_command(const std::string& command, const RingDocument& doc, const ReportOptions& opts) {
  if (command == "validate") return validate_cmd(doc);
  if (command == "radical") return radical_or_socle(doc, opts, true);
  if (command == "socle") return radical_or_socle(doc, opts, false);
  if (command == "loewy") return loewy_cmd(doc, opts);
  if (command == "compseries") return compseries_cmd(doc, opts);
  if (command == "semisimple") return semisimple_cmd(doc, opts);
  if (command == "semilocal") return semilocal_cmd(doc, opts);
  if (command == "fitting") return fitting_cmd(doc, opts);
  if (command == "injective") return injective_cmd(doc, opts);
  throw InputError("unknown command '" + command + "'");
}

Report classify_chains_report(const ChainQuery& q) {
  const ChainVerdict v = classify_ut(q.poset, q.coefficients);
  Report o;
  o["poset"] = q.poset.to_string();
  o["total_order"] = q.poset.is_total();
  o["complete"] = v.complete;
  Report list = Report::array();
  for (ChainSide s : {ChainSide::Right, ChainSide::Left}) {
    if (q.side && *q.side != s) continue;
    for (ChainCondition c : {ChainCondition::Artinian, ChainCondition::Noetherian}) {
      if (q.condition && *q.condition != c) continue;
      for (ChainLevel l : {ChainLevel::Gamma0, ChainLevel::StronglyGamma0, ChainLevel::Gr}) {
        const VerdictEntry& e = v.at(s, l, c);
        Report r;
        r["property"] = to_string(s) + " " + to_string(l) + "-" + to_string(c);
        r["verdict"] = e.holds ? "holds" : "fails";
        r["certified"] = e.certain;
        if (!e.witness.empty()) r["reason"] = e.witness;
        if (e.item != 0)
          r["witness_offer"] = "grgrad witness --poset " + q.poset.to_string() + " --item " + std::to_string(e.item) +
                               " --length 10";
        list.push_back(r);
      }
    }
  }
  o["verdicts"] = list;
  provenance(o, "closed-form case analysis of chain shapes", {});
  return o;
}

Report witness_report(const PosetSpec& poset, int item, std::size_t length, const std::optional<std::string>& base) {
  const WitnessChain w = witness_chain(poset, item, length, base);
  if (!w.certified) throw ConsistencyError("witness chain failed strictness on its truncation");
  Report o;
  o["poset"] = poset.to_string();
  o["item"] = item;
  o["side"] = to_string(w.side);
  o["base"] = w.base;
  o["direction"] = w.ascending ? "ascending" : "descending";
  o["chain"] = w.to_string();
  o["indices"] = string_list(w.indices);
  o["truncation"] = string_list(w.truncation);
  Report dims = Report::array();
  for (auto d : w.ideal_dims) dims.push_back(d);
  o["ideal_dims"] = dims;
  o["certified"] = w.certified;
  provenance(o, "explicit elementary-matrix ideals", {"strict containment in UT over F_2 on the truncation"});
  return o;
}

RingDocument build_document(const BuildRequest& req) {
  if (!is_prime(req.prime) || req.prime > PrimeField::kMaxPrime) throw InputError("--prime must be a prime below 2^16");
  const std::string& k = req.kind;
  auto after = [&](const std::string& prefix) { return k.substr(prefix.size()); };
  std::optional<GradedRing> r;
  if (k == "field") {
    r = field_algebra(req.prime);
  } else if (k.rfind("poly:", 0) == 0) {
    r = truncated_polynomial_algebra(req.prime, parse_size(after("poly:"), "polynomial degree"));
  } else if (k.rfind("matrix:", 0) == 0) {
    r = build_pair_matrix_ring(coefficient_algebra(req), parse_size(after("matrix:"), "matrix size"));
  } else if (k == "ut") {
    if (!req.poset || req.poset->kind != PosetSpec::Kind::Finite) throw InputError("ut needs --poset finite:...");
    r = build_ut(coefficient_algebra(req), req.poset->finite);
  } else if (k.rfind("block:", 0) == 0) {
    const auto tokens = split_list(after("block:"));
    std::vector<std::string> labels(tokens.begin(), tokens.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<std::size_t> block_of;
    for (const auto& t : tokens)
      block_of.push_back(static_cast<std::size_t>(std::find(labels.begin(), labels.end(), t) - labels.begin()));
    r = build_block_matrix_ring(coefficient_algebra(req), labels, block_of);
  } else if (k.rfind("group:Z/", 0) == 0) {
    const auto n = parse_size(after("group:Z/"), "group order");
    if (n == 0 || n > 64) throw InputError("group order must be 1..64");
    r = groupoid_algebra(group_groupoid(cyclic_group_table(static_cast<std::uint32_t>(n))), req.prime);
  } else if (k.rfind("category:", 0) == 0) {
    const GradedRing a = coefficient_algebra(req);
    if (req.coefficients == "field") throw InputError("category rings need --coeff poly:K");
    std::vector<AlgebraModule> mods;
    for (const auto& t : split_list(after("category:"))) mods.push_back(truncated_cyclic_module(a, parse_size(t, "module length")));
    r = build_category_ring(a, mods);
  } else {
    throw InputError("unknown builder '" + k + "'");
  }
  auto ring = std::make_shared<const GradedRing>(std::move(*r));
  const std::string builder = infer_builder(ring->groupoid());
  return make_document(std::move(ring), builder);
}

namespace {

bool is_scalar_array(const Report& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Report& x) { return x.is_primitive(); });
}

std::string scalar_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

void render_text(std::ostringstream& os, const Report& v, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, val] : v.items()) {
    if (val.is_primitive()) {
      os << pad << key << ": " << scalar_text(val) << "\n";
    } else if (val.empty()) {
      os << pad << key << ": " << (val.is_array() ? "[]" : "{}") << "\n";
    } else if (is_scalar_array(val) && val.size() <= 12 && val.dump().size() < 100) {
      os << pad << key << ": ";
      for (std::size_t k = 0; k < val.size(); ++k) os << (k ? ", " : "") << scalar_text(val[k]);
      os << "\n";
    } else if (val.is_array()) {
      os << pad << key << ":\n";
      for (const auto& item : val) {
        if (item.is_primitive()) {
          os << pad << "  - " << scalar_text(item) << "\n";
        } else if (item.is_array()) {
          os << pad << "  - ";
          for (std::size_t k = 0; k < item.size(); ++k) os << (k ? ", " : "") << scalar_text(item[k]);
          os << "\n";
        } else {
          std::ostringstream inner;
          render_text(inner, item, indent + 4);
          std::string s = inner.str();
          s.replace(indent + 2, 2, "- ");
          os << s;
        }
      }
    } else {
      os << pad << key << ":\n";
      render_text(os, val, indent + 2);
    }
  }
}

}  // namespace

std::string render(const Report& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::ostringstream os;
  render_text(os, report, 0);
  return os.str();
}

}  // namespace grgrad
