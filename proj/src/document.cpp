#include "grgrad/document.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"

namespace grgrad {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::uint32_t parse_u32(const std::string& s, const std::string& what) {
  std::uint32_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw DocumentError("bad " + what + " '" + s + "'");
  return v;
}

void require_keys(const json& j, const std::string& where, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw DocumentError(where + " must be an object");
  for (const char* k : required)
    if (!j.contains(k)) throw DocumentError(where + " is missing \"" + k + "\"");
  for (const auto& [k, v] : j.items()) {
    const bool known = std::any_of(required.begin(), required.end(), [&](const char* r) { return k == r; }) ||
                       std::any_of(optional.begin(), optional.end(), [&](const char* r) { return k == r; });
    if (!known) throw DocumentError(where + " has unknown key \"" + k + "\"");
  }
}

const json& array_at(const json& j, const char* key, const std::string& where) {
  const json& a = j.at(key);
  if (!a.is_array()) throw DocumentError(where + "." + key + " must be an array");
  return a;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw DocumentError(where + " must be a string");
  return j.get<std::string>();
}

Elem as_coefficient(const json& j, const PrimeField& f, const std::string& where) {
  if (!j.is_number_integer()) throw DocumentError(where + " must be an integer");
  return f.reduce(j.get<std::int64_t>());
}

class NameIndex {
 public:
  NameIndex(std::string what, const std::vector<std::string>& names) : what_(std::move(what)) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (!index_.emplace(names[i], i).second) throw DocumentError("duplicate " + what_ + " name '" + names[i] + "'");
  }
  std::size_t operator()(const json& j) const {
    const std::string s = as_string(j, what_ + " reference");
    auto it = index_.find(s);
    if (it == index_.end()) throw DocumentError("unknown " + what_ + " '" + s + "'");
    return it->second;
  }

 private:
  std::string what_;
  std::map<std::string, std::size_t> index_;
};

Groupoid parse_groupoid(const json& g) {
  if (g.contains("builder")) {
    require_keys(g, "groupoid", {"builder"});
    return groupoid_from_builder(as_string(g.at("builder"), "groupoid.builder"));
  }
  require_keys(g, "groupoid", {"morphisms", "composition"});
  const json& ms = array_at(g, "morphisms", "groupoid");
  Groupoid::Data d;
  for (const auto& m : ms) {
    require_keys(m, "groupoid morphism", {"name", "source", "target"});
    d.names.push_back(as_string(m.at("name"), "morphism name"));
  }
  if (d.names.empty()) throw DocumentError("groupoid has no morphisms");
  const NameIndex idx("morphism", d.names);
  const std::size_t n = d.names.size();
  for (const auto& m : ms) {
    d.source.push_back(static_cast<std::uint32_t>(idx(m.at("source"))));
    d.target.push_back(static_cast<std::uint32_t>(idx(m.at("target"))));
  }
  d.composition.assign(n * n, Groupoid::kUndefined);
  for (std::uint32_t m = 0; m < n; ++m) {
    d.composition[d.target[m] * n + m] = m;
    d.composition[m * n + d.source[m]] = m;
  }
  for (const auto& t : array_at(g, "composition", "groupoid")) {
    if (!t.is_array() || t.size() != 3) throw DocumentError("composition entries are [delta, gamma, delta*gamma]");
    d.composition[idx(t[0]) * n + idx(t[1])] = static_cast<std::uint32_t>(idx(t[2]));
  }
  d.inverse.resize(n);
  for (std::uint32_t m = 0; m < n; ++m) {
    d.inverse[m] = m;
    for (std::uint32_t k = 0; k < n; ++k)
      if (d.composition[k * n + m] == d.source[m] && d.composition[m * n + k] == d.target[m]) {
        d.inverse[m] = k;
        break;
      }
  }
  Groupoid out(std::move(d));
  ValidationReport rep = out.validate();
  if (!rep.ok()) {
    for (auto& v : rep.violations) v = "groupoid: " + v;
    throw ValidationFailure(std::move(rep));
  }
  return out;
}

std::vector<BasisElement> parse_basis(const json& b, const Groupoid& g, const std::string& where) {
  std::vector<BasisElement> out;
  std::vector<std::string> names;
  for (std::size_t m = 0; m < g.size(); ++m) names.push_back(g.name(Morphism{static_cast<std::uint32_t>(m)}));
  const NameIndex deg("morphism", names);
  if (!b.is_array()) throw DocumentError(where + " basis must be an array");
  for (const auto& e : b) {
    require_keys(e, where + " basis element", {"name", "degree"});
    out.push_back({as_string(e.at("name"), "basis name"), Morphism{static_cast<std::uint32_t>(deg(e.at("degree")))}});
  }
  return out;
}

std::vector<std::string> names_of(const std::vector<BasisElement>& basis) {
  std::vector<std::string> out;
  for (const auto& b : basis) out.push_back(b.name);
  return out;
}

// Each table entry on its own line, the rest as a compact JSON value.
void write_value(std::ostringstream& os, const ojson& v, int indent);

void write_array(std::ostringstream& os, const ojson& a, int indent) {
  if (a.empty()) {
    os << "[]";
    return;
  }
  const std::string pad(indent + 2, ' ');
  os << "[\n";
  for (std::size_t k = 0; k < a.size(); ++k) {
    os << pad;
    if (a[k].is_object() && !a[k].empty() && a[k].contains("action"))
      write_value(os, a[k], indent + 2);
    else
      os << a[k].dump();
    os << (k + 1 < a.size() ? ",\n" : "\n");
  }
  os << std::string(indent, ' ') << "]";
}

void write_value(std::ostringstream& os, const ojson& v, int indent) {
  if (v.is_array()) {
    write_array(os, v, indent);
    return;
  }
  if (!v.is_object() || v.empty()) {
    os << v.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  os << "{\n";
  std::size_t k = 0;
  for (const auto& [key, val] : v.items()) {
    os << pad << json(key).dump() << ": ";
    write_value(os, val, indent + 2);
    os << (++k < v.size() ? ",\n" : "\n");
  }
  os << std::string(indent, ' ') << "}";
}

ojson basis_json(const std::vector<BasisElement>& basis, const Groupoid& g) {
  ojson a = ojson::array();
  for (const auto& b : basis) a.push_back(ojson{{"name", b.name}, {"degree", g.name(b.degree)}});
  return a;
}

ojson sparse_vector(const Vector& v, const std::vector<std::string>& names) {
  ojson a = ojson::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) a.push_back(ojson::array({names[k], v[k]}));
  return a;
}

}  // namespace

Groupoid groupoid_from_builder(const std::string& builder) {
  if (builder == "trivial") return trivial_groupoid();
  const auto colon = builder.find(':');
  if (colon == std::string::npos) throw DocumentError("unknown groupoid builder '" + builder + "'");
  const std::string kind = builder.substr(0, colon), arg = builder.substr(colon + 1);
  if (kind == "pair") {
    std::vector<std::string> labels;
    if (!arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const std::uint32_t n = parse_u32(arg, "pair size");
      for (std::uint32_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    } else {
      labels = split(arg, ',');
    }
    if (labels.empty()) throw DocumentError("pair groupoid needs at least one object");
    try {
      return pair_groupoid(labels);
    } catch (const InputError& e) {
      throw DocumentError(e.what());
    }
  }
  if (kind == "group") {
    std::vector<std::vector<std::uint32_t>> table;
    if (arg.rfind("Z/", 0) == 0) {
      table = cyclic_group_table(parse_u32(arg.substr(2), "cyclic group order"));
    } else {
      for (const auto& row : split(arg, ';')) {
        std::vector<std::uint32_t> r;
        for (const auto& x : split(row, ',')) r.push_back(parse_u32(x, "group table entry"));
        table.push_back(std::move(r));
      }
    }
    try {
      return group_groupoid(table);
    } catch (const InputError& e) {
      throw DocumentError(e.what());
    }
  }
  throw DocumentError("unknown groupoid builder '" + builder + "'");
}

const GradedModule& RingDocument::module(const std::string& name) const {
  for (const auto& m : modules)
    if (m.name == name) return m.module;
  throw InputError("no module named '" + name + "'");
}

bool operator==(const RingDocument& a, const RingDocument& b) {
  if (a.builder != b.builder || !(*a.ring == *b.ring) || a.modules.size() != b.modules.size()) return false;
  for (std::size_t k = 0; k < a.modules.size(); ++k)
    if (a.modules[k].name != b.modules[k].name || !(a.modules[k].module == b.modules[k].module)) return false;
  return true;
}

RingDocument make_document(RingPtr ring, std::string builder, std::vector<ModuleEntry> modules) {
  if (!builder.empty() && !(groupoid_from_builder(builder) == ring->groupoid()))
    throw InputError("builder '" + builder + "' does not produce the ring's groupoid");
  RingDocument d;
  d.builder = std::move(builder);
  d.ring = std::move(ring);
  d.modules = std::move(modules);
  return d;
}

RingDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  try {
    require_keys(j, "document", {"prime", "groupoid", "basis", "products", "units"}, {"modules"});
    if (!j.at("prime").is_number_unsigned()) throw DocumentError("prime must be a positive integer");
    const std::uint64_t p64 = j.at("prime").get<std::uint64_t>();
    if (p64 > PrimeField::kMaxPrime || !is_prime(p64))
      throw DocumentError("prime " + std::to_string(p64) + " is not a prime below 2^16");
    const auto p = static_cast<std::uint32_t>(p64);
    const PrimeField f(p);

    RingDocument doc;
    const json& g = j.at("groupoid");
    Groupoid groupoid = parse_groupoid(g);
    if (g.contains("builder")) doc.builder = g.at("builder").get<std::string>();

    auto basis = parse_basis(j.at("basis"), groupoid, "ring");
    const std::size_t n = basis.size();
    const NameIndex bidx("basis element", names_of(basis));
    std::vector<Vector> products(n * n, Vector(n, 0));
    for (const auto& t : array_at(j, "products", "document")) {
      if (!t.is_array() || t.size() != 4) throw DocumentError("product entries are [left, right, result, coefficient]");
      const std::size_t a = bidx(t[0]), b = bidx(t[1]), c = bidx(t[2]);
      products[a * n + b][c] = f.add(products[a * n + b][c], as_coefficient(t[3], f, "product coefficient"));
    }
    std::map<Morphism, Vector> units;
    const json& u = j.at("units");
    if (!u.is_object()) throw DocumentError("units must be an object keyed by object name");
    for (const auto& [obj, entries] : u.items()) {
      const auto e = groupoid.try_find(obj);
      if (!e) throw DocumentError("unknown object '" + obj + "' in units");
      Vector v(n, 0);
      if (!entries.is_array()) throw DocumentError("unit of " + obj + " must be an array");
      for (const auto& t : entries) {
        if (!t.is_array() || t.size() != 2) throw DocumentError("unit entries are [basis, coefficient]");
        const std::size_t k = bidx(t[0]);
        v[k] = f.add(v[k], as_coefficient(t[1], f, "unit coefficient"));
      }
      units[*e] = std::move(v);
    }
    try {
      doc.ring = std::make_shared<const GradedRing>(groupoid, p, std::move(basis), std::move(products), std::move(units));
    } catch (const InputError& e) {
      throw DocumentError(e.what());
    }

    if (j.contains("modules")) {
      std::vector<std::string> seen;
      for (const auto& m : array_at(j, "modules", "document")) {
        require_keys(m, "module", {"name", "basis", "action"});
        const std::string name = as_string(m.at("name"), "module name");
        if (std::find(seen.begin(), seen.end(), name) != seen.end()) throw DocumentError("duplicate module " + name);
        seen.push_back(name);
        auto mb = parse_basis(m.at("basis"), groupoid, "module " + name);
        const std::size_t d = mb.size();
        const NameIndex midx("element of module " + name, names_of(mb));
        std::vector<Matrix> action(n, Matrix(p, d, d));
        for (const auto& t : array_at(m, "action", "module " + name)) {
          if (!t.is_array() || t.size() != 4) throw DocumentError("action entries are [m, b, m', coefficient]");
          const std::size_t i = midx(t[0]), b = bidx(t[1]), k = midx(t[2]);
          action[b].at(i, k) = f.add(action[b](i, k), as_coefficient(t[3], f, "action coefficient"));
        }
        try {
          doc.modules.push_back({name, GradedModule(doc.ring, std::move(mb), std::move(action))});
        } catch (const InputError& e) {
          throw DocumentError(e.what());
        }
      }
    }
    return doc;
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed document: ") + e.what());
  }
}

std::string emit_document(const RingDocument& doc) {
  const GradedRing& r = *doc.ring;
  const Groupoid& g = r.groupoid();
  const auto names = names_of(r.basis());
  ojson out;
  out["prime"] = r.prime();
  if (!doc.builder.empty()) {
    out["groupoid"] = ojson{{"builder", doc.builder}};
  } else {
    ojson ms = ojson::array(), comp = ojson::array();
    const std::size_t n = g.size();
    for (std::uint32_t m = 0; m < n; ++m)
      ms.push_back(ojson{{"name", g.name(Morphism{m})},
                         {"source", g.name(g.source(Morphism{m}))},
                         {"target", g.name(g.target(Morphism{m}))}});
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        if (g.is_object(Morphism{a}) || g.is_object(Morphism{b})) continue;
        if (auto c = g.compose(Morphism{a}, Morphism{b}))
          comp.push_back(ojson::array({g.name(Morphism{a}), g.name(Morphism{b}), g.name(*c)}));
      }
    out["groupoid"] = ojson{{"morphisms", ms}, {"composition", comp}};
  }
  out["basis"] = basis_json(r.basis(), g);
  ojson prods = ojson::array();
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) {
      const Vector& v = r.product(i, j);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) prods.push_back(ojson::array({names[i], names[j], names[k], v[k]}));
    }
  out["products"] = prods;
  ojson units = ojson::object();
  for (const auto& [e, v] : r.units()) units[g.name(e)] = sparse_vector(v, names);
  out["units"] = units;
  if (!doc.modules.empty()) {
    ojson mods = ojson::array();
    for (const auto& [name, m] : doc.modules) {
      const auto mnames = names_of(m.basis());
      ojson act = ojson::array();
      for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t b = 0; b < r.dim(); ++b)
          for (std::size_t k = 0; k < m.dim(); ++k)
            if (m.action(b)(i, k) != 0) act.push_back(ojson::array({mnames[i], names[b], mnames[k], m.action(b)(i, k)}));
      mods.push_back(ojson{{"name", name}, {"basis", basis_json(m.basis(), g)}, {"action", act}});
    }
    out["modules"] = mods;
  }
  std::ostringstream os;
  write_value(os, out, 0);
  os << "\n";
  return os.str();
}

ValidationReport validate_document(const RingDocument& doc) {
  ValidationReport rep;
  for (const auto& v : doc.ring->groupoid().validate().violations) rep.add("groupoid: " + v);
  if (!rep.ok()) return rep;
  for (const auto& v : doc.ring->validate().violations) rep.add("ring: " + v);
  for (const auto& [name, m] : doc.modules)
    for (const auto& v : m.validate().violations) rep.add("module " + name + ": " + v);
  return rep;
}

}  // namespace grgrad
