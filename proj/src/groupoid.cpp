#include "grgrad/groupoid.hpp"

#include <algorithm>

#include "grgrad/errors.hpp"

namespace grgrad {

Groupoid::Groupoid(Data data) : data_(std::move(data)) {
  const std::size_t n = data_.names.size();
  if (data_.source.size() != n || data_.target.size() != n || data_.inverse.size() != n ||
      data_.composition.size() != n * n)
    throw InputError("groupoid tables have inconsistent sizes");
  for (std::size_t m = 0; m < n; ++m) {
    if (data_.source[m] >= n || data_.target[m] >= n)
      throw InputError("groupoid morphism " + data_.names[m] + " has an out-of-range endpoint");
    if (data_.inverse[m] >= n)
      throw InputError("groupoid morphism " + data_.names[m] + " has an out-of-range inverse");
    if (data_.source[m] == m) objects_.push_back(Morphism{static_cast<std::uint32_t>(m)});
  }
  for (auto c : data_.composition)
    if (c != kUndefined && c >= n) throw InputError("groupoid composition entry out of range");
}

void Groupoid::check(Morphism m) const {
  if (m.id >= size()) throw InputError("unknown morphism id " + std::to_string(m.id));
}

bool Groupoid::is_object(Morphism m) const {
  check(m);
  return data_.source[m.id] == m.id;
}

Morphism Groupoid::source(Morphism m) const {
  check(m);
  return Morphism{data_.source[m.id]};
}

Morphism Groupoid::target(Morphism m) const {
  check(m);
  return Morphism{data_.target[m.id]};
}

std::optional<Morphism> Groupoid::compose(Morphism delta, Morphism gamma) const {
  check(delta);
  check(gamma);
  const auto c = data_.composition[delta.id * size() + gamma.id];
  if (c == kUndefined) return std::nullopt;
  return Morphism{c};
}

Morphism Groupoid::inverse(Morphism m) const {
  check(m);
  return Morphism{data_.inverse[m.id]};
}

const std::string& Groupoid::name(Morphism m) const {
  check(m);
  return data_.names[m.id];
}

std::optional<Morphism> Groupoid::try_find(const std::string& name) const {
  auto it = std::find(data_.names.begin(), data_.names.end(), name);
  if (it == data_.names.end()) return std::nullopt;
  return Morphism{static_cast<std::uint32_t>(it - data_.names.begin())};
}

Morphism Groupoid::find(const std::string& name) const {
  auto m = try_find(name);
  if (!m) throw InputError("unknown morphism '" + name + "'");
  return *m;
}

ValidationReport Groupoid::validate() const {
  ValidationReport rep;
  const std::size_t n = size();
  const auto& d = data_;
  auto nm = [&](std::uint32_t m) { return d.names[m]; };
  auto comp = [&](std::uint32_t a, std::uint32_t b) { return d.composition[a * n + b]; };

  for (std::uint32_t m = 0; m < n; ++m) {
    for (auto e : {d.source[m], d.target[m]})
      if (d.source[e] != e || d.target[e] != e)
        rep.add("endpoint " + nm(e) + " of " + nm(m) + " is not an object");
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto c = comp(a, b);
      const bool composable = d.source[a] == d.target[b];
      if (composable && c == kUndefined)
        rep.add("composition " + nm(a) + "*" + nm(b) + " should be defined");
      else if (!composable && c != kUndefined)
        rep.add("composition " + nm(a) + "*" + nm(b) + " should be undefined");
      else if (composable && (d.source[c] != d.source[b] || d.target[c] != d.target[a]))
        rep.add("composition " + nm(a) + "*" + nm(b) + " has wrong endpoints");
    }
  }
  if (!rep.ok()) return rep;

  for (std::uint32_t g = 0; g < n; ++g) {
    if (comp(d.target[g], g) != g) rep.add("left identity law fails at " + nm(g));
    if (comp(g, d.source[g]) != g) rep.add("right identity law fails at " + nm(g));
    const auto inv = d.inverse[g];
    if (comp(inv, g) != d.source[g] || comp(g, inv) != d.target[g])
      rep.add("inverse law fails at " + nm(g) + " (inverse recorded as " + nm(inv) + ")");
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto ab = comp(a, b);
      if (ab == kUndefined) continue;
      for (std::uint32_t c = 0; c < n; ++c) {
        const auto bc = comp(b, c);
        if (bc == kUndefined) continue;
        if (comp(ab, c) != comp(a, bc))
          rep.add("associativity fails at (" + nm(a) + "," + nm(b) + "," + nm(c) + ")");
      }
    }
  return rep;
}

// ---------------------------------------------------------------- builders

Groupoid pair_groupoid(const std::vector<std::string>& labels) {
  if (labels.empty()) throw InputError("pair groupoid needs a nonempty index set");
  const auto k = static_cast<std::uint32_t>(labels.size());
  const std::uint32_t n = k * k;
  auto id = [k](std::uint32_t i, std::uint32_t j) { return i * k + j; };
  Groupoid::Data d;
  d.composition.assign(std::size_t{n} * n, Groupoid::kUndefined);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) {
      d.names.push_back("(" + labels[i] + "," + labels[j] + ")");
      d.source.push_back(id(j, j));
      d.target.push_back(id(i, i));
      d.inverse.push_back(id(j, i));
    }
  for (std::uint32_t z = 0; z < k; ++z)
    for (std::uint32_t y = 0; y < k; ++y)
      for (std::uint32_t x = 0; x < k; ++x) d.composition[id(z, y) * n + id(y, x)] = id(z, x);
  return Groupoid(std::move(d));
}

std::uint32_t group_identity(const std::vector<std::vector<std::uint32_t>>& table) {
  const auto n = static_cast<std::uint32_t>(table.size());
  if (n == 0) throw InputError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table is not square");
    for (auto x : row)
      if (x >= n) throw InputError("group table entry out of range");
  }
  std::optional<std::uint32_t> identity;
  for (std::uint32_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw InputError("group table has no identity element");
  for (std::uint32_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::uint32_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = table[a][b] == *identity && table[b][a] == *identity;
    if (!has_inverse) throw InputError("group table element " + std::to_string(a) + " has no inverse");
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InputError("group table is not associative");
  }
  return *identity;
}

namespace {

std::uint32_t group_inverse(const std::vector<std::vector<std::uint32_t>>& table,
                            std::uint32_t e, std::uint32_t a) {
  for (std::uint32_t b = 0; b < table.size(); ++b)
    if (table[a][b] == e) return b;
  throw InputError("group element without inverse");
}

std::vector<std::string> element_names(std::size_t n, std::vector<std::string> names) {
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (names.size() != n) throw InputError("group element name count mismatch");
  return names;
}

}  // namespace

Groupoid group_groupoid(const std::vector<std::vector<std::uint32_t>>& table,
                        std::vector<std::string> names) {
  const std::uint32_t e = group_identity(table);
  const auto n = static_cast<std::uint32_t>(table.size());
  names = element_names(n, std::move(names));
  Groupoid::Data d;
  d.names = names;
  d.source.assign(n, e);
  d.target.assign(n, e);
  d.composition.resize(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    d.inverse.push_back(group_inverse(table, e, a));
    for (std::uint32_t b = 0; b < n; ++b) d.composition[a * n + b] = table[a][b];
  }
  return Groupoid(std::move(d));
}

Groupoid product_groupoid(const std::vector<std::string>& labels,
                          const std::vector<std::vector<std::uint32_t>>& table,
                          std::vector<std::string> names) {
  if (labels.empty()) throw InputError("product groupoid needs a nonempty index set");
  const std::uint32_t e = group_identity(table);
  const auto k = static_cast<std::uint32_t>(labels.size());
  const auto g = static_cast<std::uint32_t>(table.size());
  names = element_names(g, std::move(names));
  const std::uint32_t n = k * g * k;
  auto id = [k, g](std::uint32_t y, std::uint32_t a, std::uint32_t x) { return (y * g + a) * k + x; };
  Groupoid::Data d;
  d.composition.assign(std::size_t{n} * n, Groupoid::kUndefined);
  for (std::uint32_t y = 0; y < k; ++y)
    for (std::uint32_t a = 0; a < g; ++a)
      for (std::uint32_t x = 0; x < k; ++x) {
        d.names.push_back("(" + labels[y] + "," + names[a] + "," + labels[x] + ")");
        d.source.push_back(id(x, e, x));
        d.target.push_back(id(y, e, y));
        d.inverse.push_back(id(x, group_inverse(table, e, a), y));
      }
  for (std::uint32_t z = 0; z < k; ++z)
    for (std::uint32_t h = 0; h < g; ++h)
      for (std::uint32_t y = 0; y < k; ++y)
        for (std::uint32_t a = 0; a < g; ++a)
          for (std::uint32_t x = 0; x < k; ++x)
            d.composition[id(z, h, y) * n + id(y, a, x)] = id(z, table[h][a], x);
  return Groupoid(std::move(d));
}

Groupoid trivial_groupoid() { return group_groupoid({{0}}, {"e"}); }

std::vector<std::vector<std::uint32_t>> cyclic_group_table(std::uint32_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

}  // namespace grgrad
