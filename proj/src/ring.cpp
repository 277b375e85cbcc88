#include "grgrad/ring.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "grgrad/errors.hpp"

namespace grgrad {

// ---------------------------------------------------------------- GradedSubspace

std::optional<Morphism> homogeneous_degree(const std::vector<Morphism>& degrees,
                                           std::span<const Elem> v) {
  std::optional<Morphism> deg;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!deg)
      deg = degrees[i];
    else if (*deg != degrees[i])
      return std::nullopt;
  }
  return deg;
}

GradedSubspace::GradedSubspace(Subspace space, const std::vector<Morphism>& ambient_degrees)
    : space_(std::move(space)) {
  if (ambient_degrees.size() != space_.ambient())
    throw InputError("degree list does not match the ambient dimension");
  for (std::size_t r = 0; r < space_.dim(); ++r) {
    auto d = homogeneous_degree(ambient_degrees, space_.basis().row(r));
    if (!d) throw InputError("subspace is not spanned by homogeneous vectors");
    degrees_.push_back(*d);
  }
}

std::map<Morphism, std::size_t> GradedSubspace::dims_by_degree() const {
  std::map<Morphism, std::size_t> out;
  for (auto d : degrees_) ++out[d];
  return out;
}

// ---------------------------------------------------------------- GradedRing

GradedRing::GradedRing(Groupoid groupoid, std::uint32_t p, std::vector<BasisElement> basis,
                       std::vector<Vector> products, std::map<Morphism, Vector> units)
    : groupoid_(std::move(groupoid)),
      field_(p),
      basis_(std::move(basis)),
      products_(std::move(products)),
      units_(std::move(units)) {
  const std::size_t n = basis_.size();
  if (products_.size() != n * n) throw InputError("product table must have dim^2 entries");
  for (auto& v : products_) {
    if (v.size() != n) throw InputError("product vector has wrong length");
    for (auto& x : v) x %= p;
  }
  for (const auto& b : basis_) {
    if (b.degree.id >= groupoid_.size())
      throw InputError("basis element " + b.name + " has an unknown degree");
    degrees_.push_back(b.degree);
  }
  {
    std::set<std::string> names;
    for (const auto& b : basis_)
      if (!names.insert(b.name).second) throw InputError("duplicate basis name " + b.name);
  }
  for (auto& [e, v] : units_) {
    if (!groupoid_.is_object(e)) throw InputError("unit attached to a non-object morphism");
    if (v.size() != n) throw InputError("unit vector has wrong length");
    for (auto& x : v) x %= p;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Matrix rm(p, n, n), lm(p, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& pij = products_[i * n + j];
      const auto& pji = products_[j * n + i];
      for (std::size_t k = 0; k < n; ++k) {
        rm.at(i, k) = pij[k];
        lm.at(i, k) = pji[k];
      }
    }
    right_mult_.push_back(std::move(rm));
    left_mult_.push_back(std::move(lm));
  }
}

std::size_t GradedRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  throw InputError("unknown ring basis element '" + name + "'");
}

Vector GradedRing::multiply(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw InputError("ring element has wrong length");
  Vector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      vec_axpy(field_, out, field_.mul(a[i], b[j]), products_[i * n + j]);
    }
  }
  return out;
}

Matrix GradedRing::right_mult_by(const Vector& a) const {
  Matrix m(prime(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    if (a[j] != 0) m = m + right_mult_[j].scaled(a[j]);
  return m;
}

Matrix GradedRing::left_mult_by(const Vector& a) const {
  Matrix m(prime(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (a[i] != 0) m = m + left_mult_[i].scaled(a[i]);
  return m;
}

Vector GradedRing::unit(Morphism e) const {
  if (!groupoid_.is_object(e)) throw InputError("unit requested for a non-object morphism");
  auto it = units_.find(e);
  if (it == units_.end()) return Vector(dim(), 0);
  return it->second;
}

std::vector<Morphism> GradedRing::support_objects() const {
  std::vector<Morphism> out;
  for (auto e : groupoid_.objects())
    if (!vec_is_zero(unit(e))) out.push_back(e);
  return out;
}

std::vector<std::size_t> GradedRing::indices_of_degree(Morphism g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degrees_[i] == g) out.push_back(i);
  return out;
}

Subspace GradedRing::component(Morphism g) const {
  std::vector<Vector> vs;
  for (auto i : indices_of_degree(g)) vs.push_back(unit_vector(dim(), i));
  return Subspace::span(prime(), dim(), vs);
}

std::vector<Morphism> GradedRing::support() const {
  std::set<Morphism> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

ValidationReport GradedRing::validate() const {
  ValidationReport rep;
  auto gv = groupoid_.validate();
  for (auto& v : gv.violations) rep.add("groupoid: " + v);
  if (!rep.ok()) return rep;
  const std::size_t n = dim();
  auto nm = [&](std::size_t i) { return basis_[i].name + "[" + std::to_string(i) + "]"; };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& pr = products_[i * n + j];
      const auto st = groupoid_.compose(degrees_[i], degrees_[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (pr[k] == 0) continue;
        if (!st || degrees_[k] != *st) {
          rep.add("grading violated: " + nm(i) + "*" + nm(j) + " has support on " + nm(k));
          break;
        }
      }
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = products_[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        // (b_i b_j) b_k  vs  b_i (b_j b_k)
        Vector lhs = vec_times(ij, right_mult_[k]);
        Vector rhs = vec_times(products_[j * n + k], left_mult_[i]);
        if (lhs != rhs) rep.add("associativity violated at (" + nm(i) + "," + nm(j) + "," + nm(k) + ")");
      }
    }

  for (const auto& [e, u] : units_) {
    for (std::size_t k = 0; k < n; ++k)
      if (u[k] != 0 && degrees_[k] != e) {
        rep.add("unit 1_" + groupoid_.name(e) + " has support outside degree " + groupoid_.name(e));
        break;
      }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vector bi = unit_vector(n, i);
    const Morphism r = groupoid_.target(degrees_[i]);
    const Morphism d = groupoid_.source(degrees_[i]);
    if (multiply(unit(r), bi) != bi)
      rep.add("unit law violated: 1_" + groupoid_.name(r) + "*" + nm(i) + " != " + nm(i));
    if (multiply(bi, unit(d)) != bi)
      rep.add("unit law violated: " + nm(i) + "*1_" + groupoid_.name(d) + " != " + nm(i));
  }
  return rep;
}

// ---------------------------------------------------------------- algebras

bool is_ungraded(const GradedRing& a) { return a.groupoid().size() == 1; }

GradedRing make_algebra(std::uint32_t p, std::vector<std::string> names,
                        const std::vector<std::vector<Vector>>& products, Vector unit) {
  const std::size_t n = names.size();
  if (products.size() != n) throw InputError("algebra product table has wrong size");
  std::vector<BasisElement> basis;
  for (auto& nm : names) basis.push_back({std::move(nm), Morphism{0}});
  std::vector<Vector> flat;
  for (const auto& row : products) {
    if (row.size() != n) throw InputError("algebra product table has wrong size");
    for (const auto& v : row) flat.push_back(v);
  }
  std::map<Morphism, Vector> units{{Morphism{0}, std::move(unit)}};
  return GradedRing(trivial_groupoid(), p, std::move(basis), std::move(flat), std::move(units));
}

GradedRing field_algebra(std::uint32_t p) { return make_algebra(p, {"1"}, {{{1}}}, {1}); }

GradedRing truncated_polynomial_algebra(std::uint32_t p, std::size_t k) {
  if (k == 0) throw InputError("F_p[x]/(x^0) is the zero ring");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  std::vector<std::vector<Vector>> prod(k, std::vector<Vector>(k, Vector(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i + j < k) prod[i][j][i + j] = 1;
  return make_algebra(p, std::move(names), prod, unit_vector(k, 0));
}

GradedRing matrix_algebra(std::uint32_t p, std::size_t n) {
  std::vector<std::string> names;
  const std::size_t d = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<std::vector<Vector>> prod(d, std::vector<Vector>(d, Vector(d, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) prod[i * n + j][j * n + l][i * n + l] = 1;
  Vector unit(d, 0);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return make_algebra(p, std::move(names), prod, unit);
}

// ---------------------------------------------------------------- posets

Poset Poset::chain(std::size_t n) {
  Poset P;
  for (std::size_t i = 0; i < n; ++i) P.labels.push_back(std::to_string(i + 1));
  P.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) P.leq[i][j] = true;
  return P;
}

Poset Poset::antichain(std::size_t n) {
  Poset P;
  for (std::size_t i = 0; i < n; ++i) P.labels.push_back(std::to_string(i + 1));
  P.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) P.leq[i][i] = true;
  return P;
}

Poset Poset::from_hasse(std::vector<std::string> labels,
                        const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  Poset P;
  const std::size_t n = labels.size();
  P.labels = std::move(labels);
  P.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) P.leq[i][i] = true;
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw InputError("Hasse edge refers to an unknown element");
    P.leq[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (P.leq[i][k] && P.leq[k][j]) P.leq[i][j] = true;
  P.validate();
  return P;
}

void Poset::validate() const {
  const std::size_t n = labels.size();
  if (leq.size() != n) throw InputError("poset relation has wrong size");
  for (const auto& row : leq)
    if (row.size() != n) throw InputError("poset relation has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i][i]) throw InputError("poset relation is not reflexive at " + labels[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw InputError("poset relation is not antisymmetric at " + labels[i] + "," + labels[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k])
          throw InputError("poset relation is not transitive at " + labels[i] + "," + labels[j] + "," +
                           labels[k]);
    }
  }
}

bool Poset::is_total() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (!leq[i][j] && !leq[j][i]) return false;
  return true;
}

// ---------------------------------------------------------------- matrix-type builders

namespace {

void require_algebra(const GradedRing& a) {
  if (!is_ungraded(a)) throw InputError("coefficient ring must be an ungraded (one-morphism) algebra");
  if (vec_is_zero(a.unit(Morphism{0}))) throw InputError("coefficient algebra must be unital");
}

std::string unit_label(const std::string& i, const std::string& j, bool compact) {
  return compact ? "E" + i + j : "E(" + i + "," + j + ")";
}

// M_n(A) restricted to `keep`, graded by the pair groupoid on block labels.
GradedRing matrix_units_ring(const GradedRing& a, const std::vector<std::string>& index_labels,
                             const std::vector<std::string>& block_labels,
                             const std::vector<std::size_t>& block_of,
                             const std::vector<std::vector<bool>>& keep) {
  require_algebra(a);
  const std::size_t n = index_labels.size();
  const std::size_t da = a.dim();
  const Groupoid g = pair_groupoid(block_labels);
  const std::size_t nb = block_labels.size();
  bool compact = std::all_of(index_labels.begin(), index_labels.end(),
                             [](const std::string& s) { return s.size() == 1; });

  std::vector<BasisElement> basis;
  std::vector<std::vector<std::size_t>> pos(n * n);  // (i,j) -> basis indices per a-basis element
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!keep[i][j]) continue;
      const Morphism deg{static_cast<std::uint32_t>(block_of[i] * nb + block_of[j])};
      for (std::size_t k = 0; k < da; ++k) {
        pos[i * n + j].push_back(basis.size());
        std::string u = unit_label(index_labels[i], index_labels[j], compact);
        basis.push_back({da == 1 ? u : a.basis()[k].name + "*" + u, deg});
      }
    }
  const std::size_t dim = basis.size();
  std::vector<Vector> products(dim * dim, Vector(dim, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!keep[i][j]) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (!keep[j][l]) continue;
        if (!keep[i][l]) throw InputError("matrix support is not closed under multiplication");
        for (std::size_t s = 0; s < da; ++s)
          for (std::size_t t = 0; t < da; ++t) {
            auto& out = products[pos[i * n + j][s] * dim + pos[j * n + l][t]];
            const auto& ab = a.product(s, t);
            for (std::size_t k = 0; k < da; ++k) out[pos[i * n + l][k]] = ab[k];
          }
      }
    }
  std::map<Morphism, Vector> units;
  const Vector& one = a.unit(Morphism{0});
  for (std::size_t b = 0; b < nb; ++b) {
    Vector u(dim, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (block_of[i] != b) continue;
      if (!keep[i][i]) throw InputError("matrix support must contain the diagonal");
      for (std::size_t k = 0; k < da; ++k) u[pos[i * n + i][k]] = one[k];
    }
    units.emplace(Morphism{static_cast<std::uint32_t>(b * nb + b)}, std::move(u));
  }
  return GradedRing(g, a.prime(), std::move(basis), std::move(products), std::move(units));
}

std::vector<std::size_t> identity_blocks(std::size_t n) {
  std::vector<std::size_t> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = i;
  return b;
}

}  // namespace

GradedRing build_pair_matrix_ring(const GradedRing& a, const std::vector<std::string>& index) {
  if (index.empty()) throw InputError("matrix ring needs a nonempty index set");
  const std::size_t n = index.size();
  return matrix_units_ring(a, index, index, identity_blocks(n),
                           std::vector<std::vector<bool>>(n, std::vector<bool>(n, true)));
}

GradedRing build_pair_matrix_ring(const GradedRing& a, std::size_t n) {
  return build_pair_matrix_ring(a, Poset::chain(n).labels);
}

GradedRing build_ut(const GradedRing& a, const Poset& poset) {
  poset.validate();
  if (poset.size() == 0) throw InputError("UT ring needs a nonempty poset");
  return matrix_units_ring(a, poset.labels, poset.labels, identity_blocks(poset.size()), poset.leq);
}

GradedRing build_block_matrix_ring(const GradedRing& a, const std::vector<std::string>& block_labels,
                                   const std::vector<std::size_t>& block_of) {
  if (block_of.empty()) throw InputError("block matrix ring needs at least one index");
  std::vector<bool> used(block_labels.size(), false);
  for (auto b : block_of) {
    if (b >= block_labels.size()) throw InputError("block index out of range");
    used[b] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw InputError("every block must contain at least one index");
  const std::size_t n = block_of.size();
  return matrix_units_ring(a, Poset::chain(n).labels, block_labels, block_of,
                           std::vector<std::vector<bool>>(n, std::vector<bool>(n, true)));
}

GradedRing groupoid_algebra(const Groupoid& g, std::uint32_t p) {
  const std::size_t n = g.size();
  std::vector<BasisElement> basis;
  for (std::uint32_t m = 0; m < n; ++m) basis.push_back({g.name(Morphism{m}), Morphism{m}});
  std::vector<Vector> products(n * n, Vector(n, 0));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (auto c = g.compose(Morphism{a}, Morphism{b})) products[a * n + b][c->id] = 1;
  std::map<Morphism, Vector> units;
  for (auto e : g.objects()) units.emplace(e, unit_vector(n, e.id));
  return GradedRing(g, p, std::move(basis), std::move(products), std::move(units));
}

// ---------------------------------------------------------------- category ring

void validate_algebra_module(const GradedRing& a, const AlgebraModule& m) {
  require_algebra(a);
  if (m.action.size() != a.dim())
    throw InputError("module " + m.name + " must give one action matrix per algebra basis element");
  const std::size_t d = m.dim();
  for (const auto& x : m.action)
    if (x.rows() != d || x.cols() != d || x.prime() != a.prime())
      throw InputError("module " + m.name + " has a malformed action matrix");
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t l = 0; l < a.dim(); ++l) {
      Matrix expect(a.prime(), d, d);
      const auto& c = a.product(k, l);
      for (std::size_t t = 0; t < a.dim(); ++t)
        if (c[t] != 0) expect = expect + m.action[t].scaled(c[t]);
      if (m.action[k] * m.action[l] != expect)
        throw InputError("module " + m.name + " violates the relation for " + a.basis()[k].name + "*" +
                         a.basis()[l].name);
    }
  Matrix one(a.prime(), d, d);
  const auto& u = a.unit(Morphism{0});
  for (std::size_t t = 0; t < a.dim(); ++t)
    if (u[t] != 0) one = one + m.action[t].scaled(u[t]);
  if (one != Matrix::identity(a.prime(), d)) throw InputError("module " + m.name + " is not unital");
}

std::vector<Matrix> algebra_module_homs(const GradedRing& a, const AlgebraModule& src,
                                        const AlgebraModule& dst) {
  return intertwiners(a.prime(), src.action, dst.action);
}

GradedRing build_category_ring(const GradedRing& a, const std::vector<AlgebraModule>& modules) {
  require_algebra(a);
  if (modules.empty()) throw InputError("category ring needs at least one module");
  std::vector<std::string> labels;
  for (const auto& m : modules) {
    validate_algebra_module(a, m);
    labels.push_back(m.name);
  }
  const std::size_t k = modules.size();
  const std::uint32_t p = a.prime();
  const Groupoid g = pair_groupoid(labels);

  // hom[i][j] = Hom(M_j, M_i), flattened.
  std::vector<std::vector<Subspace>> hom(k, std::vector<Subspace>(k));
  std::vector<std::vector<std::size_t>> offset(k, std::vector<std::size_t>(k));
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Vector> flat;
      for (const auto& h : algebra_module_homs(a, modules[j], modules[i])) flat.push_back(flatten(h));
      hom[i][j] = Subspace::span(p, modules[j].dim() * modules[i].dim(), flat);
      offset[i][j] = basis.size();
      const Morphism deg{static_cast<std::uint32_t>(i * k + j)};
      for (std::size_t t = 0; t < hom[i][j].dim(); ++t)
        basis.push_back({"h(" + labels[j] + "->" + labels[i] + ")" + std::to_string(t), deg});
    }
  const std::size_t dim = basis.size();
  auto as_matrix = [&](std::size_t i, std::size_t j, std::size_t t) {
    return unflatten(p, modules[j].dim(), modules[i].dim(), hom[i][j].basis().row(t));
  };
  std::vector<Vector> products(dim * dim, Vector(dim, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        // f in Hom(M_j,M_i), g in Hom(M_l,M_j): f*g = f o g, matrix G_g * G_f.
        for (std::size_t s = 0; s < hom[i][j].dim(); ++s)
          for (std::size_t t = 0; t < hom[j][l].dim(); ++t) {
            Matrix comp = as_matrix(j, l, t) * as_matrix(i, j, s);
            auto coords = hom[i][l].coordinates(flatten(comp));
            if (!coords) throw ConsistencyError("composition left the hom space");
            auto& out = products[(offset[i][j] + s) * dim + offset[j][l] + t];
            for (std::size_t c = 0; c < coords->size(); ++c) out[offset[i][l] + c] = (*coords)[c];
          }
  std::map<Morphism, Vector> units;
  for (std::size_t i = 0; i < k; ++i) {
    auto coords = hom[i][i].coordinates(flatten(Matrix::identity(p, modules[i].dim())));
    if (!coords) throw ConsistencyError("identity is not an endomorphism");
    Vector u(dim, 0);
    for (std::size_t c = 0; c < coords->size(); ++c) u[offset[i][i] + c] = (*coords)[c];
    units.emplace(Morphism{static_cast<std::uint32_t>(i * k + i)}, std::move(u));
  }
  return GradedRing(g, p, std::move(basis), std::move(products), std::move(units));
}

AlgebraModule free_module(const GradedRing& a, std::size_t rank, std::string name) {
  require_algebra(a);
  if (name.empty()) name = rank == 1 ? "A" : "A^" + std::to_string(rank);
  const std::size_t d = a.dim();
  AlgebraModule m{std::move(name), {}};
  for (std::size_t k = 0; k < d; ++k) {
    Matrix x(a.prime(), d * rank, d * rank);
    const Matrix& rm = a.right_mult(k);
    for (std::size_t b = 0; b < rank; ++b)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) x.at(b * d + i, b * d + j) = rm(i, j);
    m.action.push_back(std::move(x));
  }
  return m;
}

AlgebraModule truncated_cyclic_module(const GradedRing& poly, std::size_t j, std::string name) {
  require_algebra(poly);
  const std::size_t k = poly.dim();
  if (j == 0 || j > k) throw InputError("cyclic quotient length out of range");
  if (name.empty()) name = j == k ? "A" : "A/(x^" + std::to_string(j) + ")";
  AlgebraModule m{std::move(name), {}};
  for (std::size_t t = 0; t < k; ++t) {
    Matrix x(poly.prime(), j, j);
    for (std::size_t s = 0; s < j; ++s)
      if (s + t < j) x.at(s, s + t) = 1;
    m.action.push_back(std::move(x));
  }
  validate_algebra_module(poly, m);
  return m;
}

// ---------------------------------------------------------------- operations

Subspace corner(const GradedRing& r, Morphism e, Morphism f) {
  if (!r.groupoid().is_object(e) || !r.groupoid().is_object(f))
    throw InputError("corner requires two objects");
  const Vector ue = r.unit(e), uf = r.unit(f);
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < r.dim(); ++i)
    vs.push_back(r.multiply(r.multiply(ue, unit_vector(r.dim(), i)), uf));
  return Subspace::span(r.prime(), r.dim(), vs);
}

GradedRing full_subring(const GradedRing& r, const std::vector<Morphism>& objects) {
  const Groupoid& g = r.groupoid();
  std::set<Morphism> objs;
  for (auto e : objects) {
    if (!g.is_object(e)) throw InputError("full_subring: " + std::to_string(e.id) + " is not an object");
    objs.insert(e);
  }
  // full subgroupoid
  std::vector<std::uint32_t> keep, new_id(g.size(), Groupoid::kUndefined);
  for (std::uint32_t m = 0; m < g.size(); ++m)
    if (objs.count(g.source(Morphism{m})) && objs.count(g.target(Morphism{m}))) {
      new_id[m] = static_cast<std::uint32_t>(keep.size());
      keep.push_back(m);
    }
  Groupoid::Data d;
  const std::size_t n = keep.size();
  d.composition.assign(n * n, Groupoid::kUndefined);
  for (std::size_t a = 0; a < n; ++a) {
    const Morphism m{keep[a]};
    d.names.push_back(g.name(m));
    d.source.push_back(new_id[g.source(m).id]);
    d.target.push_back(new_id[g.target(m).id]);
    d.inverse.push_back(new_id[g.inverse(m).id]);
    for (std::size_t b = 0; b < n; ++b) {
      auto c = g.compose(m, Morphism{keep[b]});
      if (c) d.composition[a * n + b] = new_id[c->id];
    }
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < r.dim(); ++i)
    if (new_id[r.degree(i).id] != Groupoid::kUndefined) idx.push_back(i);
  std::vector<BasisElement> basis;
  for (auto i : idx) basis.push_back({r.basis()[i].name, Morphism{new_id[r.degree(i).id]}});
  std::vector<Vector> products;
  for (auto i : idx)
    for (auto j : idx) {
      Vector v;
      for (auto k : idx) v.push_back(r.product(i, j)[k]);
      products.push_back(std::move(v));
    }
  std::map<Morphism, Vector> units;
  for (auto e : objs) {
    Vector full = r.unit(e), v;
    for (auto k : idx) v.push_back(full[k]);
    units.emplace(Morphism{new_id[e.id]}, std::move(v));
  }
  return GradedRing(Groupoid(std::move(d)), r.prime(), std::move(basis), std::move(products),
                    std::move(units));
}

Subspace ideal_closure(const GradedRing& r, const std::vector<Vector>& gens, Side side) {
  Subspace s = Subspace::zero(r.prime(), r.dim());
  std::deque<Vector> work;
  for (const auto& g : gens) {
    if (g.size() != r.dim()) throw InputError("ideal generator has wrong length");
    if (s.insert(g)) work.push_back(g);
  }
  while (!work.empty()) {
    Vector v = std::move(work.front());
    work.pop_front();
    for (std::size_t j = 0; j < r.dim(); ++j) {
      if (side != Side::Left) {
        Vector w = vec_times(v, r.right_mult(j));
        if (s.insert(w)) work.push_back(std::move(w));
      }
      if (side != Side::Right) {
        Vector w = vec_times(v, r.left_mult(j));
        if (s.insert(w)) work.push_back(std::move(w));
      }
    }
  }
  return s;
}

bool is_ideal(const GradedRing& r, const Subspace& s, Side side) {
  for (std::size_t b = 0; b < s.dim(); ++b) {
    const Vector v = s.basis().row_vector(b);
    for (std::size_t j = 0; j < r.dim(); ++j) {
      if (side != Side::Left && !s.contains(vec_times(v, r.right_mult(j)))) return false;
      if (side != Side::Right && !s.contains(vec_times(v, r.left_mult(j)))) return false;
    }
  }
  return true;
}

Matrix quotient_projection(const Subspace& sub) {
  const auto reps = sub.non_pivots();
  Matrix proj(sub.prime(), sub.ambient(), reps.size());
  for (std::size_t i = 0; i < sub.ambient(); ++i) {
    Vector red = sub.reduce(unit_vector(sub.ambient(), i));
    for (std::size_t c = 0; c < reps.size(); ++c) proj.at(i, c) = red[reps[c]];
  }
  return proj;
}

GradedRing quotient_ring(const GradedRing& r, const Subspace& ideal) {
  if (ideal.ambient() != r.dim()) throw InputError("ideal lives in a different ambient space");
  GradedSubspace graded(ideal, r.degrees());  // throws if not graded
  if (!is_ideal(r, ideal, Side::TwoSided)) throw InputError("quotient requires a two-sided ideal");
  const auto reps = ideal.non_pivots();
  const Matrix proj = quotient_projection(ideal);
  std::vector<BasisElement> basis;
  for (auto i : reps) basis.push_back(r.basis()[i]);
  std::vector<Vector> products;
  for (auto i : reps)
    for (auto j : reps) products.push_back(vec_times(r.product(i, j), proj));
  std::map<Morphism, Vector> units;
  for (const auto& [e, u] : r.units()) units.emplace(e, vec_times(u, proj));
  return GradedRing(r.groupoid(), r.prime(), std::move(basis), std::move(products), std::move(units));
}

GradedRing opposite_ring(const GradedRing& r) {
  std::vector<BasisElement> basis = r.basis();
  for (auto& b : basis) b.degree = r.groupoid().inverse(b.degree);
  std::vector<Vector> products;
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) products.push_back(r.product(j, i));
  return GradedRing(r.groupoid(), r.prime(), std::move(basis), std::move(products), r.units());
}

std::optional<Vector> gr_inverse(const GradedRing& r, const Vector& a) {
  if (a.size() != r.dim()) throw InputError("element has wrong length");
  auto deg = homogeneous_degree(r.degrees(), a);
  if (!deg) throw InputError("gr_inverse requires a nonzero homogeneous element");
  const Groupoid& g = r.groupoid();
  const Morphism inv = g.inverse(*deg);
  const auto idx = r.indices_of_degree(inv);
  if (idx.empty()) return std::nullopt;
  const std::size_t n = r.dim();
  Matrix sys(r.prime(), 0, 2 * n);
  for (auto k : idx) {
    const Vector bk = unit_vector(n, k);
    Vector row = r.multiply(a, bk);
    Vector ba = r.multiply(bk, a);
    row.insert(row.end(), ba.begin(), ba.end());
    sys.append_row(row);
  }
  Vector rhs = r.unit(g.target(*deg));
  Vector ud = r.unit(g.source(*deg));
  rhs.insert(rhs.end(), ud.begin(), ud.end());
  auto c = solve_left(sys, rhs);
  if (!c) return std::nullopt;
  Vector b(n, 0);
  for (std::size_t t = 0; t < idx.size(); ++t) b[idx[t]] = (*c)[t];
  return b;
}

std::optional<Vector> right_inverse_in_component(const GradedRing& r, Morphism e, const Vector& x) {
  const auto idx = r.indices_of_degree(e);
  const std::size_t n = r.dim();
  Matrix sys(r.prime(), 0, n);
  for (auto k : idx) sys.append_row(r.multiply(x, unit_vector(n, k)));
  auto c = solve_left(sys, r.unit(e));
  if (!c) return std::nullopt;
  Vector u(n, 0);
  for (std::size_t t = 0; t < idx.size(); ++t) u[idx[t]] = (*c)[t];
  return u;
}

bool same_structure(const GradedRing& a, const GradedRing& b) {
  if (!(a.groupoid() == b.groupoid()) || a.prime() != b.prime() || a.dim() != b.dim()) return false;
  if (a.degrees() != b.degrees() || a.units() != b.units()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.product(i, j) != b.product(i, j)) return false;
  return true;
}

GradedRing component_algebra(const GradedRing& r, Morphism e) {
  if (!r.groupoid().is_object(e)) throw InputError("component_algebra requires an object");
  const auto idx = r.indices_of_degree(e);
  std::vector<std::string> names;
  for (auto i : idx) names.push_back(r.basis()[i].name);
  std::vector<std::vector<Vector>> prod;
  for (auto i : idx) {
    std::vector<Vector> row;
    for (auto j : idx) {
      Vector v;
      for (auto k : idx) v.push_back(r.product(i, j)[k]);
      row.push_back(std::move(v));
    }
    prod.push_back(std::move(row));
  }
  Vector u;
  const Vector full = r.unit(e);
  for (auto k : idx) u.push_back(full[k]);
  return make_algebra(r.prime(), std::move(names), prod, std::move(u));
}

}  // namespace grgrad
