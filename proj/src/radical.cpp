#include "grgrad/radical.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "grgrad/errors.hpp"

namespace grgrad {

// ---------------------------------------------------------------- lattice oracle

namespace {

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    auto x = a.basis().row(r), y = b.basis().row(r);
    if (!std::equal(x.begin(), x.end(), y.begin()))
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
  return false;
}

std::vector<Subspace> distinct_cyclics(const GradedModule& m, std::uint64_t budget) {
  std::unordered_set<Subspace> seen;
  std::vector<Subspace> out;
  for (const auto& v : homogeneous_representatives(m, budget)) {
    Subspace c = spin_space(m, {v});
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), subspace_less);
  return out;
}

std::vector<std::size_t> minimal_indices(const std::vector<Subspace>& cyc) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    bool minimal = true;
    for (std::size_t k = 0; k < cyc.size() && minimal; ++k)
      if (k != i && cyc[k].dim() < cyc[i].dim() && cyc[i].contains(cyc[k])) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

}  // namespace

bool lattice_within_budget(const GradedModule& m, std::uint64_t budget) {
  for (auto d : m.support())
    if (saturating_pow(m.prime(), m.indices_of_degree(d).size()) > budget) return false;
  return true;
}

std::vector<Vector> homogeneous_representatives(const GradedModule& m, std::uint64_t budget) {
  std::vector<Vector> out;
  for (auto d : m.support()) {
    const auto idx = m.indices_of_degree(d);
    for_each_vector(m.prime(), idx.size(), budget, [&](const Vector& c) {
      auto lead = std::find_if(c.begin(), c.end(), [](Elem x) { return x != 0; });
      if (lead == c.end() || *lead != 1) return;
      Vector v(m.dim(), 0);
      for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = c[t];
      out.push_back(std::move(v));
    });
  }
  return out;
}

Subspace SubmoduleLattice::radical() const {
  const Subspace& top = elements.back();
  Subspace r = top;
  for (auto i : maximal) r = r.intersect(elements[i]);
  return r;
}

Subspace SubmoduleLattice::socle() const {
  Subspace s = elements.front();
  for (auto i : minimal) s = s + elements[i];
  return s;
}

SubmoduleLattice submodule_lattice(const GradedModule& m, std::uint64_t budget) {
  SubmoduleLattice lat;
  lat.cyclic = distinct_cyclics(m, budget);
  const Subspace zero = Subspace::zero(m.prime(), m.dim());
  const Subspace full = Subspace::full(m.prime(), m.dim());

  std::unordered_set<Subspace> seen{zero};
  std::vector<Subspace> elems{zero};
  std::vector<bool> is_max;
  std::deque<std::size_t> work{0};
  std::vector<bool> maximal_flag(1, false);
  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    const Subspace s = elems[i];
    bool has_proper_cover = false;
    for (const auto& c : lat.cyclic) {
      if (s.contains(c)) continue;
      Subspace t = s + c;
      if (!(t == full)) has_proper_cover = true;
      if (seen.insert(t).second) {
        if (elems.size() >= budget)
          throw ResourceError("submodule lattice exceeds " + std::to_string(budget) + " elements");
        elems.push_back(std::move(t));
        maximal_flag.push_back(false);
        work.push_back(elems.size() - 1);
      }
    }
    maximal_flag[i] = !(s == full) && !has_proper_cover;
  }
  std::vector<std::size_t> order(elems.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return subspace_less(elems[a], elems[b]); });
  for (auto i : order) {
    if (maximal_flag[i]) lat.maximal.push_back(lat.elements.size());
    lat.elements.push_back(elems[i]);
  }
  for (auto c : minimal_indices(lat.cyclic)) {
    auto it = std::lower_bound(lat.elements.begin(), lat.elements.end(), lat.cyclic[c], subspace_less);
    lat.minimal.push_back(static_cast<std::size_t>(it - lat.elements.begin()));
  }
  std::sort(lat.minimal.begin(), lat.minimal.end());
  return lat;
}

std::vector<Subspace> cyclic_submodules(const GradedModule& m, std::uint64_t budget) {
  return distinct_cyclics(m, budget);
}

std::vector<Subspace> simple_submodules(const GradedModule& m, std::uint64_t budget) {
  const auto cyc = distinct_cyclics(m, budget);
  std::vector<Subspace> out;
  for (auto i : minimal_indices(cyc)) out.push_back(cyc[i]);
  return out;
}

Subspace socle_by_spinning(const GradedModule& m, std::uint64_t budget) {
  const auto cyc = distinct_cyclics(m, budget);
  Subspace s = Subspace::zero(m.prime(), m.dim());
  for (auto i : minimal_indices(cyc)) s = s + cyc[i];
  return s;
}

// ---------------------------------------------------------------- rings

namespace {

// R(e) as a module together with its embedding rows.
struct RowModule {
  GradedModule module;
  Matrix embedding;
};

RowModule row_module(const GradedModule& reg, Morphism e) {
  const GradedSubmodule comp = component_module(reg, e);
  return {submodule_as_module(reg, comp.space()), comp.space().basis()};
}

Subspace embed(const Subspace& s, const Matrix& embedding) {
  if (s.dim() == 0) return Subspace::zero(embedding.prime(), embedding.cols());
  return Subspace::span(s.basis() * embedding);
}

RingPtr share(const GradedRing& r) { return std::make_shared<const GradedRing>(r); }

void require_ungraded(const GradedRing& a) {
  if (!is_ungraded(a)) throw InputError("expected an ungraded (one-morphism) algebra");
}

}  // namespace

Subspace lattice_ring_radical(const GradedRing& r, std::uint64_t budget) {
  const GradedModule reg = regular_module(share(r));
  Subspace j = Subspace::zero(r.prime(), r.dim());
  for (auto e : r.groupoid().objects()) {
    RowModule row = row_module(reg, e);
    if (row.module.dim() == 0) continue;
    j = j + embed(submodule_lattice(row.module, budget).radical(), row.embedding);
  }
  return j;
}

Subspace lattice_ring_socle(const GradedRing& r, std::uint64_t budget) {
  const GradedModule reg = regular_module(share(r));
  Subspace s = Subspace::zero(r.prime(), r.dim());
  for (auto e : r.groupoid().objects()) {
    RowModule row = row_module(reg, e);
    if (row.module.dim() == 0) continue;
    s = s + embed(socle_by_spinning(row.module, budget), row.embedding);
  }
  return s;
}

Subspace carac_component_oracle(const GradedRing& r, Morphism gamma, std::uint64_t budget) {
  const Groupoid& g = r.groupoid();
  const Morphism e = g.target(gamma);
  const auto ia = r.indices_of_degree(gamma);
  const auto ix = r.indices_of_degree(g.inverse(gamma));
  const std::uint64_t na = saturating_pow(r.prime(), ia.size());
  const std::uint64_t nx = saturating_pow(r.prime(), ix.size());
  if (na > budget || nx > budget || na * nx > budget)
    throw ResourceError("carac oracle at " + g.name(gamma) + " needs " + std::to_string(r.prime()) + "^" +
                        std::to_string(ia.size() + ix.size()) + " pairs, over budget");
  const PrimeField f(r.prime());
  const Vector one = r.unit(e);
  const auto ie = r.indices_of_degree(e);
  auto embed_coeffs = [&](const std::vector<std::size_t>& idx, const Vector& c) {
    Vector v(r.dim(), 0);
    for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = c[t];
    return v;
  };
  std::vector<Vector> xs;
  for_each_vector(r.prime(), ix.size(), budget, [&](const Vector& c) { xs.push_back(embed_coeffs(ix, c)); });

  Subspace result = Subspace::zero(r.prime(), r.dim());
  std::uint64_t qualifying = 0;
  for_each_vector(r.prime(), ia.size(), budget, [&](const Vector& c) {
    const Vector a = embed_coeffs(ia, c);
    const Matrix ra = r.left_mult_by(a);
    for (const auto& x : xs) {
      const Vector y = vec_sub(f, one, vec_times(x, ra));
      // y*u = 1_e with u in R_e
      Matrix sys(r.prime(), 0, r.dim());
      for (auto k : ie) sys.append_row(r.product_vector(y, k));
      if (!solve_left(sys, one)) return;
    }
    ++qualifying;
    result.insert(a);
  });
  if (saturating_pow(r.prime(), result.dim()) != qualifying)
    throw ConsistencyError("carac oracle: qualifying elements at " + g.name(gamma) + " do not form a subspace");
  return result;
}

Subspace trace_form_radical(const GradedRing& a) {
  require_ungraded(a);
  if (a.prime() <= a.dim())
    throw InputError("trace-form radical needs p > dim A (p = " + std::to_string(a.prime()) + ", dim = " +
                     std::to_string(a.dim()) + "); use the lattice or quasi-regularity engines");
  const std::size_t n = a.dim();
  Matrix t(a.prime(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix l = a.left_mult_by(a.product(i, j));
      Elem tr = 0;
      for (std::size_t k = 0; k < n; ++k) tr = a.field().add(tr, l(k, k));
      t.at(i, j) = tr;
    }
  return left_kernel(t);
}

namespace {

using u128 = unsigned __int128;

// Square matrices over Z/mZ with 64-bit entries.
struct ModMatrix {
  std::size_t n;
  std::uint64_t mod;
  std::vector<std::uint64_t> d;
  ModMatrix(std::size_t n_, std::uint64_t m) : n(n_), mod(m), d(n_ * n_, 0) {}
  ModMatrix operator*(const ModMatrix& o) const {
    ModMatrix r(n, mod);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t a = d[i * n + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          r.d[i * n + j] = static_cast<std::uint64_t>((r.d[i * n + j] + static_cast<u128>(a) * o.d[k * n + j]) % mod);
      }
    return r;
  }
};

Elem g_function(const Matrix& x, std::uint32_t p, std::size_t i) {
  std::uint64_t pi = 1;
  for (std::size_t s = 0; s < i; ++s) pi *= p;
  const std::uint64_t mod = pi * p;
  ModMatrix m(x.rows(), mod);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) m.d[r * x.cols() + c] = x(r, c);
  for (std::size_t s = 0; s < i; ++s) {  // m <- m^p
    ModMatrix acc = m;
    for (std::uint32_t t = 1; t < p; ++t) acc = acc * m;
    m = std::move(acc);
  }
  std::uint64_t tr = 0;
  for (std::size_t k = 0; k < m.n; ++k) tr = (tr + m.d[k * m.n + k]) % mod;
  if (tr % pi != 0) throw ConsistencyError("trace-chain: trace of a p-power is not divisible by p^i");
  return static_cast<Elem>(tr / pi);
}

}  // namespace

Subspace trace_chain_radical(const GradedRing& a) {
  require_ungraded(a);
  const std::size_t n = a.dim();
  const std::uint32_t p = a.prime();
  std::size_t l = 0;
  for (std::uint64_t pw = p; pw <= n; pw *= p) ++l;
  Subspace ideal = Subspace::full(p, n);
  for (std::size_t i = 0; i <= l && ideal.dim() > 0; ++i) {
    Matrix t(p, ideal.dim(), n);
    for (std::size_t s = 0; s < ideal.dim(); ++s) {
      const Vector u = ideal.basis().row_vector(s);
      for (std::size_t k = 0; k < n; ++k) t.at(s, k) = g_function(a.right_mult_by(a.product_vector(u, k)), p, i);
    }
    const Subspace coeffs = left_kernel(t);
    std::vector<Vector> next;
    for (std::size_t r = 0; r < coeffs.dim(); ++r) next.push_back(vec_times(coeffs.basis().row_vector(r), ideal.basis()));
    ideal = Subspace::span(p, n, next);
  }
  return ideal;
}

Subspace quasi_regular_radical(const GradedRing& a, std::uint64_t budget) {
  require_ungraded(a);
  return carac_component_oracle(a, Morphism{0}, budget);
}

Subspace lift_diagonal_radical(const GradedRing& r, const std::map<Morphism, Subspace>& diagonal) {
  const Groupoid& g = r.groupoid();
  std::vector<Vector> gens;
  for (auto gamma : r.support()) {
    const auto ia = r.indices_of_degree(gamma);
    const auto ix = r.indices_of_degree(g.inverse(gamma));
    const Morphism e = g.target(gamma);
    auto it = diagonal.find(e);
    if (it == diagonal.end()) throw InputError("diagonal radical missing for object " + g.name(e));
    const Subspace& je = it->second;
    Matrix cond(r.prime(), ia.size(), ix.size() * r.dim());
    for (std::size_t s = 0; s < ia.size(); ++s)
      for (std::size_t t = 0; t < ix.size(); ++t) {
        const Vector red = je.reduce(r.product(ia[s], ix[t]));
        for (std::size_t k = 0; k < r.dim(); ++k) cond.at(s, t * r.dim() + k) = red[k];
      }
    const Subspace sol = left_kernel(cond);
    for (std::size_t b = 0; b < sol.dim(); ++b) {
      Vector v(r.dim(), 0);
      for (std::size_t s = 0; s < ia.size(); ++s) v[ia[s]] = sol.basis()(b, s);
      gens.push_back(std::move(v));
    }
  }
  return Subspace::span(r.prime(), r.dim(), gens);
}

Subspace trace_chain_ring_radical(const GradedRing& r) {
  std::map<Morphism, Subspace> diag;
  for (auto e : r.groupoid().objects()) {
    const auto idx = r.indices_of_degree(e);
    const Subspace local = idx.empty() ? Subspace::zero(r.prime(), 0) : trace_chain_radical(component_algebra(r, e));
    std::vector<Vector> vs;
    for (std::size_t b = 0; b < local.dim(); ++b) {
      Vector v(r.dim(), 0);
      for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = local.basis()(b, t);
      vs.push_back(std::move(v));
    }
    diag.emplace(e, Subspace::span(r.prime(), r.dim(), vs));
  }
  return lift_diagonal_radical(r, diag);
}

namespace {

bool ring_lattice_within_budget(const GradedRing& r, std::uint64_t budget) {
  for (auto d : r.support())
    if (saturating_pow(r.prime(), r.indices_of_degree(d).size()) > budget) return false;
  return true;
}

}  // namespace

RadicalReport rad_gr_ring(const GradedRing& r, std::uint64_t budget) {
  RadicalReport rep;
  const Subspace chain = trace_chain_ring_radical(r);
  std::optional<Subspace> lattice;
  if (ring_lattice_within_budget(r, budget)) {
    try {
      lattice = lattice_ring_radical(r, budget);
    } catch (const ResourceError& ex) {
      rep.skipped.push_back(std::string("lattice: ") + ex.what());
    }
  } else {
    rep.skipped.push_back("lattice: a degree component exceeds the enumeration budget");
  }
  Subspace j = chain;
  if (lattice) {
    j = *lattice;
    rep.engine = "lattice";
    if (!(chain == j)) throw ConsistencyError("lattice and trace-chain radicals differ");
    rep.confirmed_by.push_back("trace-chain");
  } else {
    rep.engine = "trace-chain";
  }
  if (!is_ideal(r, j, Side::TwoSided)) throw ConsistencyError("computed radical is not a two-sided ideal");
  rep.subspace = GradedSubspace(j, r.degrees());
  return rep;
}

Subspace ideal_product(const GradedRing& r, const Subspace& x, const Subspace& y) {
  std::vector<Vector> vs;
  for (std::size_t a = 0; a < x.dim(); ++a)
    for (std::size_t b = 0; b < y.dim(); ++b)
      vs.push_back(r.multiply(x.basis().row_vector(a), y.basis().row_vector(b)));
  return Subspace::span(r.prime(), r.dim(), vs);
}

Subspace ideal_power(const GradedRing& r, const Subspace& j, std::size_t n) {
  if (n == 0) {
    Vector one(r.dim(), 0);
    for (const auto& [e, u] : r.units()) one = vec_add(r.field(), one, u);
    return ideal_closure(r, {one}, Side::TwoSided);
  }
  Subspace out = j;
  for (std::size_t k = 1; k < n; ++k) out = ideal_product(r, out, j);
  return out;
}

Subspace annihilated_by(const GradedModule& m, const Subspace& ideal) {
  if (m.dim() == 0) return Subspace::zero(m.prime(), 0);
  if (ideal.dim() == 0) return Subspace::full(m.prime(), m.dim());
  Matrix big(m.prime(), m.dim(), m.dim() * ideal.dim());
  for (std::size_t b = 0; b < ideal.dim(); ++b) {
    const Matrix a = m.action_by(ideal.basis().row_vector(b));
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t k = 0; k < m.dim(); ++k) big.at(i, b * m.dim() + k) = a(i, k);
  }
  return left_kernel(big);
}

RadicalReport soc_gr_ring(const GradedRing& r, std::uint64_t budget) {
  RadicalReport rep;
  const RadicalReport rad = rad_gr_ring(r, budget);
  const GradedModule reg = regular_module(share(r));
  const Subspace ann = annihilated_by(reg, rad.subspace.space());
  std::optional<Subspace> spun;
  if (ring_lattice_within_budget(r, budget)) {
    spun = lattice_ring_socle(r, budget);
  } else {
    rep.skipped.push_back("spinning: a degree component exceeds the enumeration budget");
  }
  Subspace s = ann;
  if (spun) {
    s = *spun;
    rep.engine = "spinning";
    if (!(ann == s)) throw ConsistencyError("socle by spinning differs from the annihilator of J");
    rep.confirmed_by.push_back("annihilator(" + rad.engine + ")");
  } else {
    rep.engine = "annihilator(" + rad.engine + ")";
  }
  rep.subspace = GradedSubspace(s, r.degrees());
  return rep;
}

// ---------------------------------------------------------------- modules

GradedSubmodule rad_gr_module(const GradedModule& m, const Subspace& j) {
  std::vector<Vector> vs;
  for (std::size_t b = 0; b < j.dim(); ++b) {
    const Matrix a = m.action_by(j.basis().row_vector(b));
    for (std::size_t i = 0; i < m.dim(); ++i) vs.push_back(a.row_vector(i));
  }
  return GradedSubspace(Subspace::span(m.prime(), m.dim(), vs), m.degrees());
}

GradedSubmodule soc_gr_module(const GradedModule& m, const Subspace& j) {
  return GradedSubspace(annihilated_by(m, j), m.degrees());
}

GradedSubmodule rad_gr_module(const GradedModule& m, std::uint64_t budget) {
  return rad_gr_module(m, rad_gr_ring(m.ring(), budget).subspace.space());
}

GradedSubmodule soc_gr_module(const GradedModule& m, std::uint64_t budget) {
  return soc_gr_module(m, rad_gr_ring(m.ring(), budget).subspace.space());
}

std::vector<GradedSubmodule> loewy_by_socles(const GradedModule& m, const Subspace& j, std::uint64_t budget,
                                             std::string* engine) {
  std::vector<GradedSubmodule> out;
  Subspace cur = Subspace::zero(m.prime(), m.dim());
  out.emplace_back(cur, m.degrees());
  bool spun_all = true;
  while (cur.dim() < m.dim()) {
    const Quotient q = quotient(m, cur);
    Subspace s;
    if (lattice_within_budget(q.module, budget)) {
      s = socle_by_spinning(q.module, budget);
    } else {
      spun_all = false;
      s = annihilated_by(q.module, j);
    }
    if (s.dim() == 0) throw ConsistencyError("socle of a nonzero quotient is zero");
    Subspace next = cur;
    for (std::size_t b = 0; b < s.dim(); ++b) next.insert(q.lift(s.basis().row_vector(b)));
    cur = std::move(next);
    out.emplace_back(cur, m.degrees());
  }
  if (engine) *engine = spun_all ? "spinning" : "annihilator";
  return out;
}

std::vector<GradedSubmodule> loewy_by_annihilators(const GradedModule& m, const Subspace& j) {
  std::vector<GradedSubmodule> out;
  out.emplace_back(Subspace::zero(m.prime(), m.dim()), m.degrees());
  Subspace power = j;
  while (out.back().dim() < m.dim()) {
    Subspace s = annihilated_by(m, power);
    if (s == out.back().space()) throw ConsistencyError("annihilator series stalled below M");
    out.emplace_back(std::move(s), m.degrees());
    power = ideal_product(m.ring(), power, j);
  }
  return out;
}

LoewySeries loewy_series(const GradedModule& m, const Subspace& j, std::uint64_t budget) {
  LoewySeries ls;
  ls.terms = loewy_by_socles(m, j, budget, &ls.socle_engine);
  const auto ann = loewy_by_annihilators(m, j);
  if (ann.size() != ls.terms.size())
    throw ConsistencyError("Loewy series lengths differ: " + std::to_string(ls.terms.size() - 1) + " by socles, " +
                           std::to_string(ann.size() - 1) + " by annihilators");
  for (std::size_t k = 0; k < ann.size(); ++k)
    if (!(ann[k] == ls.terms[k]))
      throw ConsistencyError("Loewy series differ at step " + std::to_string(k));
  for (std::size_t k = 0; k + 1 < ls.terms.size(); ++k)
    ls.profiles.push_back(gamma0_support(m, ls.terms[k + 1].space(), ls.terms[k].space()));
  return ls;
}

LoewySeries loewy_series(const GradedModule& m, std::uint64_t budget) {
  return loewy_series(m, rad_gr_ring(m.ring(), budget).subspace.space(), budget);
}

std::vector<GradedSubmodule> radical_series(const GradedModule& m, const Subspace& j) {
  std::vector<GradedSubmodule> out;
  out.emplace_back(Subspace::full(m.prime(), m.dim()), m.degrees());
  while (out.back().dim() > 0) {
    const Subspace& cur = out.back().space();
    std::vector<Vector> vs;
    for (std::size_t b = 0; b < j.dim(); ++b) {
      const Matrix a = m.action_by(j.basis().row_vector(b));
      for (std::size_t r = 0; r < cur.dim(); ++r) vs.push_back(vec_times(cur.basis().row_vector(r), a));
    }
    Subspace next = Subspace::span(m.prime(), m.dim(), vs);
    if (next == cur) break;
    out.emplace_back(std::move(next), m.degrees());
  }
  return out;
}

}  // namespace grgrad
