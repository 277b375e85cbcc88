#include "grgrad/exactla.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "grgrad/errors.hpp"

namespace grgrad {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p))
    throw InputError("field characteristic must be a prime below 2^16, got " +
                     std::to_string(p));
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw InputError("division by zero in F_" + std::to_string(p_));
  // Fermat: a^(p-2)
  std::uint64_t base = a % p_, result = 1, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Elem>(result);
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::uint32_t p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

Matrix Matrix::from_rows(std::uint32_t p,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  PrimeField f(p);
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = f.reduce(rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_vectors(std::uint32_t p, std::size_t cols,
                            const std::vector<Vector>& rows) {
  Matrix m(p, 0, cols);
  m.data_.reserve(rows.size() * cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) throw InputError("matrix product dimension mismatch");
  Matrix out(p_, rows_, rhs.cols_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      auto rr = rhs.row(k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] = (acc[j] + a * rr[j]) % p_;
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) = static_cast<Elem>(acc[j]);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    Elem s = data_[i] + rhs.data_[i];
    out.data_[i] = s >= p_ ? s - p_ : s;
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InputError("matrix difference dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] >= rhs.data_[i] ? data_[i] - rhs.data_[i] : data_[i] + p_ - rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = static_cast<Elem>(static_cast<std::uint64_t>(x) * s % p_);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::power(std::size_t n) const {
  if (rows_ != cols_) throw InputError("power of a non-square matrix");
  Matrix result = identity(p_, rows_);
  Matrix base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw InputError("stacking matrices of different widths");
  Matrix out = *this;
  out.rows_ += below.rows_;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(p_, 0, cols_);
  for (auto r : rows) out.append_row(row(r));
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> cols) const {
  Matrix out(p_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = (*this)(i, cols[j]);
  return out;
}

void Matrix::append_row(std::span<const Elem> r) {
  if (r.size() != cols_) throw InputError("row length does not match matrix width");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- vectors

Vector vec_times(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw InputError("vector-matrix dimension mismatch");
  const std::uint64_t p = m.prime();
  std::vector<std::uint64_t> acc(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    auto r = m.row(k);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = (acc[j] + std::uint64_t{v[k]} * r[j]) % p;
  }
  return {acc.begin(), acc.end()};
}

Vector vec_add(const PrimeField& f, const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vector vec_sub(const PrimeField& f, const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vector vec_scale(const PrimeField& f, Elem s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(s, v[i]);
  return out;
}

void vec_axpy(const PrimeField& f, Vector& a, Elem s, std::span<const Elem> b) {
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) a[i] = f.add(a[i], f.mul(s, b[i]));
}

bool vec_is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v.at(i) = 1;
  return v;
}

// ---------------------------------------------------------------- elimination

namespace {

// In-place Gauss-Jordan. Returns pivot columns; rows beyond pivots.size() are zero.
std::vector<std::size_t> gauss_jordan(Matrix& m) {
  const PrimeField f(m.prime());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      auto a = m.row(sel), b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Elem iv = f.inv(m(r, c));
    auto pr = m.row(r);
    for (auto& x : pr) x = f.mul(x, iv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem factor = m(i, c);
      if (factor == 0) continue;
      auto ri = m.row(i);
      const Elem nf = f.neg(factor);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (pr[j] != 0) ri[j] = f.add(ri[j], f.mul(nf, pr[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon echelonize(const Matrix& m) {
  Matrix work = m;
  auto pivots = gauss_jordan(work);
  Matrix reduced(m.prime(), 0, m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) reduced.append_row(work.row(i));
  return {std::move(reduced), std::move(pivots)};
}

Matrix rref(const Matrix& m) {
  Matrix work = m;
  gauss_jordan(work);
  return work;
}

std::size_t rank(const Matrix& m) { return echelonize(m).pivots.size(); }

Subspace kernel(const Matrix& m) {
  auto [reduced, pivots] = echelonize(m);
  const std::size_t n = m.cols();
  const PrimeField f(m.prime());
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(reduced(r, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.prime(), n, basis);
}

Subspace left_kernel(const Matrix& m) { return kernel(m.transpose()); }

Subspace image(const Matrix& m) { return row_space(m.transpose()); }

Subspace row_space(const Matrix& m) { return Subspace::span(m); }

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw InputError("solve: right-hand side length mismatch");
  Matrix aug(m.prime(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m(i, j);
    aug.at(i, m.cols()) = rhs[i] % m.prime();
  }
  auto pivots = gauss_jordan(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

std::optional<Vector> solve_left(const Matrix& m, const Vector& rhs) {
  return solve(m.transpose(), rhs);
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(std::uint32_t p, std::size_t ambient) {
  return Subspace(Matrix(p, 0, ambient), {});
}

Subspace Subspace::full(std::uint32_t p, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(p, ambient), std::move(piv));
}

Subspace Subspace::span(const Matrix& rows) {
  auto e = echelonize(rows);
  return Subspace(std::move(e.reduced), std::move(e.pivots));
}

Subspace Subspace::span(std::uint32_t p, std::size_t ambient, const std::vector<Vector>& vs) {
  return span(Matrix::from_vectors(p, ambient, vs));
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vector Subspace::reduce(std::span<const Elem> v) const {
  if (v.size() != ambient()) throw InputError("vector length does not match subspace ambient");
  const PrimeField f(prime());
  Vector out(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Elem c = out[pivots_[r]];
    if (c != 0) vec_axpy(f, out, f.neg(c), basis_.row(r));
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient()) throw InputError("containment across ambient dimensions");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(std::span<const Elem> v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(dim());
  for (std::size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

bool Subspace::insert(std::span<const Elem> v) {
  Vector w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](Elem x) { return x != 0; });
  if (it == w.end()) return false;
  const PrimeField f(prime());
  const std::size_t pc = static_cast<std::size_t>(it - w.begin());
  const Elem iv = f.inv(*it);
  for (auto& x : w) x = f.mul(x, iv);
  // clear the new pivot column from existing rows
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    auto row = basis_.row(r);
    const Elem c = row[pc];
    if (c == 0) continue;
    const Elem nc = f.neg(c);
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) row[j] = f.add(row[j], f.mul(nc, w[j]));
  }
  const std::size_t pos =
      static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin());
  Matrix rebuilt(prime(), 0, ambient());
  for (std::size_t r = 0; r < pos; ++r) rebuilt.append_row(basis_.row(r));
  rebuilt.append_row(w);
  for (std::size_t r = pos; r < pivots_.size(); ++r) rebuilt.append_row(basis_.row(r));
  basis_ = std::move(rebuilt);
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pc);
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient() != ambient()) throw InputError("sum of subspaces of different ambients");
  if (dim() < other.dim()) return other + *this;
  Subspace out = *this;
  for (std::size_t r = 0; r < other.dim(); ++r) out.insert(other.basis_.row(r));
  return out;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient() != ambient())
    throw InputError("intersection of subspaces of different ambients");
  if (dim() == 0 || other.dim() == 0) return zero(prime(), ambient());
  // v = c * B(other) lies in *this iff reduce(c * B) = c * reduce(B) = 0.
  Matrix reduced(prime(), 0, ambient());
  for (std::size_t r = 0; r < other.dim(); ++r) reduced.append_row(reduce(other.basis_.row(r)));
  Subspace coeffs = left_kernel(reduced);
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < coeffs.dim(); ++r)
    vs.push_back(vec_times(coeffs.basis().row_vector(r), other.basis_));
  return span(prime(), ambient(), vs);
}

std::vector<Vector> Subspace::enumerate(std::uint64_t limit) const {
  const std::uint64_t count = saturating_pow(prime(), dim());
  if (count > limit)
    throw ResourceError("enumeration of " + std::to_string(prime()) + "^" +
                        std::to_string(dim()) + " vectors exceeds budget " +
                        std::to_string(limit));
  std::vector<Vector> out;
  out.reserve(count);
  for_each_vector(prime(), dim(), limit, [&](const Vector& c) { out.push_back(vec_times(c, basis_)); });
  return out;
}

std::size_t Subspace::hash() const {
  std::size_t h = std::hash<std::size_t>{}(ambient()) ^ (dim() * 0x9e3779b97f4a7c15ULL);
  for (std::size_t r = 0; r < basis_.rows(); ++r)
    for (auto x : basis_.row(r)) h = h * 1000003u ^ x;
  return h;
}

bool equal(const Subspace& a, const Subspace& b) { return a == b; }
Subspace sum(const Subspace& a, const Subspace& b) { return a + b; }
Subspace intersect(const Subspace& a, const Subspace& b) { return a.intersect(b); }

std::uint64_t saturating_pow(std::uint64_t p, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

void for_each_vector(std::uint32_t p, std::size_t n, std::uint64_t limit,
                     const std::function<void(const Vector&)>& visit) {
  if (saturating_pow(p, n) > limit)
    throw ResourceError("enumeration of " + std::to_string(p) + "^" + std::to_string(n) +
                        " vectors exceeds budget " + std::to_string(limit));
  Vector v(n, 0);
  while (true) {
    visit(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++v[i] < p) break;
      v[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace grgrad

namespace grgrad {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    v.insert(v.end(), row.begin(), row.end());
  }
  return v;
}

Matrix unflatten(std::uint32_t p, std::size_t rows, std::size_t cols, std::span<const Elem> v) {
  if (v.size() != rows * cols) throw InputError("unflatten: size mismatch");
  Matrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = v[r * cols + c];
  return m;
}

std::vector<Matrix> intertwiners(std::uint32_t p, const std::vector<Matrix>& src,
                                 const std::vector<Matrix>& dst,
                                 const std::vector<std::vector<bool>>* allowed) {
  if (src.size() != dst.size()) throw InputError("intertwiners: action lists differ in length");
  const PrimeField f(p);
  const std::size_t rows = src.empty() ? 0 : src.front().rows();
  const std::size_t cols = dst.empty() ? 0 : dst.front().rows();
  if (src.empty()) return {};
  // variables: allowed entries of G
  std::vector<std::size_t> var_of(rows * cols, SIZE_MAX);
  std::vector<std::size_t> entry_of;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!allowed || (*allowed)[r][c]) {
        var_of[r * cols + c] = entry_of.size();
        entry_of.push_back(r * cols + c);
      }
  const std::size_t nvars = entry_of.size();
  if (nvars == 0) return {};

  // Equations accumulate into an echelon basis of the constraint row space.
  Subspace constraints = Subspace::zero(p, nvars);
  Vector eq(nvars);
  for (std::size_t k = 0; k < src.size(); ++k) {
    const Matrix& x = src[k];
    const Matrix& y = dst[k];
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        std::fill(eq.begin(), eq.end(), 0);
        // (x G)[r][c] = sum_s x[r][s] G[s][c]
        for (std::size_t s = 0; s < rows; ++s) {
          const Elem a = x(r, s);
          if (a == 0) continue;
          const auto v = var_of[s * cols + c];
          if (v != SIZE_MAX) eq[v] = f.add(eq[v], a);
        }
        // - (G y)[r][c] = - sum_s G[r][s] y[s][c]
        for (std::size_t s = 0; s < cols; ++s) {
          const Elem a = y(s, c);
          if (a == 0) continue;
          const auto v = var_of[r * cols + s];
          if (v != SIZE_MAX) eq[v] = f.sub(eq[v], a);
        }
        if (!vec_is_zero(eq)) {
          constraints.insert(eq);
          if (constraints.dim() == nvars) return {};
        }
      }
  }
  Subspace sol = kernel(constraints.basis());
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < sol.dim(); ++b) {
    Matrix g(p, rows, cols);
    auto coeffs = sol.basis().row(b);
    for (std::size_t v = 0; v < nvars; ++v) g.at(entry_of[v] / cols, entry_of[v] % cols) = coeffs[v];
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace grgrad
