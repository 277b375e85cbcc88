#pragma once

// Dense exact linear algebra over a prime field F_p, p < 2^16.
//
// Vectors are rows. A matrix M acts on a row vector v from the right (v*M);
// kernel/image/solve follow the textbook column convention (M*x).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grgrad {

using Elem = std::uint32_t;
using Vector = std::vector<Elem>;

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  static constexpr std::uint32_t kMaxPrime = 65521;  // largest prime below 2^16

  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Elem reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;

 private:
  std::uint32_t p_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  static Matrix identity(std::uint32_t p, std::size_t n);
  /// Entries are reduced mod p; negative values are allowed.
  static Matrix from_rows(std::uint32_t p,
                          const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_vectors(std::uint32_t p, std::size_t cols,
                             const std::vector<Vector>& rows);

  std::uint32_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Elem s) const;
  Matrix transpose() const;
  Matrix power(std::size_t n) const;
  /// Rows of *this followed by rows of `below`.
  Matrix stacked(const Matrix& below) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix select_cols(std::span<const std::size_t> cols) const;

  void append_row(std::span<const Elem> r);
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

// Row-vector helpers.
Vector vec_times(const Vector& v, const Matrix& m);
Vector vec_add(const PrimeField& f, const Vector& a, const Vector& b);
Vector vec_sub(const PrimeField& f, const Vector& a, const Vector& b);
Vector vec_scale(const PrimeField& f, Elem s, const Vector& v);
/// a += s*b
void vec_axpy(const PrimeField& f, Vector& a, Elem s, std::span<const Elem> b);
bool vec_is_zero(std::span<const Elem> v);
Vector unit_vector(std::size_t n, std::size_t i);

class Subspace;

struct Echelon {
  Matrix reduced;                    // nonzero rows only, reduced echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
};

Echelon echelonize(const Matrix& m);
/// Reduced row echelon form with zero rows kept at the bottom.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// {x : m*x = 0}
Subspace kernel(const Matrix& m);
/// {v : v*m = 0}
Subspace left_kernel(const Matrix& m);
/// Column space {m*x}.
Subspace image(const Matrix& m);
Subspace row_space(const Matrix& m);
/// One x with m*x = rhs, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);
/// One x with x*m = rhs, or nullopt when inconsistent.
std::optional<Vector> solve_left(const Matrix& m, const Vector& rhs);

/// A linear subspace of F_p^n, stored by its canonical reduced echelon basis.
/// Equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::uint32_t p, std::size_t ambient);
  static Subspace full(std::uint32_t p, std::size_t ambient);
  static Subspace span(const Matrix& rows);
  static Subspace span(std::uint32_t p, std::size_t ambient, const std::vector<Vector>& vs);

  std::uint32_t prime() const { return basis_.prime(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> non_pivots() const;

  /// Inserts v, keeping the basis reduced. Returns true if the dimension grew.
  bool insert(std::span<const Elem> v);

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  /// v minus its projection along the pivot coordinates (canonical coset representative).
  Vector reduce(std::span<const Elem> v) const;
  /// Coordinates of v in the echelon basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(std::span<const Elem> v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// All p^dim vectors; throws ResourceError past `limit`.
  std::vector<Vector> enumerate(std::uint64_t limit) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

  std::size_t hash() const;

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

bool equal(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// p^k with saturation at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::size_t k);

/// Visits every vector of F_p^n in lexicographic order (last coordinate fastest).
void for_each_vector(std::uint32_t p, std::size_t n, std::uint64_t limit,
                     const std::function<void(const Vector&)>& visit);

}  // namespace grgrad

template <>
struct std::hash<grgrad::Subspace> {
  std::size_t operator()(const grgrad::Subspace& s) const { return s.hash(); }
};

namespace grgrad {

/// Basis of {G : src[k]*G == G*dst[k] for all k} with G of shape
/// (dim src) x (dim dst). When `allowed` is given, entries (r,c) with
/// allowed[r][c] == false are forced to zero. The basis is canonical (reduced
/// echelon in row-major entry order).
std::vector<Matrix> intertwiners(std::uint32_t p, const std::vector<Matrix>& src,
                                 const std::vector<Matrix>& dst,
                                 const std::vector<std::vector<bool>>* allowed = nullptr);

/// Row-major flattening and its inverse.
Vector flatten(const Matrix& m);
Matrix unflatten(std::uint32_t p, std::size_t rows, std::size_t cols, std::span<const Elem> v);

}  // namespace grgrad
