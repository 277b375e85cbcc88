#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grgrad {

/// Index of a morphism inside its groupoid. Objects are the identity morphisms.
struct Morphism {
  std::uint32_t id = 0;
  friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

/// Accumulates violated axiom instances; empty means valid.
struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
};

/// A finite groupoid with a dense composition table.
///
/// compose(delta, gamma) is delta*gamma ("first gamma, then delta"): it is
/// defined iff source(delta) == target(gamma), and then has source(gamma) and
/// target(delta). Construction does not validate; call validate().
class Groupoid {
 public:
  static constexpr std::uint32_t kUndefined = 0xFFFFFFFFu;

  /// Raw tables; every entry is a morphism index or kUndefined (composition only).
  struct Data {
    std::vector<std::string> names;
    std::vector<std::uint32_t> source;
    std::vector<std::uint32_t> target;
    std::vector<std::uint32_t> composition;  // size n*n, row delta, column gamma
    std::vector<std::uint32_t> inverse;
  };

  Groupoid() = default;
  explicit Groupoid(Data data);

  std::size_t size() const { return data_.names.size(); }
  const Data& data() const { return data_; }

  /// Identity morphisms, in index order.
  const std::vector<Morphism>& objects() const { return objects_; }
  bool is_object(Morphism m) const;

  Morphism source(Morphism m) const;
  Morphism target(Morphism m) const;
  std::optional<Morphism> compose(Morphism delta, Morphism gamma) const;
  Morphism inverse(Morphism m) const;

  const std::string& name(Morphism m) const;
  Morphism find(const std::string& name) const;
  std::optional<Morphism> try_find(const std::string& name) const;

  ValidationReport validate() const;

  friend bool operator==(const Groupoid& a, const Groupoid& b) {
    return a.data_.names == b.data_.names && a.data_.source == b.data_.source &&
           a.data_.target == b.data_.target && a.data_.composition == b.data_.composition &&
           a.data_.inverse == b.data_.inverse;
  }

 private:
  void check(Morphism m) const;

  Data data_;
  std::vector<Morphism> objects_;
};

/// Groupoid I x I with (z,y)(y,x) = (z,x). Morphism (i,j) has target (i,i) and
/// source (j,j); it is named "(i,j)".
Groupoid pair_groupoid(const std::vector<std::string>& labels);

/// One-object groupoid of a finite group given by its multiplication table
/// (table[a][b] = a*b). Elements are named by `names` or by their index.
Groupoid group_groupoid(const std::vector<std::vector<std::uint32_t>>& table,
                        std::vector<std::string> names = {});

/// X x G x X with (z,h,y)(y,g,x) = (z,hg,x), named "(y,g,x)".
Groupoid product_groupoid(const std::vector<std::string>& labels,
                          const std::vector<std::vector<std::uint32_t>>& table,
                          std::vector<std::string> names = {});

/// Single morphism, the grading groupoid of an ungraded algebra.
Groupoid trivial_groupoid();

/// Cyclic group table Z/n.
std::vector<std::vector<std::uint32_t>> cyclic_group_table(std::uint32_t n);

/// Finds the identity and inverses of a group table; throws InputError if it is not a group.
std::uint32_t group_identity(const std::vector<std::vector<std::uint32_t>>& table);

}  // namespace grgrad
