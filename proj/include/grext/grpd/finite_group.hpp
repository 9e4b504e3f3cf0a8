#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace grext {

/// Finite group given by its Cayley table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates closure, identity at 0, inverses and associativity.
  static FiniteGroup from_table(std::string name, std::size_t order, std::vector<int> table,
                                std::vector<std::string> element_names = {});
  static FiniteGroup trivial();
  static FiniteGroup cyclic(int m);
  static FiniteGroup symmetric(int k);
  /// Dihedral group of order 2m; element r^i s^j has index i + m·j.
  static FiniteGroup dihedral(int m);
  static FiniteGroup quaternion();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Names such as "Z4", "S3", "D4", "Q8", "Z2xZ4", "Z2^3", "1".
  static FiniteGroup by_name(const std::string& name);
  /// All groups of order ≤ 8 up to isomorphism.
  static std::vector<FiniteGroup> small_groups();

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(n_); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  /// g·h·g⁻¹
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }
  int power(int a, long e) const;
  int element_order(int a) const;
  bool is_abelian() const;
  const std::string& element_name(int a) const { return names_[static_cast<std::size_t>(a)]; }
  /// Index of the conjugacy class of each element, classes numbered by
  /// their smallest member.
  std::vector<int> conjugacy_classes() const;
  std::vector<int> subgroup_generated(const std::vector<int>& gens) const;
  bool is_normal(const std::vector<int>& subgroup) const;

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

}  // namespace grext
