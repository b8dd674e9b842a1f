#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ydkit/hopf.hpp"

namespace ydkit {

/// Finite group by multiplication table: mul[a][b] is the index of a b.
struct GroupTable {
  std::string name;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> mul;

  std::size_t order() const { return mul.size(); }
  /// Throws NotAGroup unless the table is closed, associative, unital and has inverses.
  void validate() const;
  std::size_t identity() const;
  std::size_t inverse(std::size_t g) const;
  std::size_t element_order(std::size_t g) const;
  std::size_t exponent() const;
  /// Classes in order of their smallest element; each class sorted.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;
  std::vector<std::size_t> centralizer(std::size_t g) const;
};

GroupTable cyclic_group(std::size_t n);
GroupTable symmetric_group3();
GroupTable dihedral_group4();
GroupTable quaternion_group();

/// A Hopf algebra with its R-matrix (an element of H (x) H).
struct CatalogEntry {
  std::string name;
  HopfAlgebra hopf;
  Vec R;
  std::optional<GroupTable> group;
};

/// kG with Delta g = g (x) g, S g = g^-1 and trivial R. field = 0 picks 4 * exponent(G).
CatalogEntry group_algebra(const GroupTable& g, unsigned field = 0);
/// The eight-dimensional Kac-Paljutkin algebra on {1,x,y,xy,z,xz,yz,xyz} over Q(i).
CatalogEntry kac_paljutkin();
/// kZ/2 with R = 1/2 (1x1 + 1xg + gx1 - gxg).
CatalogEntry z2_minus();

/// Builtins: z2, z2_minus, s3, d4, q8, z<n> (n >= 1), h8. field = 0 keeps the default.
CatalogEntry builtin(std::string_view name, unsigned field = 0);
std::vector<std::string> builtin_names();

}  // namespace ydkit
