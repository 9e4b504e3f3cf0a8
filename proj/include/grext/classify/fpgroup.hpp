#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grext/classify/nerve.hpp"
#include "grext/exactnum/integer_matrix.hpp"

namespace grext {

/// Letters are ±(generator index + 1).
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word word_inverse(const Word& w);

struct FPGroup {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string word_string(const Word& w) const;
  /// "<a, b | a b a^-1 b^-1>".
  std::string to_string() const;
};

AbelianInvariants abelianization(const FPGroup& G);

struct SimplifiedPresentation {
  FPGroup group;
  /// Each original generator as a word in the simplified generators.
  std::vector<Word> substitution;
};

/// Free and cyclic reduction, deletion of trivial and duplicate relators, and
/// elimination of generators that occur exactly once in some relator.
SimplifiedPresentation simplify(const FPGroup& G, std::size_t max_length = 4096);

/// Order by coset enumeration over the trivial subgroup; nullopt when more than
/// `max_cosets` cosets would be needed.
std::optional<std::size_t> todd_coxeter_order(const FPGroup& G, std::size_t max_cosets = 200000);

struct EdgePathPresentation {
  FPGroup group;
  std::vector<long> parent_edge;     ///< per vertex index: tree edge to parent, -1 at the root
  std::vector<int> parent;           ///< per vertex index: parent vertex, or the vertex itself at the root
  std::vector<int> bfs_order;        ///< vertex ids in discovery order
  std::vector<long> edge_generator;  ///< per edge: generator index, -1 for tree edges
};

/// Spanning tree by BFS from the basepoint with sorted neighbours; one
/// generator per non-tree edge, one relator per triangle.
EdgePathPresentation edge_path_group(const Nerve& X);

}  // namespace grext
