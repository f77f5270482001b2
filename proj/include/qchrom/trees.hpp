#pragma once

#include "qchrom/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qchrom {

/// AHU parenthesis encoding rooted at the centre; for a bicentral tree the
/// lexicographically smaller of the two rooted encodings. Two trees get the
/// same string iff they are isomorphic. Throws std::invalid_argument for
/// non-trees.
std::string tree_canonical_form(const Graph& t);

/// The tree whose preorder walk of `code` numbers the vertices 0, 1, 2, ...
/// Inverse of tree_canonical_form up to isomorphism.
Graph tree_from_canonical_form(std::string_view code);

/// One representative per isomorphism class of free trees on d vertices,
/// each relabelled by tree_from_canonical_form and sorted by canonical form.
/// Requires 1 <= d <= 12.
std::vector<Graph> generate_trees(int d);

/// Centre vertices (one or two) of a tree.
std::vector<int> tree_centers(const Graph& t);

}  // namespace qchrom
