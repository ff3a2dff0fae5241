#ifndef TES_TREE_HPP
#define TES_TREE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tes {

/// Planar binary rooted trees, hash-consed in a global arena. A TreeId
/// identifies a tree for the whole process lifetime; structural equality
/// is id equality. Id 0 is the leaf (the root tree, order 0).
using TreeId = std::int32_t;

constexpr TreeId kLeaf = 0;

TreeId tree_node(TreeId left, TreeId right);
TreeId tree_vtx();  // the vertex tree, Node(leaf, leaf)

int tree_order(TreeId t);  // number of internal vertices
TreeId tree_left(TreeId t);
TreeId tree_right(TreeId t);
inline bool tree_is_leaf(TreeId t) { return t == kLeaf; }

/// Preorder bitstring codec: internal node -> '1' left right, leaf -> '0'.
/// The returned view stays valid for the process lifetime.
const std::string& tree_code(TreeId t);

/// Canonical order on trees: by order, then by codec string.
bool tree_less(TreeId a, TreeId b);

/// over: grafts the root of t on the left-most leaf of s.
TreeId over(TreeId t, TreeId s);
/// under: grafts the root of s on the right-most leaf of t.
TreeId under(TreeId t, TreeId s);
/// Axial symmetry along the root.
TreeId mirror(TreeId t);
/// V(t) = vtx \ t: nothing branched at the left of the root.
TreeId v_wrap(TreeId t);

enum class CombSide { Left, Right };
/// n-fold over power (Left) or under power (Right) of the vertex tree.
TreeId comb(int n, CombSide side);

/// All trees of a given order, in canonical order (Catalan many).
const std::vector<TreeId>& trees_of_order(int n);

/// t-product: replaces the internal vertices of t, in infix order, by the
/// argument trees. Requires args.size() == order(t) and no leaf argument.
TreeId mu_apply(TreeId t, std::span<const TreeId> args);

struct TreeDecomp {
  TreeId shape;               // t, order >= 1
  std::vector<TreeId> args;   // order(t) trees, each of order >= 1
};

/// Every (t, [s_i]) with mu_apply(t, s) == u, each exactly once, sorted
/// canonically. Memoized; the cache behaves as a pure function.
const std::vector<TreeDecomp>& substitution_decompositions(TreeId u);

/// The unique [u_1..u_n] with u = V(u_1)/V(u_2)/.../V(u_n); walks the left
/// spine. u must have order >= 1.
std::vector<TreeId> over_factorize(TreeId u);

/// The unique [v_1..v_k] with u = (v_1/vtx)\(v_2/vtx)\...\(v_k/vtx); walks
/// the right spine. u must have order >= 1.
std::vector<TreeId> right_spine_factorize(TreeId u);

/// Reports a parse failure: 1-based column of the offending character (for
/// unexpected end of input, the column of the last consumed character).
struct TreeParseError {
  std::string message;
  int column = 0;
};

/// Parses either a codec bitstring or a tree expression:
///   atom := "o" | "v" | "(" expr ")" | bitstring
///   expr := atom (("/" | "\") atom)*   evaluated left to right.
/// Throws TreeParseError on malformed input.
TreeId parse_tree(std::string_view text);

}  // namespace tes

#endif
