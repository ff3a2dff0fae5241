#include "tes/tree.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace tes {

namespace {

struct NodeRec {
  TreeId left;
  TreeId right;
  int order;
  std::string code;
};

// Append-only store; std::deque keeps references stable while new trees are
// interned, so tree_code can hand out long-lived references.
struct Arena {
  std::deque<NodeRec> nodes;
  std::unordered_map<std::uint64_t, TreeId> intern;
  mutable std::mutex mu;

  Arena() { nodes.push_back({-1, -1, 0, "0"}); }
};

Arena& arena() {
  static Arena a;
  return a;
}

std::uint64_t pack(TreeId l, TreeId r) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(l)) << 32) |
         static_cast<std::uint32_t>(r);
}

}  // namespace

TreeId tree_node(TreeId left, TreeId right) {
  Arena& a = arena();
  std::lock_guard<std::mutex> lock(a.mu);
  auto [it, fresh] = a.intern.try_emplace(pack(left, right), 0);
  if (!fresh) return it->second;
  NodeRec rec;
  rec.left = left;
  rec.right = right;
  rec.order = a.nodes[left].order + a.nodes[right].order + 1;
  rec.code = "1" + a.nodes[left].code + a.nodes[right].code;
  a.nodes.push_back(std::move(rec));
  it->second = static_cast<TreeId>(a.nodes.size() - 1);
  return it->second;
}

TreeId tree_vtx() {
  static const TreeId v = tree_node(kLeaf, kLeaf);
  return v;
}

int tree_order(TreeId t) {
  Arena& a = arena();
  std::lock_guard<std::mutex> lock(a.mu);
  return a.nodes[t].order;
}

TreeId tree_left(TreeId t) {
  Arena& a = arena();
  std::lock_guard<std::mutex> lock(a.mu);
  if (t == kLeaf) throw std::invalid_argument("tree_left: leaf has no children");
  return a.nodes[t].left;
}

TreeId tree_right(TreeId t) {
  Arena& a = arena();
  std::lock_guard<std::mutex> lock(a.mu);
  if (t == kLeaf) throw std::invalid_argument("tree_right: leaf has no children");
  return a.nodes[t].right;
}

const std::string& tree_code(TreeId t) {
  Arena& a = arena();
  std::lock_guard<std::mutex> lock(a.mu);
  return a.nodes[t].code;
}

bool tree_less(TreeId a, TreeId b) {
  if (a == b) return false;
  int oa = tree_order(a), ob = tree_order(b);
  if (oa != ob) return oa < ob;
  return tree_code(a) < tree_code(b);
}

TreeId over(TreeId t, TreeId s) {
  if (s == kLeaf) return t;
  return tree_node(over(t, tree_left(s)), tree_right(s));
}

TreeId under(TreeId t, TreeId s) {
  if (t == kLeaf) return s;
  return tree_node(tree_left(t), under(tree_right(t), s));
}

TreeId mirror(TreeId t) {
  if (t == kLeaf) return kLeaf;
  return tree_node(mirror(tree_right(t)), mirror(tree_left(t)));
}

TreeId v_wrap(TreeId t) { return tree_node(kLeaf, t); }

TreeId comb(int n, CombSide side) {
  if (n < 0) throw std::invalid_argument("comb: negative order");
  TreeId t = kLeaf;
  for (int i = 0; i < n; ++i)
    t = side == CombSide::Left ? over(t, tree_vtx()) : under(t, tree_vtx());
  return t;
}

const std::vector<TreeId>& trees_of_order(int n) {
  if (n < 0) throw std::invalid_argument("trees_of_order: negative order");
  // deque: growing the memo never invalidates previously returned references
  static std::deque<std::vector<TreeId>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= n) {
    int m = static_cast<int>(memo.size());
    std::vector<TreeId> out;
    if (m == 0) {
      out.push_back(kLeaf);
    } else {
      for (int k = 0; k < m; ++k)
        for (TreeId l : memo[k])
          for (TreeId r : memo[m - 1 - k]) out.push_back(tree_node(l, r));
      std::sort(out.begin(), out.end(), tree_less);
    }
    memo.push_back(std::move(out));
  }
  return memo[n];
}

TreeId mu_apply(TreeId t, std::span<const TreeId> args) {
  int n = tree_order(t);
  if (static_cast<int>(args.size()) != n)
    throw std::invalid_argument("mu_apply: expected " + std::to_string(n) + " arguments, got " +
                                std::to_string(args.size()));
  for (TreeId s : args)
    if (s == kLeaf) throw std::invalid_argument("mu_apply: leaf argument not allowed");
  if (t == kLeaf) throw std::invalid_argument("mu_apply: t must have order >= 1");
  // Infix order: left subtree, root vertex, right subtree.
  TreeId tl = tree_left(t), tr = tree_right(t);
  int k = tree_order(tl);
  TreeId m = args[k];
  TreeId res = m;
  if (tl != kLeaf) res = over(mu_apply(tl, args.subspan(0, k)), res);
  if (tr != kLeaf) res = under(res, mu_apply(tr, args.subspan(k + 1)));
  return res;
}

namespace {

// Subtrees hanging on the left spine of u, outermost first: u itself,
// then left(u), left(left(u)), ... down to (not including) the leaf.
std::vector<TreeId> left_spine(TreeId u) {
  std::vector<TreeId> out;
  for (TreeId c = u; c != kLeaf; c = tree_left(c)) out.push_back(c);
  return out;
}

std::vector<TreeId> right_spine(TreeId u) {
  std::vector<TreeId> out;
  for (TreeId c = u; c != kLeaf; c = tree_right(c)) out.push_back(c);
  return out;
}

// u with its left-spine subtree at depth i replaced by a leaf.
TreeId cut_left(TreeId u, int i) {
  if (i == 0) return kLeaf;
  return tree_node(cut_left(tree_left(u), i - 1), tree_right(u));
}

TreeId cut_right(TreeId u, int i) {
  if (i == 0) return kLeaf;
  return tree_node(tree_left(u), cut_right(tree_right(u), i - 1));
}

bool decomp_less(const TreeDecomp& a, const TreeDecomp& b) {
  if (a.shape != b.shape) return tree_less(a.shape, b.shape);
  return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(), b.args.end(),
                                      tree_less);
}

// Enumerates (t, args) by splitting off the root vertex: with t = Node(tl, tr)
// and k = |tl|, mu_t(args) = under(over(mu_tl(head), args[k]), mu_tr(tail)),
// so u factors as under(over(L, m), R) where R is a proper right-spine suffix
// of u (absent iff tr is a leaf) and L a proper left-spine suffix of the
// remainder (absent iff tl is a leaf). The triple (L, m, R) and the recursive
// decompositions of L and R determine (t, args) uniquely, so no entry is
// produced twice.
std::vector<TreeDecomp> decompose(TreeId u) {
  std::vector<TreeDecomp> out;
  const std::vector<TreeDecomp> trivial{{kLeaf, {}}};  // stands in for an absent side

  const std::vector<TreeId> rspine = right_spine(u);
  const int rlen = static_cast<int>(rspine.size());
  for (int rj = 1; rj <= rlen; ++rj) {
    const TreeId r = rj < rlen ? rspine[rj] : kLeaf;  // rj == rlen: no under at the root
    const TreeId p = rj < rlen ? cut_right(u, rj) : u;
    const std::vector<TreeDecomp>& rdec = r == kLeaf ? trivial : substitution_decompositions(r);

    const std::vector<TreeId> lspine = left_spine(p);
    const int llen = static_cast<int>(lspine.size());
    for (int li = 1; li <= llen; ++li) {
      const TreeId l = li < llen ? lspine[li] : kLeaf;  // li == llen: no over at the root
      const TreeId m = li < llen ? cut_left(p, li) : p;
      const std::vector<TreeDecomp>& ldec = l == kLeaf ? trivial : substitution_decompositions(l);

      for (const TreeDecomp& dl : ldec) {
        for (const TreeDecomp& dr : rdec) {
          TreeDecomp d;
          d.shape = tree_node(dl.shape, dr.shape);
          d.args.reserve(dl.args.size() + 1 + dr.args.size());
          d.args.insert(d.args.end(), dl.args.begin(), dl.args.end());
          d.args.push_back(m);
          d.args.insert(d.args.end(), dr.args.begin(), dr.args.end());
          out.push_back(std::move(d));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), decomp_less);
  return out;
}

}  // namespace

const std::vector<TreeDecomp>& substitution_decompositions(TreeId u) {
  if (u == kLeaf) throw std::invalid_argument("substitution_decompositions: order >= 1 required");
  static std::unordered_map<TreeId, std::vector<TreeDecomp>> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
  }
  std::vector<TreeDecomp> dec = decompose(u);
  std::lock_guard<std::mutex> lock(mu);
  return memo.try_emplace(u, std::move(dec)).first->second;  // idempotent fill
}

std::vector<TreeId> over_factorize(TreeId u) {
  if (u == kLeaf) throw std::invalid_argument("over_factorize: order >= 1 required");
  // u = node(w, u_n) with w = V(u_1)/.../V(u_{n-1}); collect right children
  // along the left spine, bottom-up.
  std::vector<TreeId> out;
  for (TreeId c = u; c != kLeaf; c = tree_left(c)) out.push_back(tree_right(c));
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<TreeId> right_spine_factorize(TreeId u) {
  if (u == kLeaf) throw std::invalid_argument("right_spine_factorize: order >= 1 required");
  std::vector<TreeId> out;
  for (TreeId c = u; c != kLeaf; c = tree_right(c)) out.push_back(tree_left(c));
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;  // 0-based index of the next character

  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    TreeParseError err;
    err.message = msg;
    err.column = static_cast<int>(at) + 1;
    throw err;
  }

  [[noreturn]] void fail_eof(const std::string& msg) {
    // Report the column of the last consumed character.
    fail(msg, pos == 0 ? 0 : pos - 1);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() { return text[pos]; }

  TreeId parse_bits() {
    // Preorder codeword, consumed greedily until it closes.
    std::size_t start = pos;
    int need = 1;
    while (need > 0) {
      if (pos >= text.size()) fail_eof("unterminated tree codeword");
      char c = text[pos];
      if (c == '1')
        ++need;
      else if (c == '0')
        --need;
      else
        fail("invalid character in tree codeword", pos);
      ++pos;
    }
    std::string_view bits = text.substr(start, pos - start);
    std::vector<TreeId> stack;
    for (std::size_t i = bits.size(); i-- > 0;) {
      if (bits[i] == '0') {
        stack.push_back(kLeaf);
      } else {
        TreeId l = stack.back();
        stack.pop_back();
        TreeId r = stack.back();
        stack.pop_back();
        stack.push_back(tree_node(l, r));
      }
    }
    return stack.back();
  }

  TreeId parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail_eof("expected a tree atom");
    char c = peek();
    if (c == 'o') {
      ++pos;
      return kLeaf;
    }
    if (c == 'v') {
      ++pos;
      return tree_vtx();
    }
    if (c == '(') {
      ++pos;
      TreeId t = parse_expr();
      skip_ws();
      if (pos >= text.size()) fail_eof("expected ')'");
      if (peek() != ')') fail("expected ')'", pos);
      ++pos;
      return t;
    }
    if (c == '0' || c == '1') return parse_bits();
    fail("expected a tree atom", pos);
  }

  TreeId parse_expr() {
    TreeId acc = parse_atom();
    while (true) {
      skip_ws();
      if (pos >= text.size()) return acc;
      char c = peek();
      if (c == '/') {
        ++pos;
        acc = over(acc, parse_atom());
      } else if (c == '\\') {
        ++pos;
        acc = under(acc, parse_atom());
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

TreeId parse_tree(std::string_view text) {
  Parser p{text};
  TreeId t = p.parse_expr();
  if (!p.at_end()) p.fail("trailing input after tree expression", p.pos);
  return t;
}

}  // namespace tes
