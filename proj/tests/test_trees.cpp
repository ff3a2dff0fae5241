#include <doctest.h>

#include <stdexcept>

#include <random>

#include "tes/tree.hpp"

using namespace tes;

namespace {

TreeId T(const char* expr) { return parse_tree(expr); }

// Grafting oracle: replace the leftmost (rightmost) leaf by an explicit
// walk, independent of the recursions in the library.
TreeId graft_leftmost(TreeId t, TreeId s) {
  if (s == kLeaf) return t;
  std::vector<TreeId> path;
  TreeId c = s;
  while (c != kLeaf) {
    path.push_back(c);
    c = tree_left(c);
  }
  TreeId res = t;
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    res = tree_node(res, tree_right(*it));
  return res;
}

TreeId graft_rightmost(TreeId t, TreeId s) {
  if (t == kLeaf) return s;
  std::vector<TreeId> path;
  TreeId c = t;
  while (c != kLeaf) {
    path.push_back(c);
    c = tree_right(c);
  }
  TreeId res = s;
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    res = tree_node(tree_left(*it), res);
  return res;
}

}  // namespace

TEST_CASE("codec golden values") {
  CHECK(tree_code(kLeaf) == "0");
  CHECK(tree_code(tree_vtx()) == "100");
  CHECK(tree_code(T("v/v")) == "11000");
  CHECK(tree_code(T("v\\v")) == "10100");
  CHECK(tree_code(T("v/v/v")) == "1110000");
  CHECK(tree_code(T("(v\\v)/v")) == "1101000");
  CHECK(tree_code(T("v/v\\v")) == "1100100");
  CHECK(tree_code(T("v\\(v/v)")) == "1011000");
  CHECK(tree_code(T("v\\v\\v")) == "1010100");
  CHECK(T("10100") == T("v\\v"));
  CHECK(T("v/v\\v") == T("(v/v)\\v"));  // left-to-right evaluation
  CHECK(T("v/(v\\v)") == T("v/v\\v"));  // duplicial relation makes it value-safe
  CHECK(T("10100/v") == T("(v\\v)/v"));  // bitstrings are atoms of the grammar
  CHECK(T(" v / ( v \\ v ) ") == T("v/v\\v"));
  CHECK(T("o") == kLeaf);
  CHECK(T("0") == kLeaf);
  CHECK(T("o/v") == tree_vtx());
  CHECK(T("v\\o") == tree_vtx());
}

TEST_CASE("parse errors carry positions") {
  auto column_of = [](const char* text) {
    try {
      parse_tree(text);
    } catch (const TreeParseError& e) {
      return e.column;
    }
    return -1;
  };
  CHECK(column_of("((v") == 3);
  CHECK(column_of("v/") == 2);
  CHECK(column_of("v)x") == 2);
  CHECK(column_of("x") == 1);
  CHECK(column_of("10") == 2);
  CHECK(column_of("") == 1);
}

TEST_CASE("enumeration matches the Catalan numbers") {
  CHECK(trees_of_order(0).size() == 1);
  CHECK(trees_of_order(0)[0] == kLeaf);
  CHECK(trees_of_order(2).size() == 2);
  CHECK(trees_of_order(4).size() == 14);
  // canonical order: by codec string within an order
  const std::vector<TreeId>& y3 = trees_of_order(3);
  for (std::size_t i = 0; i + 1 < y3.size(); ++i)
    CHECK(tree_code(y3[i]) < tree_code(y3[i + 1]));
}

TEST_CASE("over and under products") {
  TreeId vtx = tree_vtx(), AB = T("v/v"), BA = T("v\\v");
  CHECK(over(AB, vtx) == T("v/v/v"));
  CHECK(over(T("v/v/v"), kLeaf) == T("v/v/v"));
  CHECK(over(vtx, BA) == T("v/v\\v"));
  CHECK(under(vtx, vtx) == BA);
  CHECK(under(kLeaf, T("v/v")) == T("v/v"));
  CHECK(under(AB, vtx) == T("v/v\\v"));
  // spec naming table sanity
  CHECK(over(tree_vtx(), tree_vtx()) == AB);
  CHECK(under(tree_vtx(), T("v/v")) == T("1011000"));
}

TEST_CASE("grafting oracle agrees with the recursions") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 300; ++it) {
    int no = static_cast<int>(rng() % 5);
    int ns = static_cast<int>(rng() % 5);
    const std::vector<TreeId>& a = trees_of_order(no);
    const std::vector<TreeId>& b = trees_of_order(ns);
    TreeId t = a[rng() % a.size()], s = b[rng() % b.size()];
    CHECK(over(t, s) == graft_leftmost(t, s));
    CHECK(under(t, s) == graft_rightmost(t, s));
    CHECK(tree_order(over(t, s)) == tree_order(t) + tree_order(s));
  }
}

TEST_CASE("mu_apply on the worked examples") {
  TreeId s1 = T("v/v"), s2 = T("v\\v"), s3 = T("v");
  std::vector<TreeId> one{s1};
  CHECK(mu_apply(tree_vtx(), one) == s1);
  std::vector<TreeId> args{s1, s2, s3};
  CHECK(mu_apply(T("(v\\v)/v"), args) == over(under(s1, s2), s3));
  CHECK(mu_apply(T("v/v\\v"), args) == under(over(s1, s2), s3));
  std::vector<TreeId> wrong{s1, s2};
  CHECK_THROWS_AS(mu_apply(T("(v\\v)/v"), wrong), std::invalid_argument);
  std::vector<TreeId> leafy{s1, kLeaf, s3};
  CHECK_THROWS_AS(mu_apply(T("(v\\v)/v"), leafy), std::invalid_argument);
}

TEST_CASE("substitution decompositions golden cases") {
  auto has = [](const std::vector<TreeDecomp>& ds, TreeId t, std::vector<TreeId> args) {
    for (const TreeDecomp& d : ds)
      if (d.shape == t && d.args == args) return true;
    return false;
  };
  {
    const auto& ds = substitution_decompositions(tree_vtx());
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].shape == tree_vtx());
    CHECK(ds[0].args == std::vector<TreeId>{tree_vtx()});
  }
  {
    TreeId ABC = T("v/v/v"), AB = T("v/v"), vtx = tree_vtx();
    const auto& ds = substitution_decompositions(ABC);
    CHECK(ds.size() == 4);
    CHECK(has(ds, vtx, {ABC}));
    CHECK(has(ds, AB, {AB, vtx}));
    CHECK(has(ds, AB, {vtx, AB}));
    CHECK(has(ds, ABC, {vtx, vtx, vtx}));
  }
  {
    TreeId ACA = T("v/v\\v"), AB = T("v/v"), BA = T("v\\v"), vtx = tree_vtx();
    const auto& ds = substitution_decompositions(ACA);
    CHECK(has(ds, AB, {vtx, BA}));
    CHECK(has(ds, BA, {AB, vtx}));
  }
}

TEST_CASE("v_wrap and over_factorize") {
  CHECK(v_wrap(kLeaf) == tree_vtx());
  CHECK(v_wrap(tree_vtx()) == T("v\\v"));
  CHECK(v_wrap(T("v/v")) == T("v\\(v/v)"));
  CHECK(over_factorize(T("v/v")) == std::vector<TreeId>{kLeaf, kLeaf});
  CHECK(over_factorize(T("v\\(v/v)")) == std::vector<TreeId>{T("v/v")});
  CHECK(over_factorize(T("v/v\\v")) == std::vector<TreeId>{kLeaf, tree_vtx()});
  CHECK_THROWS_AS(over_factorize(kLeaf), std::invalid_argument);
}

TEST_CASE("combs") {
  CHECK(comb(0, CombSide::Left) == kLeaf);
  CHECK(comb(0, CombSide::Right) == kLeaf);
  CHECK(comb(1, CombSide::Left) == tree_vtx());
  CHECK(comb(1, CombSide::Right) == tree_vtx());
  CHECK(comb(2, CombSide::Left) == T("v/v"));
  CHECK(comb(3, CombSide::Right) == T("v\\v\\v"));
  CHECK(comb(3, CombSide::Left) == T("v/v/v"));
}

TEST_CASE("right spine factorization") {
  // u = (v_1/vtx)\(v_2/vtx)\...\(v_k/vtx) splits along the right spine
  TreeId u = under(over(T("v/v"), tree_vtx()), over(kLeaf, tree_vtx()));
  std::vector<TreeId> parts = right_spine_factorize(u);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == T("v/v"));
  CHECK(parts[1] == kLeaf);
}
