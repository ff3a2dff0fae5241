#include "tes/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "tes/hopf.hpp"
#include "tes/operad.hpp"
#include "tes/series.hpp"
#include "tes/tree.hpp"

namespace tes::verify {

namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Small integer coefficients, |n| <= 3, biased away from zero.
Rational rand_coeff(Rng& rng) {
  int v = rand_int(rng, -3, 3);
  if (v == 0 && rand_int(rng, 0, 1)) v = rand_int(rng, 1, 3);
  return Rational(v);
}

TreeId random_tree(Rng& rng, int order) {
  if (order == 0) return kLeaf;
  const std::vector<TreeId>& all = trees_of_order(order);
  return all[rand_int(rng, 0, static_cast<int>(all.size()) - 1)];
}

GradedSeries random_monoid_series(const Carrier& c, int trunc, Rng& rng, bool invertible_form,
                                  bool with_constant = false) {
  GradedSeries s(c, trunc);
  if (invertible_form)
    s.set_coeff(MonoidElement::neutral(c.inst), RingValue(1));
  else if (with_constant)
    s.set_coeff(MonoidElement::neutral(c.inst), RingValue(rand_coeff(rng)));
  for (int d = 1; d <= trunc; ++d) {
    for (const OperadElement& p : SetOperadInstance::get(c.inst).enumerate(d)) {
      if (rand_int(rng, 0, 2) == 0) continue;  // one key in three stays zero
      s.set_coeff(MonoidElement::of(p), RingValue(rand_coeff(rng)));
    }
  }
  return s;
}

GradedSeries random_diffeo(OperadId inst, int trunc, Rng& rng) {
  GradedSeries s = identity_diffeo(inst, trunc);
  for (int d = 1; d <= trunc; ++d) {
    for (const OperadElement& p : SetOperadInstance::get(inst).enumerate(d + 1)) {
      if (rand_int(rng, 0, 2) == 0) continue;
      s.set_coeff(MonoidElement::of(p), RingValue(rand_coeff(rng)));
    }
  }
  return s;
}

CheckResult fail(const std::string& name, const std::string& detail) {
  return {name, false, detail};
}

struct Checker {
  explicit Checker(std::string n) : name(std::move(n)) {}

  std::string name;
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (ok && !cond) {
      ok = false;
      detail = what;
    }
  }
  template <class T>
  void expect_eq(const T& a, const T& b, const std::string& what) {
    expect(a == b, what);
  }
  CheckResult result() const { return {name, ok, detail}; }
};

}  // namespace

// ---------------------------------------------------------------- trees ----

CheckResult check_catalan(int max_order) {
  Checker ck{"trees/catalan-counts"};
  static const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 0; n <= max_order && n <= 10; ++n)
    ck.expect(static_cast<long>(trees_of_order(n).size()) == expected[n],
              "|Y_" + std::to_string(n) + "| != Catalan");
  return ck.result();
}

CheckResult check_duplicial_relations(int total_order) {
  Checker ck{"trees/duplicial-relations"};
  for (int na = 0; na <= total_order; ++na)
    for (int nb = 0; na + nb <= total_order; ++nb)
      for (int nc = 0; na + nb + nc <= total_order; ++nc)
        for (TreeId a : trees_of_order(na))
          for (TreeId b : trees_of_order(nb))
            for (TreeId c : trees_of_order(nc)) {
              ck.expect(over(over(a, b), c) == over(a, over(b, c)), "(a/b)/c != a/(b/c)");
              // the mixed relation needs a nonempty middle tree
              if (nb >= 1)
                ck.expect(under(over(a, b), c) == over(a, under(b, c)),
                          "(a/b)\\c != a/(b\\c)");
              ck.expect(under(under(a, b), c) == under(a, under(b, c)), "(a\\b)\\c != a\\(b\\c)");
              if (!ck.ok) return ck.result();
            }
  return ck.result();
}

CheckResult check_mirror(int total_order) {
  Checker ck{"trees/mirror-antiisomorphism"};
  for (int na = 0; na <= total_order; ++na)
    for (int nb = 0; na + nb <= total_order; ++nb)
      for (TreeId a : trees_of_order(na))
        for (TreeId b : trees_of_order(nb)) {
          ck.expect(mirror(over(a, b)) == under(mirror(b), mirror(a)),
                    "mirror(a/b) != mirror(b)\\mirror(a)");
          ck.expect(mirror(under(a, b)) == over(mirror(b), mirror(a)),
                    "mirror(a\\b) != mirror(b)/mirror(a)");
          ck.expect(mirror(mirror(a)) == a, "mirror is not an involution");
          if (!ck.ok) return ck.result();
        }
  return ck.result();
}

CheckResult check_mu_identity(int max_order) {
  Checker ck{"trees/mu-vertex-identity"};
  for (int n = 1; n <= max_order; ++n)
    for (TreeId t : trees_of_order(n)) {
      std::vector<TreeId> args(n, tree_vtx());
      ck.expect(mu_apply(t, args) == t, "mu_t(vtx,...,vtx) != t at " + tree_code(t));
      if (!ck.ok) return ck.result();
    }
  return ck.result();
}

CheckResult check_mu_associativity(int total_order, int cases, std::uint64_t seed) {
  Checker ck{"trees/mu-associativity"};
  Rng rng(seed);
  for (int it = 0; it < cases && ck.ok; ++it) {
    int tn = rand_int(rng, 1, std::max(1, total_order / 3));
    TreeId t = random_tree(rng, tn);
    std::vector<TreeId> s;
    std::vector<std::vector<TreeId>> blocks;
    int budget = total_order;
    for (int i = 0; i < tn; ++i) {
      int si = rand_int(rng, 1, std::max(1, (budget - (tn - i)) / (tn - i) + 1));
      s.push_back(random_tree(rng, si));
      budget -= si;
    }
    std::vector<TreeId> flat;
    for (TreeId si : s) {
      std::vector<TreeId> blk;
      for (int j = 0; j < tree_order(si); ++j) blk.push_back(random_tree(rng, rand_int(rng, 1, 2)));
      for (TreeId u : blk) flat.push_back(u);
      blocks.push_back(std::move(blk));
    }
    TreeId lhs = mu_apply(mu_apply(t, s), flat);
    std::vector<TreeId> inner;
    for (std::size_t i = 0; i < s.size(); ++i) inner.push_back(mu_apply(s[i], blocks[i]));
    TreeId rhs = mu_apply(t, inner);
    ck.expect(lhs == rhs, "mu associativity failed at t=" + tree_code(t));
  }
  return ck.result();
}

CheckResult check_decompositions_oracle(int max_order) {
  Checker ck{"trees/decompositions-vs-bruteforce"};
  for (int n = 1; n <= max_order; ++n) {
    for (TreeId u : trees_of_order(n)) {
      // Plain brute force: all shapes, all argument tuples, filter.
      std::vector<std::pair<TreeId, std::vector<TreeId>>> oracle;
      for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<TreeId>> tuples;
        std::vector<TreeId> cur;
        auto rec = [&](auto&& self, int slots, int rest) -> void {
          if (slots == 0) {
            if (rest == 0) tuples.push_back(cur);
            return;
          }
          for (int d = 1; d + (slots - 1) <= rest; ++d)
            for (TreeId s : trees_of_order(d)) {
              cur.push_back(s);
              self(self, slots - 1, rest - d);
              cur.pop_back();
            }
        };
        rec(rec, k, n);
        for (TreeId t : trees_of_order(k))
          for (const auto& tup : tuples)
            if (mu_apply(t, tup) == u) oracle.push_back({t, tup});
      }
      std::sort(oracle.begin(), oracle.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return tree_less(a.first, b.first);
        return std::lexicographical_compare(a.second.begin(), a.second.end(), b.second.begin(),
                                            b.second.end(), tree_less);
      });
      const std::vector<TreeDecomp>& got = substitution_decompositions(u);
      bool same = got.size() == oracle.size();
      for (std::size_t i = 0; same && i < got.size(); ++i)
        same = got[i].shape == oracle[i].first && got[i].args == oracle[i].second;
      ck.expect(same, "decomposition mismatch at " + tree_code(u));
      if (!ck.ok) return ck.result();
    }
  }
  return ck.result();
}

CheckResult check_over_factorize(int max_order) {
  Checker ck{"trees/over-factorize-foldback"};
  for (int n = 1; n <= max_order; ++n)
    for (TreeId u : trees_of_order(n)) {
      std::vector<TreeId> parts = over_factorize(u);
      TreeId back = kLeaf;
      for (TreeId p : parts) {
        ck.expect(tree_left(v_wrap(p)) == kLeaf, "V factor with nonempty left child");
        back = over(back, v_wrap(p));
      }
      ck.expect(back == u, "over_factorize foldback failed at " + tree_code(u));
      if (!ck.ok) return ck.result();
    }
  return ck.result();
}

CheckResult check_codec_roundtrip(int max_order, int cases, std::uint64_t seed) {
  Checker ck{"trees/codec-roundtrip"};
  Rng rng(seed);
  for (int it = 0; it < cases && ck.ok; ++it) {
    TreeId t = random_tree(rng, rand_int(rng, 0, max_order));
    ck.expect(parse_tree(tree_code(t)) == t, "parse(format(t)) != t for " + tree_code(t));
  }
  return ck.result();
}

// ---------------------------------------------------------------- groups ----

std::string group_name(GroupId g) {
  switch (g) {
    case GroupId::OverMonoid: return "over-invertible";
    case GroupId::UnderMonoid: return "under-invertible";
    case GroupId::DifDup: return "dif-dup";
    case GroupId::DifAs: return "dif-as";
    case GroupId::LambdaUnder: return "lambda-under";
    case GroupId::RhoOver: return "rho-over";
    case GroupId::Alpha: return "alpha";
    case GroupId::SemidirectOver: return "semidirect-over";
    case GroupId::SemidirectUnder: return "semidirect-under";
  }
  return "?";
}

namespace {

struct SeriesGroup {
  std::function<GradedSeries(Rng&)> rand;
  std::function<GradedSeries(const GradedSeries&, const GradedSeries&)> mul;
  std::function<GradedSeries(const GradedSeries&)> inv;
  GradedSeries unit;
  std::function<bool(const GradedSeries&)> member;  // closure test, may be null
};

SeriesGroup make_series_group(GroupId g, int trunc) {
  switch (g) {
    case GroupId::OverMonoid:
    case GroupId::UnderMonoid: {
      Carrier c = g == GroupId::OverMonoid ? carrier_over_monoid() : carrier_under_monoid();
      return SeriesGroup{
          [c, trunc](Rng& rng) { return random_monoid_series(c, trunc, rng, true); },
          [](const GradedSeries& a, const GradedSeries& b) { return mul_monoid(a, b); },
          [](const GradedSeries& a) { return inv_monoid(a); },
          unit_series(c, trunc),
          nullptr};
    }
    case GroupId::DifDup:
    case GroupId::DifAs: {
      OperadId inst = g == GroupId::DifDup ? OperadId::Dup : OperadId::As;
      return SeriesGroup{
          [inst, trunc](Rng& rng) { return random_diffeo(inst, trunc, rng); },
          [](const GradedSeries& a, const GradedSeries& b) { return compose(a, b); },
          [](const GradedSeries& a) { return comp_inverse(a); },
          identity_diffeo(inst, trunc),
          nullptr};
    }
    case GroupId::LambdaUnder: {
      OperadElement p2 = dup_under_generator();
      Carrier c = carrier_under_monoid();
      return SeriesGroup{
          [c, p2, trunc](Rng& rng) {
            return embed_lambda_rho(random_monoid_series(c, trunc, rng, true), EmbedSide::Lambda,
                                    p2);
          },
          [](const GradedSeries& a, const GradedSeries& b) { return compose(a, b); },
          [](const GradedSeries& a) { return comp_inverse(a); },
          identity_diffeo(OperadId::Dup, trunc),
          [p2](const GradedSeries& a) {
            try {
              GradedSeries f = extract_lambda_rho(a, EmbedSide::Lambda, p2);
              return embed_lambda_rho(f, EmbedSide::Lambda, p2) == a;
            } catch (const std::exception&) {
              return false;
            }
          }};
    }
    case GroupId::RhoOver: {
      OperadElement p2 = dup_over_generator();
      Carrier c = carrier_over_monoid();
      return SeriesGroup{
          [c, p2, trunc](Rng& rng) {
            return embed_lambda_rho(random_monoid_series(c, trunc, rng, true), EmbedSide::Rho, p2);
          },
          [](const GradedSeries& a, const GradedSeries& b) { return compose(a, b); },
          [](const GradedSeries& a) { return comp_inverse(a); },
          identity_diffeo(OperadId::Dup, trunc),
          [p2](const GradedSeries& a) {
            try {
              GradedSeries f = extract_lambda_rho(a, EmbedSide::Rho, p2);
              return embed_lambda_rho(f, EmbedSide::Rho, p2) == a;
            } catch (const std::exception&) {
              return false;
            }
          }};
    }
    case GroupId::Alpha: {
      Carrier c = carrier_over_monoid();
      return SeriesGroup{
          [c, trunc](Rng& rng) {
            GradedSeries f = random_monoid_series(c, trunc - 1, rng, false, true);
            return alpha_from(f, trunc);
          },
          [](const GradedSeries& a, const GradedSeries& b) { return compose(a, b); },
          [](const GradedSeries& a) { return comp_inverse(a); },
          identity_diffeo(OperadId::Dup, trunc),
          [](const GradedSeries& a) { return alpha_membership(a); }};
    }
    default: throw std::logic_error("make_series_group: not a series group");
  }
}

}  // namespace

CheckResult check_group_axioms(GroupId g, int trunc, int triples, std::uint64_t seed) {
  Checker ck{"groups/axioms-" + group_name(g)};
  Rng rng(seed);
  if (g == GroupId::SemidirectOver || g == GroupId::SemidirectUnder) {
    OperadElement p2 = g == GroupId::SemidirectOver ? dup_over_generator() : dup_under_generator();
    Carrier mc = Carrier::monoid(OperadId::Dup, p2);
    auto rand_elem = [&](Rng& r) {
      return SemidirectElement{random_diffeo(OperadId::Dup, trunc, r),
                               random_monoid_series(mc, trunc, r, true)};
    };
    SemidirectElement unit = semidirect_unit(OperadId::Dup, p2, trunc);
    for (int it = 0; it < triples && ck.ok; ++it) {
      SemidirectElement a = rand_elem(rng), b = rand_elem(rng), c = rand_elem(rng);
      ck.expect(semidirect_mul(semidirect_mul(a, b), c) == semidirect_mul(a, semidirect_mul(b, c)),
                "semidirect associativity failed");
      ck.expect(semidirect_mul(a, unit) == a && semidirect_mul(unit, a) == a,
                "semidirect unit failed");
      SemidirectElement ai = semidirect_inverse(a);
      ck.expect(semidirect_mul(a, ai) == unit && semidirect_mul(ai, a) == unit,
                "semidirect inverse failed");
    }
    return ck.result();
  }
  SeriesGroup grp = make_series_group(g, trunc);
  for (int it = 0; it < triples && ck.ok; ++it) {
    GradedSeries a = grp.rand(rng), b = grp.rand(rng), c = grp.rand(rng);
    ck.expect(grp.mul(grp.mul(a, b), c) == grp.mul(a, grp.mul(b, c)), "associativity failed");
    ck.expect(grp.mul(a, grp.unit) == a && grp.mul(grp.unit, a) == a, "unit failed");
    GradedSeries ai = grp.inv(a);
    ck.expect(grp.mul(a, ai) == grp.unit && grp.mul(ai, a) == grp.unit, "inverse failed");
    if (grp.member) {
      ck.expect(grp.member(a), "random element not in subgroup");
      ck.expect(grp.member(grp.mul(a, b)), "subgroup not closed under product");
      ck.expect(grp.member(ai), "subgroup not closed under inverse");
    }
  }
  return ck.result();
}

CheckResult check_action_axioms(int trunc, int cases, std::uint64_t seed) {
  Checker ck{"groups/action-axioms"};
  Rng rng(seed);
  for (Carrier c : {carrier_over_monoid(), carrier_under_monoid()}) {
    for (int it = 0; it < cases && ck.ok; ++it) {
      GradedSeries f = random_monoid_series(c, trunc, rng, true);
      GradedSeries g = random_monoid_series(c, trunc, rng, true);
      GradedSeries phi = random_diffeo(OperadId::Dup, trunc, rng);
      GradedSeries psi = random_diffeo(OperadId::Dup, trunc, rng);
      ck.expect(act(f, identity_diffeo(OperadId::Dup, trunc)) == f, "f^id != f");
      ck.expect(act(act(f, phi), psi) == act(f, compose(phi, psi)),
                "(f^phi)^psi != f^(phi o psi)");
      ck.expect(act(mul_monoid(f, g), phi) == mul_monoid(act(f, phi), act(g, phi)),
                "(f.g)^phi != f^phi . g^phi");
    }
  }
  return ck.result();
}

CheckResult check_closure_constants(int trunc, int cases, std::uint64_t seed) {
  Checker ck{"groups/lambda-rho-closure"};
  Rng rng(seed);
  OperadElement under_p2 = dup_under_generator();
  OperadElement over_p2 = dup_over_generator();
  for (int it = 0; it < cases && ck.ok; ++it) {
    {
      Carrier c = carrier_under_monoid();
      GradedSeries f = random_monoid_series(c, trunc, rng, true);
      GradedSeries g = random_monoid_series(c, trunc, rng, true);
      GradedSeries lg = embed_lambda_rho(g, EmbedSide::Lambda, under_p2);
      GradedSeries lhs = compose(embed_lambda_rho(f, EmbedSide::Lambda, under_p2), lg);
      GradedSeries rhs = embed_lambda_rho(mul_monoid(g, act(f, lg)), EmbedSide::Lambda, under_p2);
      ck.expect(lhs == rhs, "lambda_f o lambda_g != lambda_{g . f^{lambda_g}}");
    }
    {
      Carrier c = carrier_over_monoid();
      GradedSeries f = random_monoid_series(c, trunc, rng, true);
      GradedSeries g = random_monoid_series(c, trunc, rng, true);
      GradedSeries rg = embed_lambda_rho(g, EmbedSide::Rho, over_p2);
      GradedSeries lhs = compose(embed_lambda_rho(f, EmbedSide::Rho, over_p2), rg);
      GradedSeries rhs = embed_lambda_rho(mul_monoid(act(f, rg), g), EmbedSide::Rho, over_p2);
      ck.expect(lhs == rhs, "rho_f o rho_g != rho_{f^{rho_g} . g}");
    }
  }
  return ck.result();
}

CheckResult check_cocycle(int trunc, int cases, std::uint64_t seed) {
  Checker ck{"groups/cocycle-identity"};
  Rng rng(seed);
  OperadElement p2 = dup_under_generator();
  Carrier c = carrier_under_monoid();
  auto extract = [&](const GradedSeries& s) {
    return extract_lambda_rho(s, EmbedSide::Lambda, p2);
  };
  for (int it = 0; it < cases && ck.ok; ++it) {
    GradedSeries f = random_monoid_series(c, trunc, rng, true);
    GradedSeries g = random_monoid_series(c, trunc, rng, true);
    GradedSeries phi = embed_lambda_rho(f, EmbedSide::Lambda, p2);
    GradedSeries psi = embed_lambda_rho(g, EmbedSide::Lambda, p2);
    // The twisted-homomorphism form of the 1-cocycle property of
    // lambda^{-1}: c(phi o psi) = c(psi) . c(phi)^psi.
    GradedSeries lhs = extract(compose(phi, psi));
    GradedSeries rhs = mul_monoid(extract(psi), act(extract(phi), psi));
    ck.expect(lhs == rhs, "cocycle identity failed");
    GradedSeries residual = mul_monoid(inv_monoid(lhs), rhs);
    ck.expect(residual == unit_series(c, trunc), "cocycle residual != x^e");
  }
  // Fixed witness that the factor order printed in the source formula
  // (c(psi) . c(phi o psi)^{-1} . c(phi)^psi) does not give x^e: the
  // product equals g . (f^psi)^{-1} . g^{-1} . f^psi, and with g supported
  // off the comb trees the two factors do not commute.
  {
    int n = std::max(3, trunc);
    GradedSeries f = unit_series(c, n);
    f.set_coeff(MonoidElement{OperadId::Dup, tree_vtx(), 0}, RingValue(1));
    GradedSeries g = unit_series(c, n);
    g.set_coeff(MonoidElement{OperadId::Dup, over(tree_vtx(), tree_vtx()), 0}, RingValue(1));
    GradedSeries phi = embed_lambda_rho(f, EmbedSide::Lambda, p2);
    GradedSeries psi = embed_lambda_rho(g, EmbedSide::Lambda, p2);
    GradedSeries misordered = mul_monoid(
        mul_monoid(extract(psi), inv_monoid(extract(compose(phi, psi)))), act(extract(phi), psi));
    ck.expect(!(misordered == unit_series(c, n)),
              "misordered cocycle product unexpectedly equals x^e");
  }
  return ck.result();
}

CheckResult check_action_vs_composition_witness(int trunc) {
  Checker ck{"groups/action-vs-composition-witness"};
  int n = std::max(3, trunc);
  OperadElement p2 = dup_under_generator();
  Carrier c = carrier_under_monoid();
  GradedSeries f = unit_series(c, n);
  f.set_coeff(MonoidElement{OperadId::Dup, tree_vtx(), 0}, RingValue(1));
  GradedSeries lf = embed_lambda_rho(f, EmbedSide::Lambda, p2);
  GradedSeries acted = embed_lambda_rho(act(f, lf), EmbedSide::Lambda, p2);
  GradedSeries composed = compose(lf, lf);
  ck.expect(!(acted == composed), "(lambda_f)^{lambda_g} == lambda_f o lambda_g for the witness");
  return ck.result();
}

namespace {

// Classic truncated univariate series, index = power of x.
using Classic = std::vector<RingValue>;

Classic cmul(const Classic& a, const Classic& b, int maxdeg) {
  Classic out(maxdeg + 1);
  for (int i = 0; i < static_cast<int>(a.size()) && i <= maxdeg; ++i)
    for (int j = 0; j < static_cast<int>(b.size()) && i + j <= maxdeg; ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

Classic ccompose(const Classic& a, const Classic& b, int maxdeg) {
  Classic out(maxdeg + 1);
  Classic pow(maxdeg + 1);
  pow[0] = RingValue(1);
  for (int k = 0; k < static_cast<int>(a.size()) && k <= maxdeg; ++k) {
    for (int d = 0; d <= maxdeg; ++d) out[d] += a[k] * pow[d];
    pow = cmul(pow, b, maxdeg);
  }
  return out;
}

Classic cinv_mul(const Classic& a, int maxdeg) {
  Classic u(maxdeg + 1);
  for (int i = 1; i <= maxdeg && i < static_cast<int>(a.size()); ++i) u[i] = -a[i];
  Classic acc(maxdeg + 1), pow(maxdeg + 1);
  acc[0] = RingValue(1);
  pow[0] = RingValue(1);
  for (int k = 1; k <= maxdeg; ++k) {
    pow = cmul(pow, u, maxdeg);
    for (int d = 0; d <= maxdeg; ++d) acc[d] = acc[d] + pow[d];
  }
  return acc;
}

Classic as_to_classic(const GradedSeries& s, int maxdeg) {
  Classic out(maxdeg + 1);
  for (const auto& [k, v] : s.terms()) {
    int d = k.grading();
    if (d <= maxdeg) out[d] += v;
  }
  return out;
}

bool classic_eq(const Classic& a, const Classic& b, int maxdeg) {
  for (int d = 0; d <= maxdeg; ++d) {
    RingValue x = d < static_cast<int>(a.size()) ? a[d] : RingValue();
    RingValue y = d < static_cast<int>(b.size()) ? b[d] : RingValue();
    if (x != y) return false;
  }
  return true;
}

}  // namespace

CheckResult check_dif_action_formula(int trunc, int cases, std::uint64_t seed) {
  Checker ck{"groups/dif-action-formula"};
  Rng rng(seed);
  OperadElement p2{OperadId::As, 2, 0};
  for (int it = 0; it < cases && ck.ok; ++it) {
    GradedSeries phi = random_diffeo(OperadId::As, trunc, rng);
    GradedSeries psi = random_diffeo(OperadId::As, trunc, rng);
    GradedSeries got =
        embed_lambda_rho(act(extract_lambda_rho(phi, EmbedSide::Lambda, p2), psi),
                         EmbedSide::Lambda, p2);
    auto phi_at = [&](int m) { return phi.coeff(MonoidElement{OperadId::As, m, 0}); };
    auto psi_at = [&](int m) { return psi.coeff(MonoidElement{OperadId::As, m, 0}); };
    // phi^psi(x) = x + sum_{n>=2} (sum_m sum_{k_2+..+k_m=n-1} phi_m psi_{k_2}..psi_{k_m}) x^n
    for (int n = 2; n <= trunc + 1 && ck.ok; ++n) {
      RingValue want;
      for (int m = 2; m <= n; ++m) {
        std::vector<int> ks(m - 1);
        auto rec = [&](auto&& self, int slot, int rest) -> void {
          if (slot == m - 1) {
            if (rest != 0) return;
            RingValue term = phi_at(m);
            for (int k : ks) term *= psi_at(k);
            want += term;
            return;
          }
          for (int k = 1; k + (m - 2 - slot) <= rest; ++k) {
            ks[slot] = k;
            self(self, slot + 1, rest - k);
          }
        };
        rec(rec, 0, n - 1);
      }
      ck.expect(got.coeff(MonoidElement{OperadId::As, n, 0}) == want,
                "dif-action formula mismatch at degree " + std::to_string(n));
    }
  }
  return ck.result();
}

CheckResult check_alpha_closure(int trunc, int cases, std::uint64_t seed) {
  Checker ck{"groups/alpha-closure"};
  Rng rng(seed);
  Carrier c = carrier_over_monoid();
  for (int it = 0; it < cases && ck.ok; ++it) {
    GradedSeries a = alpha_from(random_monoid_series(c, trunc - 1, rng, false, true), trunc);
    GradedSeries b = alpha_from(random_monoid_series(c, trunc - 1, rng, false, true), trunc);
    ck.expect(alpha_membership(a), "alpha_from output fails membership");
    ck.expect(alpha_membership(compose(a, b)), "alpha composition fails membership");
    ck.expect(alpha_membership(comp_inverse(a)), "alpha inverse fails membership");
  }
  return ck.result();
}

CheckResult check_alpha_multiplicativity(int max_order, int cases, std::uint64_t seed) {
  Checker ck{"groups/alpha-multiplicativity"};
  Rng rng(seed);
  Carrier c = carrier_over_monoid();
  OperadElement p2 = dup_over_generator();
  for (int it = 0; it < cases && ck.ok; ++it) {
    GradedSeries a = alpha_from(random_monoid_series(c, max_order - 1, rng, false, true),
                                max_order);
    GradedSeries b = alpha_from(random_monoid_series(c, max_order - 1, rng, false, true),
                                max_order);
    GradedSeries h = extract_lambda_rho(compose(a, b), EmbedSide::Rho, p2);
    auto h_at = [&](TreeId t) {
      return t == kLeaf ? RingValue(1) : h.coeff(MonoidElement{OperadId::Dup, t, 0});
    };
    for (int nl = 0; nl <= max_order - 1 && ck.ok; ++nl)
      for (int nr = 0; nl + nr + 1 <= max_order && ck.ok; ++nr)
        for (TreeId ul : trees_of_order(nl))
          for (TreeId ur : trees_of_order(nr)) {
            TreeId u = over(ul, v_wrap(ur));
            ck.expect(h_at(u) == h_at(ul) * h_at(v_wrap(ur)),
                      "h_{ul / V(ur)} != h_{ul} h_{V(ur)} at " + tree_code(u));
            if (!ck.ok) break;
          }
  }
  return ck.result();
}

CheckResult check_factor_roundtrip(int trunc, int cases, std::uint64_t seed) {
  Checker ck{"groups/factor-under-rho-roundtrip"};
  Rng rng(seed);
  Carrier c = carrier_over_monoid();
  for (int it = 0; it < cases && ck.ok; ++it) {
    GradedSeries psi = random_diffeo(OperadId::As, trunc, rng);
    GradedSeries g = random_monoid_series(c, trunc, rng, true);
    GradedSeries eta = compose(section_comb(psi, CombSide::Right, SectionKind::Dif),
                               embed_lambda_rho(g, EmbedSide::Rho, dup_over_generator()));
    UnderRhoFactorization fac = factor_under_rho(eta);
    ck.expect(fac.psi == psi, "recovered psi differs");
    ck.expect(fac.g == g, "recovered g differs");
    GradedSeries back = compose(section_comb(fac.psi, CombSide::Right, SectionKind::Dif),
                                embed_lambda_rho(fac.g, EmbedSide::Rho, dup_over_generator()));
    ck.expect(back == eta, "recomposition differs from eta");
  }
  // Frozen example: eta = x^vtx + a x^AB + b x^BA at N=1.
  {
    GradedSeries eta = identity_diffeo(OperadId::Dup, 1);
    eta.set_coeff(MonoidElement{OperadId::Dup, over(tree_vtx(), tree_vtx()), 0},
                  RingValue(Rational(2)));
    eta.set_coeff(MonoidElement{OperadId::Dup, under(tree_vtx(), tree_vtx()), 0},
                  RingValue(Rational(5)));
    UnderRhoFactorization fac = factor_under_rho(eta);
    ck.expect(fac.psi.coeff(MonoidElement{OperadId::As, 2, 0}) == RingValue(Rational(5)),
              "psi_2 should pick up the BA coefficient");
    ck.expect(fac.g.coeff(MonoidElement{OperadId::Dup, tree_vtx(), 0}) == RingValue(Rational(2)),
              "g_vtx should pick up the AB coefficient");
  }
  return ck.result();
}

CheckResult check_projection_homomorphism(int trunc, int cases, std::uint64_t seed) {
  Checker ck{"groups/order-projection-homomorphism"};
  Rng rng(seed);
  for (int it = 0; it < cases && ck.ok; ++it) {
    for (Carrier c : {carrier_over_monoid(), carrier_under_monoid()}) {
      GradedSeries f = random_monoid_series(c, trunc, rng, true);
      GradedSeries g = random_monoid_series(c, trunc, rng, true);
      ck.expect(project_order(mul_monoid(f, g)) == mul_monoid(project_order(f), project_order(g)),
                "pi not multiplicative");
      ck.expect(project_order(inv_monoid(f)) == inv_monoid(project_order(f)),
                "pi does not commute with inversion");
    }
    GradedSeries phi = random_diffeo(OperadId::Dup, trunc, rng);
    GradedSeries psi = random_diffeo(OperadId::Dup, trunc, rng);
    ck.expect(project_order(compose(phi, psi)) == compose(project_order(phi), project_order(psi)),
              "pi not compositional");
    GradedSeries f = random_monoid_series(carrier_over_monoid(), trunc, rng, true);
    ck.expect(project_order(act(f, psi)) == act(project_order(f), project_order(psi)),
              "pi does not intertwine the action");
    SemidirectElement A{phi, f};
    SemidirectElement B{psi, random_monoid_series(carrier_over_monoid(), trunc, rng, true)};
    SemidirectElement AB = semidirect_mul(A, B);
    ck.expect(project_order(AB.phi) == compose(project_order(A.phi), project_order(B.phi)) &&
                  project_order(AB.f) ==
                      mul_monoid(act(project_order(A.f), project_order(B.phi)),
                                 project_order(B.f)),
              "pi not a semidirect homomorphism");
  }
  return ck.result();
}

CheckResult check_sections(int trunc, int cases, std::uint64_t seed) {
  Checker ck{"groups/comb-sections"};
  Rng rng(seed);
  for (int it = 0; it < cases && ck.ok; ++it) {
    GradedSeries s = random_monoid_series(carrier_as_monoid(), trunc, rng, true);
    GradedSeries t = random_monoid_series(carrier_as_monoid(), trunc, rng, true);
    for (CombSide side : {CombSide::Left, CombSide::Right}) {
      GradedSeries sec = section_comb(s, side, SectionKind::Inv);
      ck.expect(project_order(sec) == s, "pi o section != id (inv)");
      ck.expect(section_comb(mul_monoid(s, t), side, SectionKind::Inv) ==
                    mul_monoid(sec, section_comb(t, side, SectionKind::Inv)),
                "inv section is not a monoid-group morphism");
    }
    GradedSeries phi = random_diffeo(OperadId::As, trunc, rng);
    GradedSeries psi = random_diffeo(OperadId::As, trunc, rng);
    for (CombSide side : {CombSide::Left, CombSide::Right}) {
      GradedSeries sec = section_comb(phi, side, SectionKind::Dif);
      ck.expect(project_order(sec) == phi, "pi o section != id (dif)");
      ck.expect(section_comb(compose(phi, psi), side, SectionKind::Dif) ==
                    compose(sec, section_comb(psi, side, SectionKind::Dif)),
                "dif section is not a group morphism");
    }
  }
  return ck.result();
}

namespace {

GradedSeries graft_series(const GradedSeries& a, const GradedSeries& b, bool is_over, int trunc) {
  GradedSeries out(Carrier::operad(OperadId::Dup), trunc);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      TreeId t = is_over ? over(ka.tree(), kb.tree()) : under(ka.tree(), kb.tree());
      if (tree_order(t) - 1 <= trunc) out.add_coeff(MonoidElement{OperadId::Dup, t, 0}, ca * cb);
    }
  return out;
}

GradedSeries tree_power(TreeId t, const GradedSeries& psi,
                        std::map<TreeId, GradedSeries>& memo) {
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  GradedSeries res = psi;
  if (t != tree_vtx()) {
    TreeId tl = tree_left(t), tr = tree_right(t);
    if (tl != kLeaf) res = graft_series(tree_power(tl, psi, memo), psi, true, psi.truncation());
    if (tr != kLeaf)
      res = graft_series(res, tree_power(tr, psi, memo), false, psi.truncation());
  }
  memo.emplace(t, res);
  return res;
}

}  // namespace

CheckResult check_compose_power_expansion(int trunc, int cases, std::uint64_t seed) {
  Checker ck{"groups/compose-vs-power-expansion"};
  Rng rng(seed);
  for (int it = 0; it < cases && ck.ok; ++it) {
    GradedSeries phi = random_diffeo(OperadId::Dup, trunc, rng);
    GradedSeries psi = random_diffeo(OperadId::Dup, trunc, rng);
    std::map<TreeId, GradedSeries> memo;
    GradedSeries expansion(Carrier::operad(OperadId::Dup), trunc);
    for (const auto& [k, c] : phi.terms()) {
      GradedSeries pw = tree_power(k.tree(), psi, memo);
      for (const auto& [pk, pc] : pw.terms()) expansion.add_coeff(pk, c * pc);
    }
    ck.expect(compose(phi, psi) == expansion, "compose differs from power expansion");
  }
  return ck.result();
}

CheckResult check_as_classic_oracle(int trunc, int cases, std::uint64_t seed) {
  Checker ck{"groups/as-carrier-vs-classic-oracle"};
  Rng rng(seed);
  for (int it = 0; it < cases && ck.ok; ++it) {
    GradedSeries f = random_monoid_series(carrier_as_monoid(), trunc, rng, true);
    GradedSeries g = random_monoid_series(carrier_as_monoid(), trunc, rng, true);
    Classic cf = as_to_classic(f, trunc), cg = as_to_classic(g, trunc);
    ck.expect(classic_eq(as_to_classic(mul_monoid(f, g), trunc), cmul(cf, cg, trunc), trunc),
              "monoid multiplication differs from classic product");
    ck.expect(classic_eq(as_to_classic(inv_monoid(f), trunc), cinv_mul(cf, trunc), trunc),
              "monoid inverse differs from classic inverse");

    GradedSeries phi = random_diffeo(OperadId::As, trunc, rng);
    GradedSeries psi = random_diffeo(OperadId::As, trunc, rng);
    int deg = trunc + 1;
    Classic cphi = as_to_classic(phi, deg), cpsi = as_to_classic(psi, deg);
    ck.expect(classic_eq(as_to_classic(compose(phi, psi), deg), ccompose(cphi, cpsi, deg), deg),
              "composition differs from classic substitution");
    Classic cinv = as_to_classic(comp_inverse(phi), deg);
    Classic round = ccompose(cphi, cinv, deg);
    Classic idc(deg + 1);
    idc[1] = RingValue(1);
    ck.expect(classic_eq(round, idc, deg), "classic round trip of comp_inverse failed");
    ck.expect(classic_eq(as_to_classic(act(f, psi), trunc), ccompose(cf, cpsi, trunc), trunc),
              "action differs from classic substitution");
  }
  return ck.result();
}

// ----------------------------------------------------------------- hopf ----

namespace {

AlgebraKind kind_of(HopfFamily fam, bool comm) { return AlgebraKind{fam, comm}; }

std::vector<Gen> generators_of(AlgebraKind k, int max_grading) {
  std::vector<Gen> out;
  switch (k.fam) {
    case HopfFamily::InvOver:
    case HopfFamily::InvUnder:
    case HopfFamily::RhoY:
      for (int n = 1; n <= max_grading; ++n)
        for (TreeId t : trees_of_order(n)) out.push_back(t);
      break;
    case HopfFamily::DifY:
      for (int n = 2; n <= max_grading + 1; ++n)
        for (TreeId t : trees_of_order(n)) out.push_back(t);
      break;
    case HopfFamily::AlphaY:
      for (int n = 0; n + 1 <= max_grading; ++n)
        for (TreeId t : trees_of_order(n)) out.push_back(v_wrap(t));
      break;
    case HopfFamily::FdB:
    case HopfFamily::Sym:
      for (int n = 1; n <= max_grading; ++n) out.push_back(n);
      break;
  }
  return out;
}

Tensor3 t3_delta_left(AlgebraKind k, const Tensor2& d) {
  Tensor3 out(k, k, k);
  for (const auto& [wz, c] : d.terms()) {
    Tensor2 dl = coproduct_word(k, wz.first);
    for (const auto& [ab, q] : dl.terms()) out.add({ab.first, ab.second, wz.second}, c * q);
  }
  return out;
}

Tensor3 t3_delta_right(AlgebraKind k, const Tensor2& d) {
  Tensor3 out(k, k, k);
  for (const auto& [wz, c] : d.terms()) {
    Tensor2 dr = coproduct_word(k, wz.second);
    for (const auto& [ab, q] : dr.terms()) out.add({wz.first, ab.first, ab.second}, c * q);
  }
  return out;
}

std::vector<AlgebraKind> all_hopf_kinds() {
  std::vector<AlgebraKind> kinds;
  for (HopfFamily fam : {HopfFamily::InvOver, HopfFamily::InvUnder, HopfFamily::DifY,
                         HopfFamily::RhoY, HopfFamily::AlphaY, HopfFamily::FdB, HopfFamily::Sym})
    for (bool comm : {false, true}) kinds.push_back(kind_of(fam, comm));
  return kinds;
}

std::string kind_name(AlgebraKind k) {
  std::string base;
  switch (k.fam) {
    case HopfFamily::InvOver: base = "inv-over"; break;
    case HopfFamily::InvUnder: base = "inv-under"; break;
    case HopfFamily::DifY: base = "dif"; break;
    case HopfFamily::RhoY: base = "rho"; break;
    case HopfFamily::AlphaY: base = "alpha"; break;
    case HopfFamily::FdB: base = "fdb"; break;
    case HopfFamily::Sym: base = "sym"; break;
  }
  return base + (k.comm ? "-comm" : "-nc");
}

}  // namespace

CheckResult check_golden_tables() {
  Checker ck{"hopf/golden-coproduct-tables"};
  auto T = [](const char* expr) { return parse_tree(expr); };
  TreeId vtx = T("v"), AB = T("v/v"), BA = T("v\\v"), ABC = T("v/v/v"), BAC = T("(v\\v)/v"),
         ACA = T("v/v\\v"), CAB = T("v\\(v/v)"), CBA = T("v\\v\\v");

  // Delta^dif on the seven generators of the small-tree table.
  {
    AlgebraKind k = kind_of(HopfFamily::DifY, false);
    auto expect = [&](TreeId u, std::vector<std::tuple<TreeId, std::vector<TreeId>, long>> rows) {
      Tensor2 want(k, k);
      for (auto& [l, r, c] : rows) want.add(make_word(k, {l}), make_word(k, r), Rational(c));
      ck.expect(coprod_dif(u) == want, "Delta^dif mismatch at " + tree_code(u));
    };
    expect(AB, {{AB, {}, 1}, {vtx, {AB}, 1}});
    expect(BA, {{BA, {}, 1}, {vtx, {BA}, 1}});
    expect(ABC, {{ABC, {}, 1}, {AB, {AB}, 2}, {vtx, {ABC}, 1}});
    expect(BAC, {{BAC, {}, 1}, {AB, {BA}, 1}, {vtx, {BAC}, 1}});
    expect(ACA, {{ACA, {}, 1}, {AB, {BA}, 1}, {BA, {AB}, 1}, {vtx, {ACA}, 1}});
    expect(CAB, {{CAB, {}, 1}, {BA, {AB}, 1}, {vtx, {CAB}, 1}});
    expect(CBA, {{CBA, {}, 1}, {BA, {BA}, 2}, {vtx, {CBA}, 1}});
  }
  // delta^inv on the eight generators of the coaction table.
  {
    AlgebraKind lk = kind_of(HopfFamily::InvOver, false);
    AlgebraKind rk = kind_of(HopfFamily::DifY, false);
    auto expect = [&](TreeId u, std::vector<std::tuple<TreeId, std::vector<TreeId>, long>> rows) {
      Tensor2 want(lk, rk);
      for (auto& [l, r, c] : rows) want.add(make_word(lk, {l}), make_word(rk, r), Rational(c));
      ck.expect(coact_inv(u) == want, "delta^inv mismatch at " + tree_code(u));
    };
    expect(vtx, {{vtx, {}, 1}});
    expect(AB, {{AB, {}, 1}, {vtx, {AB}, 1}});
    expect(BA, {{BA, {}, 1}, {vtx, {BA}, 1}});
    expect(ABC, {{ABC, {}, 1}, {AB, {AB}, 2}, {vtx, {ABC}, 1}});
    expect(BAC, {{BAC, {}, 1}, {AB, {BA}, 1}, {vtx, {BAC}, 1}});
    expect(ACA, {{ACA, {}, 1}, {AB, {BA}, 1}, {BA, {AB}, 1}, {vtx, {ACA}, 1}});
    expect(CAB, {{CAB, {}, 1}, {BA, {AB}, 1}, {vtx, {CAB}, 1}});
    expect(CBA, {{CBA, {}, 1}, {BA, {BA}, 2}, {vtx, {CBA}, 1}});
  }
  // Delta^rho on the eight generators of its table.
  {
    AlgebraKind k = kind_of(HopfFamily::RhoY, false);
    auto expect = [&](TreeId u, std::vector<std::tuple<std::vector<TreeId>, std::vector<TreeId>,
                                                       long>> rows) {
      Tensor2 want(k, k);
      for (auto& [l, r, c] : rows) want.add(make_word(k, l), make_word(k, r), Rational(c));
      ck.expect(coprod_rho(u) == want, "Delta^rho mismatch at " + tree_code(u));
    };
    expect(vtx, {{{vtx}, {}, 1}, {{}, {vtx}, 1}});
    expect(AB, {{{AB}, {}, 1}, {{vtx}, {vtx}, 2}, {{}, {AB}, 1}});
    expect(BA, {{{BA}, {}, 1}, {{}, {BA}, 1}});
    expect(ABC, {{{ABC}, {}, 1},
                 {{AB}, {vtx}, 3},
                 {{vtx}, {AB}, 2},
                 {{vtx}, {vtx, vtx}, 1},
                 {{}, {ABC}, 1}});
    expect(BAC, {{{BAC}, {}, 1}, {{BA}, {vtx}, 1}, {{vtx}, {BA}, 1}, {{}, {BAC}, 1}});
    expect(ACA, {{{ACA}, {}, 1}, {{BA}, {vtx}, 1}, {{vtx}, {BA}, 1}, {{}, {ACA}, 1}});
    expect(CAB, {{{CAB}, {}, 1}, {{BA}, {vtx}, 1}, {{}, {CAB}, 1}});
    expect(CBA, {{{CBA}, {}, 1}, {{}, {CBA}, 1}});
  }
  return ck.result();
}

CheckResult check_coassociativity(int max_grading) {
  Checker ck{"hopf/coassociativity"};
  for (AlgebraKind k : all_hopf_kinds()) {
    for (Gen g : generators_of(k, max_grading)) {
      Tensor2 d = kind_coproduct(k, g);
      ck.expect(t3_delta_left(k, d) == t3_delta_right(k, d),
                "coassociativity failed for " + kind_name(k) + " at " + gen_str(k, g));
      if (!ck.ok) return ck.result();
    }
  }
  return ck.result();
}

CheckResult check_counit_axioms(int max_grading) {
  Checker ck{"hopf/counit-axioms"};
  for (AlgebraKind k : all_hopf_kinds()) {
    for (Gen g : generators_of(k, max_grading)) {
      Tensor2 d = kind_coproduct(k, g);
      FreeElement left(k), right(k);
      for (const auto& [wz, c] : d.terms()) {
        if (wz.first.empty()) left.add(wz.second, c);
        if (wz.second.empty()) right.add(wz.first, c);
      }
      FreeElement gen = FreeElement::generator(k, g);
      ck.expect(left == gen, "(eps (x) id) Delta != id for " + kind_name(k) + " at " +
                                 gen_str(k, g));
      ck.expect(right == gen, "(id (x) eps) Delta != id for " + kind_name(k) + " at " +
                                  gen_str(k, g));
      if (!ck.ok) return ck.result();
    }
  }
  return ck.result();
}

CheckResult check_antipode(int max_grading) {
  Checker ck{"hopf/antipode-identities"};
  for (AlgebraKind k : all_hopf_kinds()) {
    for (Gen g : generators_of(k, max_grading)) {
      Tensor2 d = kind_coproduct(k, g);
      FreeElement left(k), right(k);
      for (const auto& [wz, c] : d.terms()) {
        FreeElement sl = antipode_word(k, wz.first);
        FreeElement rr(k);
        rr.add(wz.second, c);
        left = left + sl * rr;
        FreeElement ll(k);
        ll.add(wz.first, c);
        right = right + ll * antipode_word(k, wz.second);
      }
      ck.expect(left.is_zero(), "m(S (x) id)Delta != unit eps for " + kind_name(k) + " at " +
                                    gen_str(k, g));
      ck.expect(right.is_zero(), "m(id (x) S)Delta != unit eps for " + kind_name(k) + " at " +
                                     gen_str(k, g));
      if (!ck.ok) return ck.result();
    }
  }
  return ck.result();
}

namespace {

Tensor2 coact_word(HopfFamily left_fam, const Word& w) {
  AlgebraKind lk{left_fam, false};
  AlgebraKind rk{HopfFamily::DifY, false};
  Tensor2 acc(lk, rk);
  acc.add({}, {}, Rational(1));
  for (Gen g : w) acc = acc * coact_inv(g, left_fam);
  return acc;
}

}  // namespace

CheckResult check_comodule_axioms(int max_order) {
  Checker ck{"hopf/comodule-coalgebra-axioms"};
  AlgebraKind dif{HopfFamily::DifY, false};
  for (CombSide side : {CombSide::Left, CombSide::Right}) {
    HopfFamily fam = side == CombSide::Left ? HopfFamily::InvOver : HopfFamily::InvUnder;
    AlgebraKind inv{fam, false};
    for (int n = 1; n <= max_order; ++n) {
      for (TreeId u : trees_of_order(n)) {
        Tensor2 d = coact_inv(u, fam);
        // (delta (x) Id) delta = (Id (x) Delta^dif) delta
        Tensor3 lhs(inv, dif, dif), rhs(inv, dif, dif);
        for (const auto& [wz, c] : d.terms()) {
          Tensor2 dl = coact_word(fam, wz.first);
          for (const auto& [ab, q] : dl.terms())
            lhs.add({ab.first, ab.second, wz.second}, c * q);
          Tensor2 dr = coproduct_word(dif, wz.second);
          for (const auto& [ab, q] : dr.terms())
            rhs.add({wz.first, ab.first, ab.second}, c * q);
        }
        ck.expect(lhs == rhs, "coaction coassociativity failed at " + tree_code(u));
        // counit leg: (Id (x) eps) delta = Id
        FreeElement cnt(inv);
        for (const auto& [wz, c] : d.terms())
          if (wz.second.empty()) cnt.add(wz.first, c);
        ck.expect(cnt == FreeElement::generator(inv, u), "coaction counit failed");
        // (Delta^inv (x) Id) delta = (Id,Id,m)(Id,tau,Id)(delta (x) delta) Delta^inv
        Tensor3 lhs2(inv, inv, dif), rhs2(inv, inv, dif);
        for (const auto& [wz, c] : d.terms()) {
          Tensor2 di = coproduct_word(inv, wz.first);
          for (const auto& [ab, q] : di.terms())
            lhs2.add({ab.first, ab.second, wz.second}, c * q);
        }
        Tensor2 dinv = coprod_inv(u, side);
        for (const auto& [ab, c] : dinv.terms()) {
          Tensor2 da = coact_word(fam, ab.first);
          Tensor2 db = coact_word(fam, ab.second);
          for (const auto& [a12, ca] : da.terms())
            for (const auto& [b12, cb] : db.terms())
              rhs2.add({a12.first, b12.first, word_concat(dif, a12.second, b12.second)},
                       c * ca * cb);
        }
        ck.expect(lhs2 == rhs2, "comodule-coalgebra compatibility failed at " + tree_code(u));
        if (!ck.ok) return ck.result();
      }
    }
  }
  return ck.result();
}

CheckResult check_rho_coactions(int max_order) {
  Checker ck{"hopf/rho-coactions"};
  AlgebraKind rho{HopfFamily::RhoY, false};
  AlgebraKind dif{HopfFamily::DifY, false};
  for (int n = 1; n <= max_order; ++n) {
    for (TreeId u : trees_of_order(n)) {
      // delta^dif on H^rho is a coaction of H^dif.
      Tensor2 d = coact_inv(u, HopfFamily::RhoY);
      Tensor3 lhs(rho, dif, dif), rhs(rho, dif, dif);
      for (const auto& [wz, c] : d.terms()) {
        Tensor2 dl = coact_word(HopfFamily::RhoY, wz.first);
        for (const auto& [ab, q] : dl.terms())
          lhs.add({ab.first, ab.second, wz.second}, c * q);
        Tensor2 dr = coproduct_word(dif, wz.second);
        for (const auto& [ab, q] : dr.terms())
          rhs.add({wz.first, ab.first, ab.second}, c * q);
      }
      ck.expect(lhs == rhs, "delta^dif coaction coassociativity failed at " + tree_code(u));
      // delta^rho is a coaction of H^rho along Delta^rho.
      Tensor2 dr = coact_rho(u);
      Tensor3 lhs2(rho, rho, rho), rhs2(rho, rho, rho);
      for (const auto& [wz, c] : dr.terms()) {
        Tensor2 acc(rho, rho);
        acc.add({}, {}, Rational(1));
        for (Gen g : wz.first) acc = acc * coact_rho(g);
        for (const auto& [ab, q] : acc.terms()) lhs2.add({ab.first, ab.second, wz.second}, c * q);
        Tensor2 dw = coproduct_word(rho, wz.second);
        for (const auto& [ab, q] : dw.terms())
          rhs2.add({wz.first, ab.first, ab.second}, c * q);
      }
      ck.expect(lhs2 == rhs2, "delta^rho coaction coassociativity failed at " + tree_code(u));
      // Delta^rho(V(u)) = 1 (x) V(u) + delta^rho(V(u)).
      Tensor2 want = coact_rho(v_wrap(u));
      want.add({}, make_word(rho, {v_wrap(u)}), Rational(1));
      ck.expect(coprod_rho(v_wrap(u)) == want, "Delta^rho(V(u)) decomposition failed");
      if (!ck.ok) return ck.result();
    }
  }
  return ck.result();
}

CheckResult check_ddif_coincides(int max_order) {
  Checker ck{"hopf/ddif-coincides-with-dinv"};
  AlgebraKind lk{HopfFamily::InvOver, false};
  AlgebraKind rk{HopfFamily::DifY, false};
  for (int n = 1; n <= max_order; ++n) {
    for (TreeId u : trees_of_order(n)) {
      // Independent brute-force route for the shared coaction formula.
      Tensor2 brute(lk, rk);
      for (int k = 1; k <= n; ++k) {
        std::vector<TreeId> cur;
        for (TreeId p : trees_of_order(k)) {
          auto rec = [&](auto&& self, int slots, int rest) -> void {
            if (slots == 0) {
              if (rest == 0 && mu_apply(p, cur) == u)
                brute.add(make_word(lk, {p}), make_word(rk, cur), Rational(1));
              return;
            }
            for (int d = 1; d + (slots - 1) <= rest; ++d)
              for (TreeId s : trees_of_order(d)) {
                cur.push_back(s);
                self(self, slots - 1, rest - d);
                cur.pop_back();
              }
          };
          rec(rec, k, n);
        }
      }
      ck.expect(coact_inv(u) == brute, "delta^inv disagrees with brute force at " + tree_code(u));
      // The rho-side coaction is formally the same expression.
      Tensor2 a = coact_inv(u, HopfFamily::InvOver);
      Tensor2 b = coact_inv(u, HopfFamily::RhoY);
      ck.expect(a.terms() == b.terms(), "delta^dif and delta^inv differ at " + tree_code(u));
      if (!ck.ok) return ck.result();
    }
  }
  return ck.result();
}

CheckResult check_alpha_two_routes(int max_order) {
  Checker ck{"hopf/alpha-nonrecursive-vs-recursive"};
  for (bool comm : {false, true})
    for (int n = 0; n <= max_order - 1; ++n)
      for (TreeId t : trees_of_order(n)) {
        ck.expect(coprod_alpha(t, comm) == coprod_alpha_recursive(t, comm),
                  "Delta^alpha routes disagree at V(" + tree_code(t) + ")");
        if (!ck.ok) return ck.result();
      }
  return ck.result();
}

CheckResult check_fdb_abelianization(int max_n) {
  Checker ck{"hopf/fdb-comm-equals-abelianized-nc"};
  for (int n = 1; n <= max_n; ++n) {
    ck.expect(fdb_coproduct(n, FdbVariant::Comm) == abelianize(fdb_coproduct(n, FdbVariant::Nc)),
              "FdB multinomial formula != abelianized nc formula at n=" + std::to_string(n));
    if (!ck.ok) return ck.result();
  }
  return ck.result();
}

CheckResult check_cocommutativity_dichotomy() {
  Checker ck{"hopf/cocommutativity-dichotomy"};
  for (int n = 1; n <= 6; ++n) {
    Tensor2 d = fdb_coproduct(n, FdbVariant::Sym);
    ck.expect(d == d.twist(), "Delta^inv over As is not cocommutative at n=" + std::to_string(n));
  }
  for (TreeId t : trees_of_order(2)) {
    Tensor2 d = coprod_inv(t, CombSide::Left);
    ck.expect(d == d.twist(), "unexpected order-2 non-cocommutative generator");
  }
  bool witness = false;
  for (TreeId t : trees_of_order(3)) {
    Tensor2 d = coprod_inv(t, CombSide::Left);
    if (!(d == d.twist())) witness = true;
  }
  ck.expect(witness, "no non-cocommutative witness at order 3");
  return ck.result();
}

CheckResult check_hopf_morphisms(int max_n) {
  Checker ck{"hopf/embedding-and-section-morphisms"};
  for (int n = 1; n <= max_n; ++n) {
    for (CombSide side : {CombSide::Left, CombSide::Right}) {
      HopfFamily fam = side == CombSide::Left ? HopfFamily::InvOver : HopfFamily::InvUnder;
      AlgebraKind inv{fam, false};
      AlgebraKind symnc{HopfFamily::Sym, false};
      // b_n -> sum of trees of order n intertwines the coproducts.
      Tensor2 lhs = coproduct_elem(embed_b(n, side));
      Tensor2 rhs = apply_morphism2(
          sym_coproduct(n, false), inv, inv, [&](Gen k) { return embed_b(k, side); },
          [&](Gen k) { return embed_b(k, side); });
      ck.expect(lhs == rhs, "embed_b is not a coalgebra morphism at n=" + std::to_string(n));
      // The comb section is a left inverse and a coalgebra morphism.
      FreeElement back = apply_morphism(embed_b(n, side), symnc,
                                        [&](Gen t) { return section_b(t, side); });
      ck.expect(back == FreeElement::generator(symnc, n), "section_b o embed_b != id");
      for (TreeId u : trees_of_order(n)) {
        Tensor2 sl = apply_morphism2(
            coprod_inv(u, side), symnc, symnc, [&](Gen t) { return section_b(t, side); },
            [&](Gen t) { return section_b(t, side); });
        Tensor2 sr = u == comb(n, side) ? sym_coproduct(n, false) : Tensor2(symnc, symnc);
        ck.expect(sl == sr, "section_b is not a coalgebra morphism at " + tree_code(u));
        if (!ck.ok) return ck.result();
      }
    }
    // a_n -> sum of trees of order n+1 against the nc Faa di Bruno formula.
    AlgebraKind dif{HopfFamily::DifY, false};
    AlgebraKind fdbnc{HopfFamily::FdB, false};
    Tensor2 lhs = coproduct_elem(embed_a(n));
    Tensor2 rhs = apply_morphism2(
        fdb_coproduct(n, FdbVariant::Nc), dif, dif, [&](Gen k) { return embed_a(k); },
        [&](Gen k) { return embed_a(k); });
    ck.expect(lhs == rhs, "embed_a is not a coalgebra morphism at n=" + std::to_string(n));
    for (CombSide side : {CombSide::Left, CombSide::Right}) {
      FreeElement back =
          apply_morphism(embed_a(n), fdbnc, [&](Gen t) { return section_a(t, side); });
      ck.expect(back == FreeElement::generator(fdbnc, n), "section_a o embed_a != id");
      for (TreeId u : trees_of_order(n + 1)) {
        Tensor2 sl = apply_morphism2(
            coprod_dif(u), fdbnc, fdbnc, [&](Gen t) { return section_a(t, side); },
            [&](Gen t) { return section_a(t, side); });
        Tensor2 sr =
            u == comb(n + 1, side) ? fdb_coproduct(n, FdbVariant::Nc) : Tensor2(fdbnc, fdbnc);
        ck.expect(sl == sr, "section_a is not a coalgebra morphism at " + tree_code(u));
        if (!ck.ok) return ck.result();
      }
    }
  }
  return ck.result();
}

CheckResult check_projection_identities(int max_order) {
  Checker ck{"hopf/projection-identities"};
  AlgebraKind rho{HopfFamily::RhoY, false};
  AlgebraKind alpha{HopfFamily::AlphaY, false};
  for (int n = 1; n <= max_order; ++n) {
    for (TreeId u : trees_of_order(n)) {
      // (P (x) P) Delta^dif(u . id) = Delta^rho(u)
      Tensor2 lhs = apply_morphism2(
          coprod_dif(over(u, tree_vtx())), rho, rho, [](Gen t) { return project_P(t); },
          [](Gen t) { return project_P(t); });
      ck.expect(lhs == coprod_rho(u), "(P,P) Delta^dif(u.id) != Delta^rho(u) at " + tree_code(u));
      // (R (x) R) Delta^rho(u) = Delta^alpha(R(u))
      Tensor2 lhs2 = apply_morphism2(
          coprod_rho(u), alpha, alpha, [](Gen t) { return project_R_word({t}); },
          [](Gen t) { return project_R_word({t}); });
      Word ru = make_word(rho, {u});
      Tensor2 rhs2(alpha, alpha);
      {
        // Delta^alpha of the product R(u) = V(u_1)...V(u_k).
        Tensor2 acc(alpha, alpha);
        acc.add({}, {}, Rational(1));
        for (TreeId p : over_factorize(u)) acc = acc * coprod_alpha(p);
        rhs2 = acc;
      }
      ck.expect(lhs2 == rhs2, "(R,R) Delta^rho(u) != Delta^alpha(R(u)) at " + tree_code(u));
      // (R (x) R) delta^rho(V(u)) = delta^alpha(V(u))
      Tensor2 lhs3 = apply_morphism2(
          coact_rho(v_wrap(u)), alpha, alpha, [](Gen t) { return project_R_word({t}); },
          [](Gen t) { return project_R_word({t}); });
      ck.expect(lhs3 == coact_alpha(u),
                "(R,R) delta^rho(V(u)) != delta^alpha(V(u)) at " + tree_code(u));
      if (!ck.ok) return ck.result();
    }
  }
  return ck.result();
}

// -------------------------------------------------------------- duality ----

CheckResult check_duality(GroupId g, int trunc, int pairs, std::uint64_t seed) {
  Checker ck{"duality/" + group_name(g)};
  Rng rng(seed);
  for (int it = 0; it < pairs && ck.ok; ++it) {
    switch (g) {
      case GroupId::OverMonoid:
      case GroupId::UnderMonoid: {
        bool is_over = g == GroupId::OverMonoid;
        Carrier c = is_over ? carrier_over_monoid() : carrier_under_monoid();
        GradedSeries f = random_monoid_series(c, trunc, rng, true);
        GradedSeries h = random_monoid_series(c, trunc, rng, true);
        GradedSeries prod = mul_monoid(f, h);
        Character chi = [&](Gen t) { return f.coeff(MonoidElement{OperadId::Dup, t, 0}); };
        Character xi = [&](Gen t) { return h.coeff(MonoidElement{OperadId::Dup, t, 0}); };
        for (int n = 1; n <= trunc && ck.ok; ++n)
          for (TreeId u : trees_of_order(n)) {
            RingValue want = character_convolve(
                chi, xi, coprod_inv(u, is_over ? CombSide::Left : CombSide::Right));
            ck.expect(prod.coeff(MonoidElement{OperadId::Dup, u, 0}) == want,
                      "pairing failed at " + tree_code(u));
            if (!ck.ok) break;
          }
        break;
      }
      case GroupId::DifDup: {
        GradedSeries phi = random_diffeo(OperadId::Dup, trunc, rng);
        GradedSeries psi = random_diffeo(OperadId::Dup, trunc, rng);
        GradedSeries comp = compose(phi, psi);
        Character chi = [&](Gen t) { return phi.coeff(MonoidElement{OperadId::Dup, t, 0}); };
        Character xi = [&](Gen t) { return psi.coeff(MonoidElement{OperadId::Dup, t, 0}); };
        for (int n = 1; n <= trunc + 1 && ck.ok; ++n)
          for (TreeId u : trees_of_order(n)) {
            RingValue want = character_convolve(chi, xi, coprod_dif(u));
            ck.expect(comp.coeff(MonoidElement{OperadId::Dup, u, 0}) == want,
                      "pairing failed at " + tree_code(u));
            if (!ck.ok) break;
          }
        break;
      }
      case GroupId::RhoOver: {
        Carrier c = carrier_over_monoid();
        OperadElement p2 = dup_over_generator();
        GradedSeries f = random_monoid_series(c, trunc, rng, true);
        GradedSeries h = random_monoid_series(c, trunc, rng, true);
        GradedSeries comp = compose(embed_lambda_rho(f, EmbedSide::Rho, p2),
                                    embed_lambda_rho(h, EmbedSide::Rho, p2));
        GradedSeries hh = extract_lambda_rho(comp, EmbedSide::Rho, p2);
        Character chi = [&](Gen t) { return f.coeff(MonoidElement{OperadId::Dup, t, 0}); };
        Character xi = [&](Gen t) { return h.coeff(MonoidElement{OperadId::Dup, t, 0}); };
        for (int n = 1; n <= trunc && ck.ok; ++n)
          for (TreeId u : trees_of_order(n)) {
            RingValue want = character_convolve(chi, xi, coprod_rho(u));
            ck.expect(hh.coeff(MonoidElement{OperadId::Dup, u, 0}) == want,
                      "Eq. h_u pairing failed at " + tree_code(u));
            if (!ck.ok) break;
          }
        break;
      }
      case GroupId::Alpha: {
        Carrier c = carrier_over_monoid();
        OperadElement p2 = dup_over_generator();
        GradedSeries a = alpha_from(random_monoid_series(c, trunc - 1, rng, false, true), trunc);
        GradedSeries b = alpha_from(random_monoid_series(c, trunc - 1, rng, false, true), trunc);
        GradedSeries fa = extract_lambda_rho(a, EmbedSide::Rho, p2);
        GradedSeries fb = extract_lambda_rho(b, EmbedSide::Rho, p2);
        GradedSeries h = extract_lambda_rho(compose(a, b), EmbedSide::Rho, p2);
        Character chi = [&](Gen vt) { return fa.coeff(MonoidElement{OperadId::Dup, vt, 0}); };
        Character xi = [&](Gen vt) { return fb.coeff(MonoidElement{OperadId::Dup, vt, 0}); };
        for (int n = 0; n + 1 <= trunc && ck.ok; ++n)
          for (TreeId u : trees_of_order(n)) {
            RingValue want = character_convolve(chi, xi, coprod_alpha(u));
            ck.expect(h.coeff(MonoidElement{OperadId::Dup, v_wrap(u), 0}) == want,
                      "Eq. h_{V(u)} pairing failed at V(" + tree_code(u) + ")");
            if (!ck.ok) break;
          }
        break;
      }
      default:
        return fail(ck.name, "no duality pairing for this group");
    }
  }
  return ck.result();
}

// ------------------------------------------------------------- suites ----

std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt) {
  std::vector<CheckResult> out;
  auto add = [&](CheckResult r) { out.push_back(std::move(r)); };
  int n = opt.n;
  int cases = opt.cases;
  std::uint64_t seed = opt.seed;
  bool all = suite == "all";
  if (suite == "trees" || all) {
    add(check_catalan(std::min(10, n + 6)));
    add(check_duplicial_relations(std::min(6, n + 3)));
    add(check_mirror(std::min(6, n + 3)));
    add(check_mu_identity(std::min(6, n + 2)));
    add(check_mu_associativity(std::min(6, n + 3), cases * 4, seed + 1));
    add(check_decompositions_oracle(std::min(6, n + 2)));
    add(check_over_factorize(std::min(7, n + 3)));
    add(check_codec_roundtrip(8, cases * 8, seed + 2));
  }
  if (suite == "groups" || all) {
    for (GroupId g : {GroupId::OverMonoid, GroupId::UnderMonoid, GroupId::DifDup, GroupId::DifAs,
                      GroupId::LambdaUnder, GroupId::RhoOver, GroupId::Alpha,
                      GroupId::SemidirectOver, GroupId::SemidirectUnder})
      add(check_group_axioms(g, n, cases, seed + 10 + static_cast<int>(g)));
    add(check_action_axioms(n, cases, seed + 20));
    add(check_closure_constants(n, cases, seed + 21));
    add(check_cocycle(n, cases, seed + 22));
    add(check_action_vs_composition_witness(3));
    add(check_dif_action_formula(n, cases, seed + 23));
    add(check_alpha_closure(n, cases, seed + 24));
    add(check_alpha_multiplicativity(std::min(5, n), cases, seed + 25));
    add(check_factor_roundtrip(n, cases, seed + 26));
    add(check_projection_homomorphism(n, cases, seed + 27));
    add(check_sections(n, cases, seed + 28));
    add(check_compose_power_expansion(std::min(4, n), cases, seed + 29));
    add(check_as_classic_oracle(std::min(6, n + 2), cases, seed + 30));
  }
  if (suite == "hopf" || all) {
    add(check_golden_tables());
    add(check_coassociativity(std::min(5, n + 1)));
    add(check_counit_axioms(std::min(5, n + 1)));
    add(check_antipode(std::min(4, n)));
    add(check_comodule_axioms(std::min(4, n)));
    add(check_rho_coactions(std::min(4, n)));
    add(check_ddif_coincides(std::min(5, n + 1)));
    add(check_alpha_two_routes(std::min(4, n)));
    add(check_fdb_abelianization(6));
    add(check_cocommutativity_dichotomy());
    add(check_hopf_morphisms(std::min(4, n)));
    add(check_projection_identities(std::min(4, n)));
  }
  if (suite == "duality" || all) {
    for (GroupId g : {GroupId::OverMonoid, GroupId::UnderMonoid, GroupId::DifDup, GroupId::RhoOver,
                      GroupId::Alpha})
      add(check_duality(g, std::min(4, n), std::max(cases, 4), seed + 40 + static_cast<int>(g)));
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace tes::verify
