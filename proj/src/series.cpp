#include "tes/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tes {

OperadElement dup_over_generator() {
  return OperadElement{OperadId::Dup, over(tree_vtx(), tree_vtx()), 0};
}

OperadElement dup_under_generator() {
  return OperadElement{OperadId::Dup, under(tree_vtx(), tree_vtx()), 0};
}

Carrier carrier_over_monoid() { return Carrier::monoid(OperadId::Dup, dup_over_generator()); }
Carrier carrier_under_monoid() { return Carrier::monoid(OperadId::Dup, dup_under_generator()); }
Carrier carrier_as_monoid() {
  return Carrier::monoid(OperadId::As, OperadElement{OperadId::As, 2, 0});
}

GradedSeries::GradedSeries(Carrier carrier, int truncation)
    : carrier_(std::move(carrier)), trunc_(truncation) {
  if (trunc_ < 0) throw std::invalid_argument("GradedSeries: negative truncation");
  if (carrier_.kind == CarrierKind::Monoid) {
    if (!carrier_.p2) throw std::invalid_argument("GradedSeries: monoid carrier needs p2");
    if (!SetOperadInstance::get(carrier_.inst).is_associative(*carrier_.p2))
      throw std::invalid_argument("GradedSeries: p2 is not associative");
  }
}

int GradedSeries::key_grading(const MonoidElement& k) const {
  if (k.inst != carrier_.inst)
    throw std::invalid_argument("GradedSeries: key from a different instance");
  if (carrier_.kind == CarrierKind::Monoid) return k.grading();
  if (k.is_neutral()) throw std::invalid_argument("GradedSeries: neutral key in operad carrier");
  return k.grading() - 1;  // shifted grading deg(p) = |p| - 1
}

RingValue GradedSeries::coeff(const MonoidElement& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RingValue() : it->second;
}

void GradedSeries::set_coeff(const MonoidElement& k, RingValue v) {
  int d = key_grading(k);
  if (d > trunc_)
    throw std::invalid_argument("GradedSeries: key grading " + std::to_string(d) +
                                " exceeds truncation " + std::to_string(trunc_));
  if (v.is_zero())
    terms_.erase(k);
  else
    terms_[k] = std::move(v);
}

void GradedSeries::add_coeff(const MonoidElement& k, const RingValue& v) {
  if (v.is_zero()) return;
  set_coeff(k, coeff(k) + v);
}

std::vector<std::pair<MonoidElement, RingValue>> GradedSeries::sorted_terms() const {
  std::vector<std::pair<MonoidElement, RingValue>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return monoid_less(a.first, b.first); });
  return out;
}

bool GradedSeries::is_invertible_form() const {
  return carrier_.kind == CarrierKind::Monoid &&
         coeff(MonoidElement::neutral(carrier_.inst)).is_one();
}

bool GradedSeries::is_diffeo_form() const {
  if (carrier_.kind != CarrierKind::Operad) return false;
  return coeff(MonoidElement::of(SetOperadInstance::get(carrier_.inst).identity())).is_one();
}

std::string GradedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    std::string key = carrier_.kind == CarrierKind::Monoid ? monoid_element_str(k)
                                                           : operad_element_str(k.element());
    if (v.is_one())
      os << "x^" << key;
    else
      os << "(" << v.str() << ")*x^" << key;
  }
  if (first) os << "0";
  return os.str();
}

GradedSeries unit_series(const Carrier& c, int truncation) {
  if (c.kind != CarrierKind::Monoid) throw std::invalid_argument("unit_series: monoid carrier");
  GradedSeries s(c, truncation);
  s.set_coeff(MonoidElement::neutral(c.inst), RingValue(1));
  return s;
}

GradedSeries identity_diffeo(OperadId inst, int truncation) {
  GradedSeries s(Carrier::operad(inst), truncation);
  s.set_coeff(MonoidElement::of(SetOperadInstance::get(inst).identity()), RingValue(1));
  return s;
}

static std::string carrier_str(const Carrier& c) {
  std::string s = c.kind == CarrierKind::Monoid ? "monoid" : "operad";
  s += "/" + operad_name(c.inst);
  if (c.p2) s += "/p2=" + operad_element_str(*c.p2);
  return s;
}

static void require_same_carrier(const GradedSeries& f, const GradedSeries& g, const char* who) {
  if (!(f.carrier() == g.carrier()))
    throw std::invalid_argument(std::string(who) + ": carrier mismatch (" +
                                carrier_str(f.carrier()) + " vs " + carrier_str(g.carrier()) +
                                ")");
}

GradedSeries add(const GradedSeries& f, const GradedSeries& g) {
  require_same_carrier(f, g, "add");
  GradedSeries out(f.carrier(), std::min(f.truncation(), g.truncation()));
  for (const auto& [k, v] : f.terms())
    if (f.key_grading(k) <= out.truncation()) out.add_coeff(k, v);
  for (const auto& [k, v] : g.terms())
    if (g.key_grading(k) <= out.truncation()) out.add_coeff(k, v);
  return out;
}

GradedSeries negate(const GradedSeries& f) {
  GradedSeries out(f.carrier(), f.truncation());
  for (const auto& [k, v] : f.terms()) out.set_coeff(k, -v);
  return out;
}

GradedSeries mul_monoid(const GradedSeries& f, const GradedSeries& g) {
  require_same_carrier(f, g, "mul_monoid");
  if (f.carrier().kind != CarrierKind::Monoid)
    throw std::invalid_argument("mul_monoid: monoid carrier required");
  const SetOperadInstance& inst = SetOperadInstance::get(f.carrier().inst);
  const OperadElement& p2 = *f.carrier().p2;
  GradedSeries out(f.carrier(), std::min(f.truncation(), g.truncation()));
  for (const auto& [p, fp] : f.terms()) {
    if (p.grading() > out.truncation()) continue;
    for (const auto& [q, gq] : g.terms()) {
      if (p.grading() + q.grading() > out.truncation()) continue;
      out.add_coeff(monoid_mul(inst, p2, p, q), fp * gq);
    }
  }
  return out;
}

GradedSeries inv_monoid(const GradedSeries& f) {
  if (!f.is_invertible_form())
    throw std::invalid_argument("inv_monoid: constant term must be exactly 1");
  const int n = f.truncation();
  // f = x^e - u with u supported in positive grading; inverse is the
  // geometric sum e + u + u^2 + ... + u^n.
  GradedSeries u = negate(f);
  u.set_coeff(MonoidElement::neutral(f.carrier().inst), RingValue());
  GradedSeries acc = unit_series(f.carrier(), n);
  GradedSeries pow = unit_series(f.carrier(), n);
  for (int k = 1; k <= n; ++k) {
    pow = mul_monoid(pow, u);
    if (pow.term_count() == 0) break;
    acc = add(acc, pow);
  }
  return acc;
}

GradedSeries compose(const GradedSeries& phi, const GradedSeries& psi) {
  require_same_carrier(phi, psi, "compose");
  if (phi.carrier().kind != CarrierKind::Operad)
    throw std::invalid_argument("compose: operad carrier required");
  const SetOperadInstance& inst = SetOperadInstance::get(phi.carrier().inst);
  GradedSeries out(phi.carrier(), std::min(phi.truncation(), psi.truncation()));
  for (int d = 0; d <= out.truncation(); ++d) {
    for (const OperadElement& u : inst.enumerate(d + 1)) {
      RingValue acc;
      for (const OperadDecomp& dc : operad_decompositions(inst, u)) {
        RingValue c = phi.coeff(MonoidElement::of(dc.shape));
        if (c.is_zero()) continue;
        for (const OperadElement& q : dc.args) {
          c *= psi.coeff(MonoidElement::of(q));
          if (c.is_zero()) break;
        }
        acc += c;
      }
      if (!acc.is_zero()) out.set_coeff(MonoidElement::of(u), acc);
    }
  }
  return out;
}

GradedSeries comp_inverse(const GradedSeries& phi) {
  if (!phi.is_diffeo_form())
    throw std::invalid_argument("comp_inverse: leading coefficient must be exactly 1");
  const int n = phi.truncation();
  const MonoidElement idk =
      MonoidElement::of(SetOperadInstance::get(phi.carrier().inst).identity());
  GradedSeries psi = identity_diffeo(phi.carrier().inst, n);
  // Each pass fixes one more degree: the degree-d error of phi o psi depends
  // only on psi below degree d, which is already exact.
  for (int d = 1; d <= n; ++d) {
    GradedSeries err = compose(phi, psi);
    bool done = true;
    for (const auto& [k, v] : err.terms()) {
      if (k == idk) continue;
      done = false;
      if (err.key_grading(k) == d) psi.add_coeff(k, -v);
    }
    if (done) break;
  }
  return psi;
}

GradedSeries act(const GradedSeries& f, const GradedSeries& psi) {
  if (f.carrier().kind != CarrierKind::Monoid || psi.carrier().kind != CarrierKind::Operad)
    throw std::invalid_argument("act: expected a monoid series acted on by an operad series");
  if (f.carrier().inst != psi.carrier().inst)
    throw std::invalid_argument("act: instance mismatch");
  const SetOperadInstance& inst = SetOperadInstance::get(f.carrier().inst);
  // Complete to order n whenever n <= trunc(f) and n - 1 <= trunc(psi).
  GradedSeries out(f.carrier(), std::min(f.truncation(), psi.truncation() + 1));
  MonoidElement e = MonoidElement::neutral(f.carrier().inst);
  out.set_coeff(e, f.coeff(e));
  for (int n = 1; n <= out.truncation(); ++n) {
    for (const OperadElement& u : inst.enumerate(n)) {
      RingValue acc;
      for (const OperadDecomp& dc : operad_decompositions(inst, u)) {
        RingValue c = f.coeff(MonoidElement::of(dc.shape));
        if (c.is_zero()) continue;
        for (const OperadElement& q : dc.args) {
          c *= psi.coeff(MonoidElement::of(q));
          if (c.is_zero()) break;
        }
        acc += c;
      }
      if (!acc.is_zero()) out.set_coeff(MonoidElement::of(u), acc);
    }
  }
  return out;
}

SemidirectElement semidirect_unit(OperadId inst, const OperadElement& p2, int truncation) {
  return SemidirectElement{identity_diffeo(inst, truncation),
                           unit_series(Carrier::monoid(inst, p2), truncation)};
}

SemidirectElement semidirect_mul(const SemidirectElement& A, const SemidirectElement& B) {
  return SemidirectElement{compose(A.phi, B.phi), mul_monoid(act(A.f, B.phi), B.f)};
}

SemidirectElement semidirect_inverse(const SemidirectElement& A) {
  GradedSeries phi_inv = comp_inverse(A.phi);
  return SemidirectElement{phi_inv, inv_monoid(act(A.f, phi_inv))};
}

namespace {

// Strips the vertex tree sitting at the bottom of the left (resp. right)
// spine; inverse of p -> vtx/p resp. p -> p\vtx.
TreeId strip_leftmost_vtx(TreeId t) {
  if (t == kLeaf) throw std::invalid_argument("series key is not in the image of the embedding");
  if (tree_left(t) == kLeaf) {
    if (tree_right(t) != kLeaf)
      throw std::invalid_argument("series key is not in the image of the embedding");
    return kLeaf;
  }
  return tree_node(strip_leftmost_vtx(tree_left(t)), tree_right(t));
}

TreeId strip_rightmost_vtx(TreeId t) {
  if (t == kLeaf) throw std::invalid_argument("series key is not in the image of the embedding");
  if (tree_right(t) == kLeaf) {
    if (tree_left(t) != kLeaf)
      throw std::invalid_argument("series key is not in the image of the embedding");
    return kLeaf;
  }
  return tree_node(tree_left(t), strip_rightmost_vtx(tree_right(t)));
}

}  // namespace

GradedSeries embed_lambda_rho(const GradedSeries& f, EmbedSide side, const OperadElement& p2) {
  if (f.carrier().kind != CarrierKind::Monoid)
    throw std::invalid_argument("embed_lambda_rho: monoid carrier required");
  const SetOperadInstance& inst = SetOperadInstance::get(f.carrier().inst);
  if (!inst.is_associative(p2))
    throw std::invalid_argument("embed_lambda_rho: p2 is not associative");
  OperadElement id = inst.identity();
  GradedSeries out(Carrier::operad(f.carrier().inst), f.truncation());
  for (const auto& [p, c] : f.terms()) {
    MonoidElement key = side == EmbedSide::Lambda
                            ? monoid_mul(inst, p2, MonoidElement::of(id), p)
                            : monoid_mul(inst, p2, p, MonoidElement::of(id));
    out.add_coeff(key, c);
  }
  return out;
}

GradedSeries extract_lambda_rho(const GradedSeries& phi, EmbedSide side, const OperadElement& p2) {
  if (phi.carrier().kind != CarrierKind::Operad)
    throw std::invalid_argument("extract_lambda_rho: operad carrier required");
  const SetOperadInstance& inst = SetOperadInstance::get(phi.carrier().inst);
  if (!inst.is_associative(p2))
    throw std::invalid_argument("extract_lambda_rho: p2 is not associative");
  GradedSeries out(Carrier::monoid(phi.carrier().inst, p2), phi.truncation());
  for (const auto& [k, c] : phi.terms()) {
    MonoidElement p = k;
    switch (phi.carrier().inst) {
      case OperadId::As:
        p.a = k.a - 1;
        break;
      case OperadId::Dup: {
        TreeId t = k.tree();
        bool over_p2 = p2 == dup_over_generator();
        TreeId w;
        if (side == EmbedSide::Rho) {
          // p . id: over: t = node(w, leaf); under: t = w with a vtx capping
          // the right spine.
          if (over_p2) {
            if (tree_right(t) != kLeaf)
              throw std::invalid_argument("series key is not in the image of rho");
            w = tree_left(t);
          } else {
            w = strip_rightmost_vtx(t);
          }
        } else {
          if (over_p2) {
            w = strip_leftmost_vtx(t);
          } else {
            if (tree_left(t) != kLeaf)
              throw std::invalid_argument("series key is not in the image of lambda");
            w = tree_right(t);
          }
        }
        p.a = w;
        break;
      }
      case OperadId::Dias:
        throw std::invalid_argument("extract_lambda_rho: Dias series are out of scope");
    }
    out.add_coeff(p, c);
  }
  return out;
}

GradedSeries alpha_from(const GradedSeries& f, int out_truncation) {
  if (f.carrier().inst != OperadId::Dup || f.carrier().kind != CarrierKind::Monoid)
    throw std::invalid_argument("alpha_from: tree monoid series required");
  int n = out_truncation >= 0 ? out_truncation : f.truncation() + 1;
  if (n < 1) throw std::invalid_argument("alpha_from: truncation must be >= 1");
  // w = x^leaf - sum_t f_t x^{V(t)} in the over monoid.
  GradedSeries w = unit_series(carrier_over_monoid(), n);
  for (const auto& [t, c] : f.terms()) {
    if (tree_order(t.tree()) + 1 > n) continue;
    w.add_coeff(MonoidElement{OperadId::Dup, v_wrap(t.tree()), 0}, -c);
  }
  return embed_lambda_rho(inv_monoid(w), EmbedSide::Rho, dup_over_generator());
}

bool alpha_membership(const GradedSeries& phi) {
  if (phi.carrier().inst != OperadId::Dup || phi.carrier().kind != CarrierKind::Operad)
    return false;
  if (!phi.is_diffeo_form()) return false;
  for (const auto& [k, c] : phi.terms())
    if (tree_right(k.tree()) != kLeaf) return false;  // outside the image of rho
  GradedSeries g = extract_lambda_rho(phi, EmbedSide::Rho, dup_over_generator());
  auto g_at = [&](TreeId t) {
    return t == kLeaf ? RingValue(1) : g.coeff(MonoidElement{OperadId::Dup, t, 0});
  };
  for (int n = 2; n <= g.truncation(); ++n) {
    for (TreeId t : trees_of_order(n)) {
      std::vector<TreeId> parts = over_factorize(t);
      if (parts.size() < 2) continue;
      RingValue prod(1);
      for (TreeId p : parts) prod *= g_at(v_wrap(p));
      if (g_at(t) != prod) return false;
    }
  }
  return true;
}

GradedSeries project_order(const GradedSeries& s) {
  Carrier target = s.carrier().kind == CarrierKind::Monoid ? carrier_as_monoid()
                                                           : Carrier::operad(OperadId::As);
  GradedSeries out(target, s.truncation());
  for (const auto& [k, c] : s.terms()) {
    MonoidElement key{OperadId::As, k.grading(), 0};
    out.add_coeff(key, c);
  }
  return out;
}

GradedSeries section_comb(const GradedSeries& s, CombSide side, SectionKind kind) {
  if (s.carrier().inst != OperadId::As)
    throw std::invalid_argument("section_comb: As carrier required");
  if (kind == SectionKind::Inv) {
    if (s.carrier().kind != CarrierKind::Monoid)
      throw std::invalid_argument("section_comb: inv kind expects a monoid series");
    Carrier target =
        side == CombSide::Left ? carrier_over_monoid() : carrier_under_monoid();
    GradedSeries out(target, s.truncation());
    for (const auto& [k, c] : s.terms())
      out.add_coeff(MonoidElement{OperadId::Dup, comb(k.a, side), 0}, c);
    return out;
  }
  if (s.carrier().kind != CarrierKind::Operad)
    throw std::invalid_argument("section_comb: dif kind expects an operad series");
  GradedSeries out(Carrier::operad(OperadId::Dup), s.truncation());
  for (const auto& [k, c] : s.terms())
    out.add_coeff(MonoidElement{OperadId::Dup, comb(k.a, side), 0}, c);
  return out;
}

UnderRhoFactorization factor_under_rho(const GradedSeries& eta) {
  if (eta.carrier().inst != OperadId::Dup || eta.carrier().kind != CarrierKind::Operad)
    throw std::invalid_argument("factor_under_rho: tree diffeomorphism required");
  if (!eta.is_diffeo_form())
    throw std::invalid_argument("factor_under_rho: diffeo-form required");
  const int n = eta.truncation();
  // In i_under(psi) o rho_g the coefficient at u is the single product
  // psi_m g_{v_1} ... g_{v_m} over the right-spine factorization of u, so
  // psi is read off the right combs and g off the trees t/vtx.
  GradedSeries psi(Carrier::operad(OperadId::As), n);
  GradedSeries g(carrier_over_monoid(), n);
  g.set_coeff(MonoidElement::neutral(OperadId::Dup), RingValue(1));
  for (int m = 1; m <= n + 1; ++m)
    psi.add_coeff(MonoidElement{OperadId::As, m, 0},
                  eta.coeff(MonoidElement{OperadId::Dup, comb(m, CombSide::Right), 0}));
  for (int d = 1; d <= n; ++d)
    for (TreeId w : trees_of_order(d))
      g.add_coeff(MonoidElement{OperadId::Dup, w, 0},
                  eta.coeff(MonoidElement{OperadId::Dup, over(w, tree_vtx()), 0}));
  return UnderRhoFactorization{std::move(psi), std::move(g)};
}

}  // namespace tes
