#include "tes/hopf.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "tes/operad.hpp"
#include "tes/series.hpp"

namespace tes {

namespace {

bool is_tree_family(HopfFamily f) {
  return f == HopfFamily::InvOver || f == HopfFamily::InvUnder || f == HopfFamily::DifY ||
         f == HopfFamily::RhoY || f == HopfFamily::AlphaY;
}

bool gen_less(AlgebraKind kind, Gen a, Gen b) {
  if (is_tree_family(kind.fam)) return tree_less(a, b);
  return a < b;
}

}  // namespace

int gen_grading(AlgebraKind kind, Gen g) {
  switch (kind.fam) {
    case HopfFamily::InvOver:
    case HopfFamily::InvUnder:
    case HopfFamily::RhoY: return tree_order(g);
    case HopfFamily::DifY: return tree_order(g) - 1;
    case HopfFamily::AlphaY: return tree_order(g);  // |V(t)| = |t| + 1
    case HopfFamily::FdB:
    case HopfFamily::Sym: return g;
  }
  throw std::logic_error("gen_grading: bad family");
}

bool gen_is_unit(AlgebraKind kind, Gen g) {
  switch (kind.fam) {
    case HopfFamily::InvOver:
    case HopfFamily::InvUnder:
    case HopfFamily::RhoY: return g == kLeaf;
    case HopfFamily::DifY: return g == kLeaf || g == tree_vtx();
    case HopfFamily::AlphaY: return false;
    case HopfFamily::FdB:
    case HopfFamily::Sym: return g == 0;
  }
  throw std::logic_error("gen_is_unit: bad family");
}

std::string gen_str(AlgebraKind kind, Gen g) {
  if (is_tree_family(kind.fam)) return tree_code(g);
  return (kind.fam == HopfFamily::FdB ? "a" : "b") + std::to_string(g);
}

Word make_word(AlgebraKind kind, std::vector<Gen> letters) {
  Word w;
  w.reserve(letters.size());
  for (Gen g : letters) {
    if (gen_is_unit(kind, g)) continue;
    if (kind.fam == HopfFamily::AlphaY && tree_left(g) != kLeaf)
      throw std::invalid_argument("make_word: AlphaY generators are the trees V(t)");
    if ((kind.fam == HopfFamily::FdB || kind.fam == HopfFamily::Sym) && g < 0)
      throw std::invalid_argument("make_word: negative generator index");
    w.push_back(g);
  }
  if (kind.comm)
    std::sort(w.begin(), w.end(), [&](Gen a, Gen b) { return gen_less(kind, a, b); });
  return w;
}

Word word_concat(AlgebraKind kind, const Word& a, const Word& b) {
  std::vector<Gen> all;
  all.reserve(a.size() + b.size());
  all.insert(all.end(), a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return make_word(kind, std::move(all));
}

int word_grading(AlgebraKind kind, const Word& w) {
  int d = 0;
  for (Gen g : w) d += gen_grading(kind, g);
  return d;
}

std::string word_str(AlgebraKind kind, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += gen_str(kind, w[i]);
  }
  return s;
}

FreeElement FreeElement::unit(AlgebraKind kind) {
  FreeElement x(kind);
  x.add({}, Rational(1));
  return x;
}

FreeElement FreeElement::generator(AlgebraKind kind, Gen g) {
  FreeElement x(kind);
  x.add(make_word(kind, {g}), Rational(1));
  return x;
}

void FreeElement::add(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  Rational& slot = terms_[w];
  slot += c;
  if (slot.is_zero()) terms_.erase(w);
}

Rational FreeElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
  if (!(a.kind_ == b.kind_)) throw std::invalid_argument("FreeElement: kind mismatch");
  FreeElement out = a;
  for (const auto& [w, c] : b.terms_) out.add(w, c);
  return out;
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) { return a + (-b); }

FreeElement FreeElement::operator-() const {
  FreeElement out(kind_);
  for (const auto& [w, c] : terms_) out.add(w, -c);
  return out;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  if (!(a.kind_ == b.kind_)) throw std::invalid_argument("FreeElement: kind mismatch");
  FreeElement out(a.kind_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(word_concat(a.kind_, wa, wb), ca * cb);
  return out;
}

std::string FreeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_one() && !w.empty())
      os << word_str(kind_, w);
    else if (w.empty())
      os << c.str();
    else
      os << c.str() << "*" << word_str(kind_, w);
  }
  return os.str();
}

void Tensor2::add(const Word& l, const Word& r, const Rational& c) {
  if (c.is_zero()) return;
  Rational& slot = terms_[{l, r}];
  slot += c;
  if (slot.is_zero()) terms_.erase({l, r});
}

Rational Tensor2::coeff(const Word& l, const Word& r) const {
  auto it = terms_.find({l, r});
  return it == terms_.end() ? Rational(0) : it->second;
}

Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
  if (!(a.lk_ == b.lk_ && a.rk_ == b.rk_)) throw std::invalid_argument("Tensor2: kind mismatch");
  Tensor2 out = a;
  for (const auto& [wz, c] : b.terms_) out.add(wz.first, wz.second, c);
  return out;
}

Tensor2 operator-(const Tensor2& a, const Tensor2& b) {
  Tensor2 neg(b.lk_, b.rk_);
  for (const auto& [wz, c] : b.terms_) neg.add(wz.first, wz.second, -c);
  return a + neg;
}

Tensor2 operator*(const Tensor2& a, const Tensor2& b) {
  if (!(a.lk_ == b.lk_ && a.rk_ == b.rk_)) throw std::invalid_argument("Tensor2: kind mismatch");
  Tensor2 out(a.lk_, a.rk_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_)
      out.add(word_concat(a.lk_, wa.first, wb.first), word_concat(a.rk_, wa.second, wb.second),
              ca * cb);
  return out;
}

Tensor2 Tensor2::twist() const {
  Tensor2 out(rk_, lk_);
  for (const auto& [wz, c] : terms_) out.add(wz.second, wz.first, c);
  return out;
}

std::string Tensor2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [wz, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c.str() << "*";
    os << word_str(lk_, wz.first) << " (x) " << word_str(rk_, wz.second);
  }
  return os.str();
}

void Tensor3::add(const std::array<Word, 3>& w, const Rational& c) {
  if (c.is_zero()) return;
  Rational& slot = terms_[w];
  slot += c;
  if (slot.is_zero()) terms_.erase(w);
}

std::string Tensor3::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c.str() << "*";
    os << word_str(kinds_[0], w[0]) << " (x) " << word_str(kinds_[1], w[1]) << " (x) "
       << word_str(kinds_[2], w[2]);
  }
  return os.str();
}

// ---- coproducts ----

Tensor2 coprod_inv(TreeId u, CombSide side, bool comm) {
  if (u == kLeaf) throw std::invalid_argument("coprod_inv: u must not be the root tree");
  AlgebraKind k{side == CombSide::Left ? HopfFamily::InvOver : HopfFamily::InvUnder, comm};
  const SetOperadInstance& dup = SetOperadInstance::get(OperadId::Dup);
  OperadElement p2 = side == CombSide::Left ? dup_over_generator() : dup_under_generator();
  Tensor2 out(k, k);
  for (const auto& [t, s] : monoid_factorizations(dup, p2, MonoidElement{OperadId::Dup, u, 0}))
    out.add(make_word(k, {t.tree()}), make_word(k, {s.tree()}), Rational(1));
  return out;
}

Tensor2 coprod_dif(TreeId u, bool comm) {
  if (u == kLeaf) throw std::invalid_argument("coprod_dif: u must not be the root tree");
  AlgebraKind k{HopfFamily::DifY, comm};
  Tensor2 out(k, k);
  for (const TreeDecomp& d : substitution_decompositions(u))
    out.add(make_word(k, {d.shape}), make_word(k, d.args), Rational(1));
  return out;
}

Tensor2 coact_inv(TreeId u, HopfFamily left_fam, bool comm) {
  if (u == kLeaf) throw std::invalid_argument("coact_inv: u must not be the root tree");
  AlgebraKind lk{left_fam, comm};
  AlgebraKind rk{HopfFamily::DifY, comm};
  Tensor2 out(lk, rk);
  for (const TreeDecomp& d : substitution_decompositions(u))
    out.add(make_word(lk, {d.shape}), make_word(rk, d.args), Rational(1));
  return out;
}

namespace {

// Decompositions u = mu_t(s_1/vtx, ..., s_k/vtx): the substitution
// decompositions whose arguments all have a leaf right child, with the
// arguments lowered to their left subtrees.
struct RhoDecomp {
  TreeId shape;
  std::vector<TreeId> lowered;
};

std::vector<RhoDecomp> rho_decompositions(TreeId u) {
  std::vector<RhoDecomp> out;
  for (const TreeDecomp& d : substitution_decompositions(u)) {
    bool ok = true;
    for (TreeId s : d.args)
      if (tree_right(s) != kLeaf) {
        ok = false;
        break;
      }
    if (!ok) continue;
    RhoDecomp rd;
    rd.shape = d.shape;
    for (TreeId s : d.args) rd.lowered.push_back(tree_left(s));
    out.push_back(std::move(rd));
  }
  return out;
}

}  // namespace

Tensor2 coprod_rho(TreeId u, bool comm) {
  if (u == kLeaf) throw std::invalid_argument("coprod_rho: u must not be the root tree");
  AlgebraKind k{HopfFamily::RhoY, comm};
  const SetOperadInstance& dup = SetOperadInstance::get(OperadId::Dup);
  Tensor2 out(k, k);
  out.add({}, make_word(k, {u}), Rational(1));
  // u = X / s_{k+1} with X = mu_t(s_1/vtx, ..., s_k/vtx).
  for (const auto& [x, tail] :
       monoid_factorizations(dup, dup_over_generator(), MonoidElement{OperadId::Dup, u, 0})) {
    if (x.is_neutral()) continue;
    for (const RhoDecomp& rd : rho_decompositions(x.tree())) {
      std::vector<Gen> rhs = rd.lowered;
      rhs.push_back(tail.tree());
      out.add(make_word(k, {rd.shape}), make_word(k, std::move(rhs)), Rational(1));
    }
  }
  return out;
}

Tensor2 coact_rho(TreeId u, bool comm) {
  if (u == kLeaf) throw std::invalid_argument("coact_rho: u must not be the root tree");
  AlgebraKind k{HopfFamily::RhoY, comm};
  Tensor2 out(k, k);
  for (const RhoDecomp& rd : rho_decompositions(u))
    out.add(make_word(k, {rd.shape}), make_word(k, rd.lowered), Rational(1));
  return out;
}

namespace {

TreeId over_fold(const std::vector<TreeId>& parts) {
  TreeId t = kLeaf;
  for (TreeId p : parts) t = over(t, p);
  return t;
}

// The tree s_1/.../s_k as an AlphaY word (its V-factorization).
Word alpha_word_of_tree(AlgebraKind k, TreeId t) {
  if (t == kLeaf) return {};
  std::vector<Gen> letters;
  for (TreeId p : over_factorize(t)) letters.push_back(v_wrap(p));
  return make_word(k, std::move(letters));
}

}  // namespace

Tensor2 coprod_alpha(TreeId u, bool comm) {
  AlgebraKind k{HopfFamily::AlphaY, comm};
  Tensor2 out(k, k);
  Word vu = make_word(k, {v_wrap(u)});
  out.add({}, vu, Rational(1));
  if (u == kLeaf) {
    // V(leaf) = vtx is primitive; the closed form has no admissible
    // decomposition at order 0, the counit axiom forces vtx (x) 1.
    out.add(vu, {}, Rational(1));
    return out;
  }
  for (const RhoDecomp& rd : rho_decompositions(u))
    out.add(make_word(k, {v_wrap(rd.shape)}), alpha_word_of_tree(k, over_fold(rd.lowered)),
            Rational(1));
  return out;
}

namespace {

Tensor2 delta_alpha_nc(TreeId t);

// Delta^alpha of the algebra element t = V(p_1)/.../V(p_m), i.e. the
// componentwise product of the generator coproducts, computed recursively.
Tensor2 Delta_alpha_tree_nc(TreeId t) {
  AlgebraKind k{HopfFamily::AlphaY, false};
  Tensor2 acc(k, k);
  acc.add({}, {}, Rational(1));
  if (t == kLeaf) return acc;
  for (TreeId p : over_factorize(t)) {
    Tensor2 d = delta_alpha_nc(p);
    d.add({}, make_word(k, {v_wrap(p)}), Rational(1));  // Delta = 1 (x) V(p) + delta
    acc = acc * d;
  }
  return acc;
}

Tensor2 delta_alpha_nc(TreeId t) {
  static std::map<TreeId, Tensor2> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
  }
  AlgebraKind k{HopfFamily::AlphaY, false};
  Tensor2 out(k, k);
  if (t == kLeaf) {
    out.add(make_word(k, {tree_vtx()}), {}, Rational(1));  // delta(V(leaf)) = vtx (x) 1
  } else {
    // t = t_l / V(t_r); delta(V(t)) = (V (x) Id)[Delta(t_l) / delta(V(t_r))],
    // with V read on the tree-monomial basis of the left legs.
    std::vector<TreeId> parts = over_factorize(t);
    TreeId t_r = parts.back();
    parts.pop_back();
    TreeId t_l = kLeaf;
    for (TreeId p : parts) t_l = over(t_l, v_wrap(p));
    Tensor2 prod = Delta_alpha_tree_nc(t_l) * delta_alpha_nc(t_r);
    for (const auto& [wz, c] : prod.terms()) {
      std::vector<TreeId> letters(wz.first.begin(), wz.first.end());
      TreeId lt = over_fold(letters);
      out.add(make_word(k, {v_wrap(lt)}), wz.second, c);
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = memo.try_emplace(t, out);
  (void)fresh;
  return it->second;
}

}  // namespace

Tensor2 coprod_alpha_recursive(TreeId u, bool comm) {
  AlgebraKind k{HopfFamily::AlphaY, false};
  Tensor2 out = delta_alpha_nc(u);
  out.add({}, make_word(k, {v_wrap(u)}), Rational(1));
  return comm ? abelianize(out) : out;
}

Tensor2 coact_alpha(TreeId u, bool comm) {
  return comm ? abelianize(delta_alpha_nc(u)) : delta_alpha_nc(u);
}

namespace {

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  return r;
}

}  // namespace

Tensor2 sym_coproduct(int n, bool comm) {
  if (n < 1) throw std::invalid_argument("sym_coproduct: n >= 1 required");
  AlgebraKind k{HopfFamily::Sym, comm};
  Tensor2 out(k, k);
  for (int j = 0; j <= n; ++j) out.add(make_word(k, {j}), make_word(k, {n - j}), Rational(1));
  return out;
}

Tensor2 fdb_coproduct(int n, FdbVariant variant) {
  if (n < 1) throw std::invalid_argument("fdb_coproduct: n >= 1 required");
  if (variant == FdbVariant::Sym) return sym_coproduct(n, true);
  AlgebraKind k{HopfFamily::FdB, variant == FdbVariant::Comm};
  Tensor2 out(k, k);
  if (variant == FdbVariant::Nc) {
    // Delta(a_n) = sum_m a_m (x) sum_{k_0+...+k_m = n-m} a_{k0}...a_{km}.
    for (int m = 0; m <= n; ++m) {
      std::vector<Gen> ks(m + 1, 0);
      auto rec = [&](auto&& self, int slot, int rest) -> void {
        if (slot == m) {
          ks[slot] = rest;
          out.add(make_word(k, {m}), make_word(k, ks), Rational(1));
          return;
        }
        for (int v = 0; v <= rest; ++v) {
          ks[slot] = v;
          self(self, slot + 1, rest - v);
        }
      };
      rec(rec, 0, n - m);
    }
    return out;
  }
  // Commutative closed form with multinomial weights.
  for (int m = 0; m <= n; ++m) {
    int rest = n - m;
    if (rest == 0) {
      out.add(make_word(k, {m}), {}, Rational(1));
      continue;
    }
    // p_1..p_rest >= 0 with sum p_i = l and sum i p_i = rest.
    std::vector<int> p(rest + 1, 0);
    auto rec = [&](auto&& self, int i, int weight_left) -> void {
      if (i > rest) {
        if (weight_left != 0) return;
        int l = 0;
        for (int j = 1; j <= rest; ++j) l += p[j];
        Rational c = binomial(m + 1, l) * factorial(l);
        std::vector<Gen> letters;
        for (int j = 1; j <= rest; ++j) {
          c /= factorial(p[j]);
          for (int rep = 0; rep < p[j]; ++rep) letters.push_back(j);
        }
        if (!c.is_zero()) out.add(make_word(k, {m}), make_word(k, letters), c);
        return;
      }
      for (int v = 0; v * i <= weight_left; ++v) {
        p[i] = v;
        self(self, i + 1, weight_left - v * i);
      }
      p[i] = 0;
    };
    rec(rec, 1, rest);
  }
  return out;
}

Rational counit(const FreeElement& x) { return x.coeff({}); }

Tensor2 kind_coproduct(AlgebraKind kind, Gen g) {
  switch (kind.fam) {
    case HopfFamily::InvOver: return coprod_inv(g, CombSide::Left, kind.comm);
    case HopfFamily::InvUnder: return coprod_inv(g, CombSide::Right, kind.comm);
    case HopfFamily::DifY: return coprod_dif(g, kind.comm);
    case HopfFamily::RhoY: return coprod_rho(g, kind.comm);
    case HopfFamily::AlphaY:
      if (tree_left(g) != kLeaf)
        throw std::invalid_argument("kind_coproduct: AlphaY generator must be some V(t)");
      return coprod_alpha(tree_right(g), kind.comm);
    case HopfFamily::FdB: return fdb_coproduct(g, kind.comm ? FdbVariant::Comm : FdbVariant::Nc);
    case HopfFamily::Sym: return sym_coproduct(g, kind.comm);
  }
  throw std::logic_error("kind_coproduct: bad family");
}

Tensor2 coproduct_word(AlgebraKind kind, const Word& w) {
  Tensor2 acc(kind, kind);
  acc.add({}, {}, Rational(1));
  for (Gen g : w) acc = acc * kind_coproduct(kind, g);
  return acc;
}

Tensor2 coproduct_elem(const FreeElement& x) {
  Tensor2 acc(x.kind(), x.kind());
  for (const auto& [w, c] : x.terms()) {
    Tensor2 t = coproduct_word(x.kind(), w);
    for (const auto& [wz, q] : t.terms()) acc.add(wz.first, wz.second, q * c);
  }
  return acc;
}

FreeElement antipode(AlgebraKind kind, Gen g) {
  static std::map<std::tuple<HopfFamily, bool, Gen>, FreeElement> memo;
  static std::mutex mu;
  std::tuple<HopfFamily, bool, Gen> key{kind.fam, kind.comm, g};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  if (gen_is_unit(kind, g)) return FreeElement::unit(kind);
  // S(u) = -u - sum S(u') u'' over the reduced coproduct; well-founded
  // because the left legs of every mixed term have strictly lower grading.
  Word gw = make_word(kind, {g});
  Tensor2 delta = kind_coproduct(kind, g);
  FreeElement s(kind);
  s.add(gw, Rational(-1));
  for (const auto& [wz, c] : delta.terms()) {
    const Word& l = wz.first;
    const Word& r = wz.second;
    if (l == gw && r.empty()) continue;  // g (x) 1
    if (l.empty() && r == gw) continue;  // 1 (x) g
    FreeElement part = antipode_word(kind, l);
    FreeElement rhs(kind);
    rhs.add(r, c);
    s = s - part * rhs;
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = memo.try_emplace(key, s);
  (void)fresh;
  return it->second;
}

FreeElement antipode_word(AlgebraKind kind, const Word& w) {
  FreeElement acc = FreeElement::unit(kind);
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc * antipode(kind, *it);
  return acc;
}

RingValue character_convolve(const Character& chi, const Character& xi, const Tensor2& delta) {
  RingValue acc;
  for (const auto& [wz, c] : delta.terms()) {
    RingValue v{Rational(c)};
    for (Gen g : wz.first) v *= chi(g);
    for (Gen g : wz.second) v *= xi(g);
    acc += v;
  }
  return acc;
}

FreeElement embed_b(int n, CombSide side, bool comm) {
  if (n < 0) throw std::invalid_argument("embed_b: n >= 0 required");
  AlgebraKind k{side == CombSide::Left ? HopfFamily::InvOver : HopfFamily::InvUnder, comm};
  FreeElement out(k);
  if (n == 0) return FreeElement::unit(k);
  for (TreeId t : trees_of_order(n)) out.add(make_word(k, {t}), Rational(1));
  return out;
}

FreeElement embed_a(int n, bool comm) {
  if (n < 0) throw std::invalid_argument("embed_a: n >= 0 required");
  AlgebraKind k{HopfFamily::DifY, comm};
  FreeElement out(k);
  for (TreeId t : trees_of_order(n + 1)) out.add(make_word(k, {t}), Rational(1));
  return out;
}

FreeElement section_b(TreeId u, CombSide side) {
  AlgebraKind k{HopfFamily::Sym, false};
  int n = tree_order(u);
  if (u == comb(n, side)) return FreeElement::generator(k, n);
  return FreeElement(k);
}

FreeElement section_a(TreeId u, CombSide side) {
  AlgebraKind k{HopfFamily::FdB, false};
  int n = tree_order(u);
  if (u == comb(n, side)) return n >= 1 ? FreeElement::generator(k, n - 1) : FreeElement::unit(k);
  return FreeElement(k);
}

FreeElement project_P(TreeId u, bool comm) {
  AlgebraKind k{HopfFamily::RhoY, comm};
  if (u == kLeaf) throw std::invalid_argument("project_P: u must not be the root tree");
  if (tree_right(u) != kLeaf) return FreeElement(k);
  return FreeElement::generator(k, tree_left(u));
}

FreeElement project_R_word(const Word& w, bool comm) {
  AlgebraKind k{HopfFamily::AlphaY, comm};
  std::vector<Gen> letters;
  for (Gen u : w)
    for (TreeId p : over_factorize(u)) letters.push_back(v_wrap(p));
  FreeElement out(k);
  out.add(make_word(k, letters), Rational(1));
  return out;
}

FreeElement apply_morphism(const FreeElement& x, AlgebraKind target,
                           const std::function<FreeElement(Gen)>& on_gen) {
  FreeElement out(target);
  for (const auto& [w, c] : x.terms()) {
    FreeElement prod = FreeElement::unit(target);
    for (Gen g : w) prod = prod * on_gen(g);
    for (const auto& [pw, pc] : prod.terms()) out.add(pw, pc * c);
  }
  return out;
}

Tensor2 apply_morphism2(const Tensor2& t, AlgebraKind ltarget, AlgebraKind rtarget,
                        const std::function<FreeElement(Gen)>& on_left,
                        const std::function<FreeElement(Gen)>& on_right) {
  Tensor2 out(ltarget, rtarget);
  for (const auto& [wz, c] : t.terms()) {
    FreeElement l = FreeElement::unit(ltarget);
    for (Gen g : wz.first) l = l * on_left(g);
    FreeElement r = FreeElement::unit(rtarget);
    for (Gen g : wz.second) r = r * on_right(g);
    for (const auto& [lw, lc] : l.terms())
      for (const auto& [rw, rc] : r.terms()) out.add(lw, rw, c * lc * rc);
  }
  return out;
}

FreeElement abelianize(const FreeElement& x) {
  AlgebraKind k{x.kind().fam, true};
  FreeElement out(k);
  for (const auto& [w, c] : x.terms()) out.add(make_word(k, {w.begin(), w.end()}), c);
  return out;
}

Tensor2 abelianize(const Tensor2& t) {
  AlgebraKind lk{t.left_kind().fam, true};
  AlgebraKind rk{t.right_kind().fam, true};
  Tensor2 out(lk, rk);
  for (const auto& [wz, c] : t.terms())
    out.add(make_word(lk, {wz.first.begin(), wz.first.end()}),
            make_word(rk, {wz.second.begin(), wz.second.end()}), c);
  return out;
}

}  // namespace tes
