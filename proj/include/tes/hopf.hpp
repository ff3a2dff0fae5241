#ifndef TES_HOPF_HPP
#define TES_HOPF_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tes/rational.hpp"
#include "tes/ring.hpp"
#include "tes/tree.hpp"

namespace tes {

/// The graded algebras carrying the coproducts. Tree families store a tree
/// id per generator, the classic families an integer.
///   InvOver / InvUnder: generators Y \ {leaf}, leaf = 1, grading |t|
///   DifY:               generators Y \ {leaf}, vtx = 1, grading |t| - 1
///   RhoY:               generators Y \ {leaf}, leaf = 1, grading |t|
///   AlphaY:             generators V(t) for all t (so vtx = V(leaf) is a
///                       degree-1 generator), grading |V(t)|
///   FdB:                generators a_n (n >= 1), a_0 = 1, grading n
///   Sym:                generators b_n (n >= 1), b_0 = 1, grading n
enum class HopfFamily { InvOver, InvUnder, DifY, RhoY, AlphaY, FdB, Sym };

struct AlgebraKind {
  HopfFamily fam = HopfFamily::InvOver;
  bool comm = false;

  friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
  friend auto operator<=>(const AlgebraKind&, const AlgebraKind&) = default;
};

/// A generator id: a TreeId for tree families, n for FdB/Sym.
using Gen = std::int32_t;

/// Product of generators; the empty word is the unit. Unit-identified
/// generators are erased on construction, commutative kinds keep the
/// letters sorted.
using Word = std::vector<Gen>;

int gen_grading(AlgebraKind kind, Gen g);
bool gen_is_unit(AlgebraKind kind, Gen g);
std::string gen_str(AlgebraKind kind, Gen g);
Word make_word(AlgebraKind kind, std::vector<Gen> letters);
Word word_concat(AlgebraKind kind, const Word& a, const Word& b);
int word_grading(AlgebraKind kind, const Word& w);
std::string word_str(AlgebraKind kind, const Word& w);

/// Finite linear combination of words over Q.
class FreeElement {
 public:
  explicit FreeElement(AlgebraKind kind) : kind_(kind) {}
  static FreeElement unit(AlgebraKind kind);
  static FreeElement generator(AlgebraKind kind, Gen g);

  AlgebraKind kind() const { return kind_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  void add(const Word& w, const Rational& c);
  Rational coeff(const Word& w) const;
  bool is_zero() const { return terms_.empty(); }

  friend FreeElement operator+(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  FreeElement operator-() const;
  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.kind_ == b.kind_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  AlgebraKind kind_;
  std::map<Word, Rational> terms_;
};

/// Sum of two-leg tensors; the legs may live in different algebras (the
/// coactions pair an order-graded leg with a shifted-graded one).
class Tensor2 {
 public:
  Tensor2(AlgebraKind lk, AlgebraKind rk) : lk_(lk), rk_(rk) {}

  AlgebraKind left_kind() const { return lk_; }
  AlgebraKind right_kind() const { return rk_; }
  const std::map<std::pair<Word, Word>, Rational>& terms() const { return terms_; }
  void add(const Word& l, const Word& r, const Rational& c);
  Rational coeff(const Word& l, const Word& r) const;
  bool is_zero() const { return terms_.empty(); }

  friend Tensor2 operator+(const Tensor2& a, const Tensor2& b);
  friend Tensor2 operator-(const Tensor2& a, const Tensor2& b);
  /// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
  friend Tensor2 operator*(const Tensor2& a, const Tensor2& b);
  friend bool operator==(const Tensor2& a, const Tensor2& b) {
    return a.lk_ == b.lk_ && a.rk_ == b.rk_ && a.terms_ == b.terms_;
  }

  Tensor2 twist() const;  // swaps the legs
  std::string str() const;

 private:
  AlgebraKind lk_, rk_;
  std::map<std::pair<Word, Word>, Rational> terms_;
};

class Tensor3 {
 public:
  Tensor3(AlgebraKind k0, AlgebraKind k1, AlgebraKind k2) : kinds_{k0, k1, k2} {}
  const std::map<std::array<Word, 3>, Rational>& terms() const { return terms_; }
  void add(const std::array<Word, 3>& w, const Rational& c);
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.kinds_ == b.kinds_ && a.terms_ == b.terms_;
  }
  std::string str() const;

 private:
  std::array<AlgebraKind, 3> kinds_;
  std::map<std::array<Word, 3>, Rational> terms_;
};

// ---- Coproducts and coactions (values on a single generator) ----

/// Pruning coproduct of H^inv: sum of monoid factorizations u = t . s for
/// the over or under product.
Tensor2 coprod_inv(TreeId u, CombSide side, bool comm = false);

/// Coproduct of H^dif_Y: sum over u = mu_t(s_1..s_k) of t (x) s_1...s_k.
Tensor2 coprod_dif(TreeId u, bool comm = false);

/// Coaction of H^dif on H^inv (same index set as coprod_dif, but the left
/// leg keeps vtx as a generator). left_fam selects InvOver/InvUnder/RhoY:
/// one formula serves both delta^inv and delta^dif, which coincide entry
/// for entry and differ only in the grading of the left leg.
Tensor2 coact_inv(TreeId u, HopfFamily left_fam = HopfFamily::InvOver, bool comm = false);

/// Coproduct of H^rho: 1 (x) u + sum over u = mu_t(s_1/vtx..s_k/vtx)/s_{k+1}.
Tensor2 coprod_rho(TreeId u, bool comm = false);

/// Self-coaction of H^rho: sum over u = mu_t(s_1/vtx..s_k/vtx).
Tensor2 coact_rho(TreeId u, bool comm = false);

/// Coproduct of H^alpha on the generator V(u) (pass u, not V(u)); the
/// non-recursive closed form. V(leaf) = vtx is primitive.
Tensor2 coprod_alpha(TreeId u, bool comm = false);

/// Same value computed by the recursion Delta(V(t)) = 1 (x) V(t) +
/// (V (x) Id)[Delta(t^l) / delta(V(t^r))]; must agree with coprod_alpha.
Tensor2 coprod_alpha_recursive(TreeId u, bool comm = false);

/// Coaction delta^rho of H^alpha on itself, on the generator V(u).
Tensor2 coact_alpha(TreeId u, bool comm = false);

enum class FdbVariant { Nc, Comm, Sym };

/// Faa di Bruno coproducts of a_n (nc words / commutative multinomial) and
/// the symmetric-function coproduct of b_n.
Tensor2 fdb_coproduct(int n, FdbVariant variant);

/// Delta b_n = sum b_k (x) b_{n-k}, on the commutative algebra or its free
/// lift (the lift stays cocommutative).
Tensor2 sym_coproduct(int n, bool comm);

/// Coefficient of the empty word.
Rational counit(const FreeElement& x);

/// The canonical coproduct of a generator in each algebra kind (InvOver ->
/// pruning over, DifY -> coprod_dif, RhoY -> coprod_rho, AlphaY ->
/// coprod_alpha, FdB -> fdb nc/comm, Sym -> fdb sym).
Tensor2 kind_coproduct(AlgebraKind kind, Gen g);

/// Coproduct extended to words and linear combinations as an algebra
/// morphism.
Tensor2 coproduct_word(AlgebraKind kind, const Word& w);
Tensor2 coproduct_elem(const FreeElement& x);

/// Recursive antipode S(u) = -u - sum S(u') u'' over the reduced coproduct
/// of the kind; memoized. Extended to words as an antimorphism.
FreeElement antipode(AlgebraKind kind, Gen g);
FreeElement antipode_word(AlgebraKind kind, const Word& w);

/// Convolution (chi (x) xi) Delta(u) with characters extended
/// multiplicatively to words (empty word -> 1).
using Character = std::function<RingValue(Gen)>;
RingValue character_convolve(const Character& chi, const Character& xi, const Tensor2& delta);

// ---- Morphism data (generator images) ----

/// b_n -> sum of all trees of order n (in H^inv over or under).
FreeElement embed_b(int n, CombSide side, bool comm = false);
/// a_n -> sum of all trees of order n + 1 (in H^dif_Y).
FreeElement embed_a(int n, bool comm = false);
/// Comb indicator section of embed_b: comb(n, side) -> b_n, else 0.
FreeElement section_b(TreeId u, CombSide side);
/// Comb indicator section of embed_a: comb(n, side) -> a_{n-1}, else 0.
FreeElement section_a(TreeId u, CombSide side);
/// P: H^dif -> H^rho, u . id = u/vtx -> u, all other generators -> 0.
FreeElement project_P(TreeId u, bool comm = false);
/// R: H^rho -> H^alpha, a word of trees -> its over product, re-expressed
/// through the V generators.
FreeElement project_R_word(const Word& w, bool comm = false);

/// Extends a generator map to an algebra morphism.
FreeElement apply_morphism(const FreeElement& x, AlgebraKind target,
                           const std::function<FreeElement(Gen)>& on_gen);
Tensor2 apply_morphism2(const Tensor2& t, AlgebraKind ltarget, AlgebraKind rtarget,
                        const std::function<FreeElement(Gen)>& on_left,
                        const std::function<FreeElement(Gen)>& on_right);

/// Re-normalizes an nc value in the commutative quotient.
FreeElement abelianize(const FreeElement& x);
Tensor2 abelianize(const Tensor2& t);

}  // namespace tes

#endif
