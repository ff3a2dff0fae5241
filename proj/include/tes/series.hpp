#ifndef TES_SERIES_HPP
#define TES_SERIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tes/operad.hpp"
#include "tes/ring.hpp"

namespace tes {

enum class CarrierKind { Monoid, Operad };

/// What a series is expanded over: a graded monoid M_P (with the product
/// selected by an associative p2) or the set-operad P itself.
struct Carrier {
  CarrierKind kind = CarrierKind::Monoid;
  OperadId inst = OperadId::As;
  std::optional<OperadElement> p2;  // required for monoid carriers

  static Carrier monoid(OperadId inst, OperadElement p2) { return {CarrierKind::Monoid, inst, p2}; }
  static Carrier operad(OperadId inst) { return {CarrierKind::Operad, inst, std::nullopt}; }

  friend bool operator==(const Carrier&, const Carrier&) = default;
};

/// The over / under monoid carriers on trees and the classic one on N.
Carrier carrier_over_monoid();
Carrier carrier_under_monoid();
Carrier carrier_as_monoid();
OperadElement dup_over_generator();   // the tree AB
OperadElement dup_under_generator();  // the tree BA

struct MonoidElementHash {
  std::size_t operator()(const MonoidElement& m) const {
    std::size_t h = static_cast<std::size_t>(m.inst);
    h = h * 1000003u + static_cast<std::size_t>(static_cast<std::uint32_t>(m.a));
    h = h * 1000003u + static_cast<std::size_t>(static_cast<std::uint32_t>(m.b));
    return h;
  }
};

/// Finite truncated series over a carrier. Keys never exceed the truncation
/// (order for monoid carriers, arity - 1 for operad carriers) and zero
/// coefficients are never stored. Values are immutable in spirit: all
/// operations return fresh series.
class GradedSeries {
 public:
  GradedSeries(Carrier carrier, int truncation);

  const Carrier& carrier() const { return carrier_; }
  int truncation() const { return trunc_; }

  int key_grading(const MonoidElement& k) const;
  RingValue coeff(const MonoidElement& k) const;
  void set_coeff(const MonoidElement& k, RingValue v);
  void add_coeff(const MonoidElement& k, const RingValue& v);
  std::size_t term_count() const { return terms_.size(); }
  const std::unordered_map<MonoidElement, RingValue, MonoidElementHash>& terms() const {
    return terms_;
  }
  /// Terms in canonical order (grading, then element order).
  std::vector<std::pair<MonoidElement, RingValue>> sorted_terms() const;

  bool is_invertible_form() const;  // monoid carrier, coefficient of e is 1
  bool is_diffeo_form() const;      // operad carrier, coefficient of id is 1

  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.carrier_ == b.carrier_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

  std::string str() const;

 private:
  Carrier carrier_;
  int trunc_;
  std::unordered_map<MonoidElement, RingValue, MonoidElementHash> terms_;
};

/// x^e over the given monoid carrier.
GradedSeries unit_series(const Carrier& c, int truncation);
/// x^id over the given operad instance.
GradedSeries identity_diffeo(OperadId inst, int truncation);

GradedSeries add(const GradedSeries& f, const GradedSeries& g);
GradedSeries negate(const GradedSeries& f);

/// Multiplication of monoid-expanded series; truncation is the minimum of
/// the operands'.
GradedSeries mul_monoid(const GradedSeries& f, const GradedSeries& g);

/// Two-sided inverse of an invertible-form series, by geometric series in
/// the augmentation part.
GradedSeries inv_monoid(const GradedSeries& f);

/// Composition of operad-expanded series (diffeo-form not required; the
/// usual group lives on diffeo-form series).
GradedSeries compose(const GradedSeries& phi, const GradedSeries& psi);

/// Two-sided compositional inverse of a diffeo-form series, degree by
/// degree.
GradedSeries comp_inverse(const GradedSeries& phi);

/// Right action f^psi of a P-expanded diffeomorphism on an M_P-expanded
/// series. The constant term is preserved.
GradedSeries act(const GradedSeries& f, const GradedSeries& psi);

/// Element of G^dif_P x| G^inv_{M_P}.
struct SemidirectElement {
  GradedSeries phi;  // operad carrier, diffeo-form
  GradedSeries f;    // monoid carrier, invertible-form

  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

SemidirectElement semidirect_unit(OperadId inst, const OperadElement& p2, int truncation);
SemidirectElement semidirect_mul(const SemidirectElement& A, const SemidirectElement& B);
SemidirectElement semidirect_inverse(const SemidirectElement& A);

enum class EmbedSide { Lambda, Rho };

/// lambda_f = x^id . f resp. rho_f = f . x^id, with the monoid product of
/// the given associative p2.
GradedSeries embed_lambda_rho(const GradedSeries& f, EmbedSide side, const OperadElement& p2);
/// Inverse of the embedding; throws if phi is not in the image.
GradedSeries extract_lambda_rho(const GradedSeries& phi, EmbedSide side, const OperadElement& p2);

/// (x^leaf - x^vtx \ f(x))^{-1} / x^vtx, truncated at out_truncation
/// (defaults to f's truncation + 1). f may have arbitrary terms, constant
/// included.
GradedSeries alpha_from(const GradedSeries& f, int out_truncation = -1);

/// Whether phi lies in G^alpha: it must be rho_g for a g whose coefficients
/// are multiplicative across the over factorization into V(t) factors.
bool alpha_membership(const GradedSeries& phi);

/// Order projection onto series over As / N; a group homomorphism for every
/// law of this module.
GradedSeries project_order(const GradedSeries& s);

enum class SectionKind { Inv, Dif };

/// Comb section of the order projection: x^n -> x^{comb(n, side)}.
GradedSeries section_comb(const GradedSeries& s, CombSide side, SectionKind kind);

/// The unique pair (psi, g) with eta = section_comb(psi, Right, Dif) o rho_g,
/// read off coefficientwise (right combs give psi, trees t/vtx give g).
/// Recomposition reproduces eta exactly whenever eta is such a composite.
struct UnderRhoFactorization {
  GradedSeries psi;  // classic diffeomorphism over As (operad carrier)
  GradedSeries g;    // invertible series over the over-monoid of trees
};
UnderRhoFactorization factor_under_rho(const GradedSeries& eta);

}  // namespace tes

#endif
