#ifndef TES_OPERAD_HPP
#define TES_OPERAD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tes/tree.hpp"

namespace tes {

enum class OperadId { As, Dias, Dup };

std::string operad_name(OperadId id);          // "as", "dias", "dup"
OperadId operad_from_name(const std::string&);

/// An operation of one of the three concrete set-operads:
///   As:   a positive integer n (arity n);
///   Dias: a pair (arity n, index i in 1..n);
///   Dup:  a planar binary tree of order >= 1 (arity = order).
struct OperadElement {
  OperadId inst = OperadId::As;
  std::int32_t a = 1;  // As/Dias: arity; Dup: TreeId
  std::int32_t b = 0;  // Dias: index

  int arity() const;
  TreeId tree() const;  // Dup payload

  friend bool operator==(const OperadElement&, const OperadElement&) = default;
};

bool operad_less(const OperadElement& x, const OperadElement& y);
std::string operad_element_str(const OperadElement& e);

/// Element of the graded monoid M_P = P u {e}. For Dup the neutral element
/// is the leaf tree itself, so the whole monoid is just Y.
struct MonoidElement {
  OperadId inst = OperadId::As;
  std::int32_t a = 0;  // As: n >= 0; Dup: TreeId (leaf = e); Dias: 0 means e, else arity
  std::int32_t b = 0;  // Dias: index

  static MonoidElement neutral(OperadId id);
  static MonoidElement of(const OperadElement& p);

  bool is_neutral() const;
  int grading() const;
  OperadElement element() const;  // requires !is_neutral()
  TreeId tree() const;            // Dup payload (leaf allowed)

  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
};

bool monoid_less(const MonoidElement& x, const MonoidElement& y);
std::string monoid_element_str(const MonoidElement& e);

/// One of the three set-operad instances, with its declared associative
/// arity-2 elements. The declaration is validated on construction.
class SetOperadInstance {
 public:
  static const SetOperadInstance& get(OperadId id);

  OperadId id() const { return id_; }
  OperadElement identity() const;
  std::vector<OperadElement> enumerate(int n) const;  // all of P(n)
  const std::vector<OperadElement>& associative_elements() const { return assoc_; }
  bool is_associative(const OperadElement& p2) const;

  /// Operadic composition gamma(p; args). Throws on arity mismatch or
  /// cross-instance arguments.
  OperadElement compose(const OperadElement& p, std::span<const OperadElement> args) const;

 private:
  explicit SetOperadInstance(OperadId id);
  OperadId id_;
  std::vector<OperadElement> assoc_;
};

OperadElement operad_compose(const SetOperadInstance& inst, const OperadElement& p,
                             std::span<const OperadElement> args);

/// p . q := gamma(p2; p, q), extended by the neutral element. p2 must be in
/// the instance's associative list.
MonoidElement monoid_mul(const SetOperadInstance& inst, const OperadElement& p2,
                         const MonoidElement& x, const MonoidElement& y);

/// All ordered factorizations u = p . q in the graded monoid (p, q possibly
/// neutral), sorted canonically by the left factor.
std::vector<std::pair<MonoidElement, MonoidElement>> monoid_factorizations(
    const SetOperadInstance& inst, const OperadElement& p2, const MonoidElement& u);

struct OperadDecomp {
  OperadElement shape;
  std::vector<OperadElement> args;
};

/// All (p, [q_i]) with gamma(p; q) = u. Supported for As and Dup (the Dias
/// series groups are out of scope).
const std::vector<OperadDecomp>& operad_decompositions(const SetOperadInstance& inst,
                                                       const OperadElement& u);

}  // namespace tes

#endif
