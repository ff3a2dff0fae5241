#ifndef TES_JSON_IO_HPP
#define TES_JSON_IO_HPP

#include <json.hpp>

#include "tes/hopf.hpp"
#include "tes/ring.hpp"
#include "tes/series.hpp"

namespace tes {

/// Ring values: a rational is the string "p/q" (or "p"), a polynomial a
/// list of {"vars": {name: exponent}, "q": "p/q"}.
nlohmann::json ring_to_json(const RingValue& v);
RingValue ring_from_json(const nlohmann::json& j);

/// Series document:
/// {"carrier":"monoid"|"operad", "instance":"dup"|"as"|"dias",
///  "p2":"over"|"under"|null, "truncation":N,
///  "terms":[{"key":"<bitstring or integer>", "coeff":<ring>}]}
/// Terms are emitted in canonical element order.
nlohmann::json series_to_json(const GradedSeries& s);
GradedSeries series_from_json(const nlohmann::json& j);

/// Tensors: list of {"left":[codes], "right":[codes], "q":"p/q"} where a
/// code is a tree bitstring or "a<n>"/"b<n>".
nlohmann::json tensor_to_json(const Tensor2& t);
nlohmann::json free_element_to_json(const FreeElement& x);

}  // namespace tes

#endif
