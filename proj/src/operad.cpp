#include "tes/operad.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tes {

std::string operad_name(OperadId id) {
  switch (id) {
    case OperadId::As: return "as";
    case OperadId::Dias: return "dias";
    case OperadId::Dup: return "dup";
  }
  throw std::logic_error("operad_name: bad id");
}

OperadId operad_from_name(const std::string& s) {
  if (s == "as") return OperadId::As;
  if (s == "dias") return OperadId::Dias;
  if (s == "dup") return OperadId::Dup;
  throw std::invalid_argument("unknown operad instance '" + s + "' (expected as, dias or dup)");
}

int OperadElement::arity() const {
  switch (inst) {
    case OperadId::As:
    case OperadId::Dias: return a;
    case OperadId::Dup: return tree_order(a);
  }
  throw std::logic_error("OperadElement::arity: bad instance");
}

TreeId OperadElement::tree() const {
  if (inst != OperadId::Dup) throw std::logic_error("OperadElement::tree: not a Dup element");
  return a;
}

bool operad_less(const OperadElement& x, const OperadElement& y) {
  if (x.inst != y.inst) return x.inst < y.inst;
  if (x.inst == OperadId::Dup) return tree_less(x.a, y.a);
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

std::string operad_element_str(const OperadElement& e) {
  switch (e.inst) {
    case OperadId::As: return std::to_string(e.a);
    case OperadId::Dias: return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case OperadId::Dup: return tree_code(e.a);
  }
  throw std::logic_error("operad_element_str: bad instance");
}

MonoidElement MonoidElement::neutral(OperadId id) {
  MonoidElement m;
  m.inst = id;
  m.a = id == OperadId::Dup ? kLeaf : 0;
  m.b = 0;
  return m;
}

MonoidElement MonoidElement::of(const OperadElement& p) {
  MonoidElement m;
  m.inst = p.inst;
  m.a = p.a;
  m.b = p.b;
  return m;
}

bool MonoidElement::is_neutral() const {
  return inst == OperadId::Dup ? a == kLeaf : a == 0;
}

int MonoidElement::grading() const {
  if (inst == OperadId::Dup) return tree_order(a);
  return a;
}

OperadElement MonoidElement::element() const {
  if (is_neutral()) throw std::logic_error("MonoidElement::element: neutral");
  OperadElement p;
  p.inst = inst;
  p.a = a;
  p.b = b;
  return p;
}

TreeId MonoidElement::tree() const {
  if (inst != OperadId::Dup) throw std::logic_error("MonoidElement::tree: not a Dup element");
  return a;
}

bool monoid_less(const MonoidElement& x, const MonoidElement& y) {
  if (x.inst != y.inst) return x.inst < y.inst;
  if (x.inst == OperadId::Dup) return tree_less(x.a, y.a);
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

std::string monoid_element_str(const MonoidElement& e) {
  if (e.inst == OperadId::Dup) return tree_code(e.a);
  if (e.is_neutral()) return "e";
  return operad_element_str(e.element());
}

SetOperadInstance::SetOperadInstance(OperadId id) : id_(id) {
  switch (id) {
    case OperadId::As: assoc_ = {OperadElement{id, 2, 0}}; break;
    case OperadId::Dias: assoc_ = {OperadElement{id, 2, 1}, OperadElement{id, 2, 2}}; break;
    case OperadId::Dup: {
      TreeId ab = over(tree_vtx(), tree_vtx());
      TreeId ba = under(tree_vtx(), tree_vtx());
      assoc_ = {OperadElement{id, ab, 0}, OperadElement{id, ba, 0}};
      break;
    }
  }
  // Validate the declaration: gamma(p2; p2, id) = gamma(p2; id, p2).
  for (const OperadElement& p2 : assoc_) {
    OperadElement l[2] = {p2, identity()};
    OperadElement r[2] = {identity(), p2};
    if (!(compose(p2, l) == compose(p2, r)))
      throw std::logic_error("SetOperadInstance: declared element is not associative");
  }
}

const SetOperadInstance& SetOperadInstance::get(OperadId id) {
  static const SetOperadInstance as(OperadId::As);
  static const SetOperadInstance dias(OperadId::Dias);
  static const SetOperadInstance dup(OperadId::Dup);
  switch (id) {
    case OperadId::As: return as;
    case OperadId::Dias: return dias;
    case OperadId::Dup: return dup;
  }
  throw std::logic_error("SetOperadInstance::get: bad id");
}

OperadElement SetOperadInstance::identity() const {
  switch (id_) {
    case OperadId::As: return OperadElement{id_, 1, 0};
    case OperadId::Dias: return OperadElement{id_, 1, 1};
    case OperadId::Dup: return OperadElement{id_, tree_vtx(), 0};
  }
  throw std::logic_error("identity: bad id");
}

std::vector<OperadElement> SetOperadInstance::enumerate(int n) const {
  if (n < 1) throw std::invalid_argument("enumerate: arity must be >= 1");
  std::vector<OperadElement> out;
  switch (id_) {
    case OperadId::As:
      out.push_back(OperadElement{id_, n, 0});
      break;
    case OperadId::Dias:
      for (int i = 1; i <= n; ++i) out.push_back(OperadElement{id_, n, i});
      break;
    case OperadId::Dup:
      for (TreeId t : trees_of_order(n)) out.push_back(OperadElement{id_, t, 0});
      break;
  }
  return out;
}

bool SetOperadInstance::is_associative(const OperadElement& p2) const {
  for (const OperadElement& q : assoc_)
    if (q == p2) return true;
  return false;
}

OperadElement SetOperadInstance::compose(const OperadElement& p,
                                         std::span<const OperadElement> args) const {
  if (p.inst != id_) throw std::invalid_argument("compose: element from a different instance");
  if (static_cast<int>(args.size()) != p.arity())
    throw std::invalid_argument("compose: expected " + std::to_string(p.arity()) +
                                " arguments, got " + std::to_string(args.size()));
  int total = 0;
  for (const OperadElement& q : args) {
    if (q.inst != id_) throw std::invalid_argument("compose: argument from a different instance");
    total += q.arity();
  }
  switch (id_) {
    case OperadId::As:
      return OperadElement{id_, total, 0};
    case OperadId::Dias: {
      // Offset form: the i-th slot receives the index of its argument shifted
      // past the arities of the preceding arguments.
      int offset = 0;
      for (int k = 0; k + 1 < p.b; ++k) offset += args[k].arity();
      return OperadElement{id_, total, offset + args[p.b - 1].b};
    }
    case OperadId::Dup: {
      std::vector<TreeId> ts;
      ts.reserve(args.size());
      for (const OperadElement& q : args) ts.push_back(q.tree());
      return OperadElement{id_, mu_apply(p.tree(), ts), 0};
    }
  }
  throw std::logic_error("compose: bad id");
}

OperadElement operad_compose(const SetOperadInstance& inst, const OperadElement& p,
                             std::span<const OperadElement> args) {
  return inst.compose(p, args);
}

MonoidElement monoid_mul(const SetOperadInstance& inst, const OperadElement& p2,
                         const MonoidElement& x, const MonoidElement& y) {
  if (!inst.is_associative(p2))
    throw std::invalid_argument("monoid_mul: " + operad_element_str(p2) +
                                " is not a declared associative element");
  if (x.inst != inst.id() || y.inst != inst.id())
    throw std::invalid_argument("monoid_mul: element from a different instance");
  if (x.is_neutral()) return y;
  if (y.is_neutral()) return x;
  OperadElement args[2] = {x.element(), y.element()};
  return MonoidElement::of(inst.compose(p2, args));
}

std::vector<std::pair<MonoidElement, MonoidElement>> monoid_factorizations(
    const SetOperadInstance& inst, const OperadElement& p2, const MonoidElement& u) {
  if (!inst.is_associative(p2))
    throw std::invalid_argument("monoid_factorizations: " + operad_element_str(p2) +
                                " is not a declared associative element");
  std::vector<std::pair<MonoidElement, MonoidElement>> out;
  const MonoidElement e = MonoidElement::neutral(inst.id());
  if (u.is_neutral()) {
    out.push_back({e, e});
    return out;
  }
  if (inst.id() == OperadId::Dup) {
    // Over product: split along the left spine; under product: right spine.
    TreeId ab = over(tree_vtx(), tree_vtx());
    bool is_over = p2.tree() == ab;
    TreeId t = u.tree();
    std::vector<TreeId> spine;
    for (TreeId c = t; c != kLeaf; c = is_over ? tree_left(c) : tree_right(c)) spine.push_back(c);
    auto cut = [&](TreeId w, int depth) {
      // w with its spine subtree at the given depth replaced by a leaf
      std::vector<TreeId> stack;
      TreeId c = w;
      for (int i = 0; i < depth; ++i) {
        stack.push_back(c);
        c = is_over ? tree_left(c) : tree_right(c);
      }
      TreeId res = kLeaf;
      for (auto it = stack.rbegin(); it != stack.rend(); ++it)
        res = is_over ? tree_node(res, tree_right(*it)) : tree_node(tree_left(*it), res);
      return res;
    };
    int len = static_cast<int>(spine.size());
    // depth i: bottom part = spine[i] (leaf when i == len), complement = cut.
    for (int i = 0; i <= len; ++i) {
      TreeId bottom = i < len ? spine[i] : kLeaf;
      TreeId rest = cut(t, i);
      MonoidElement mb{OperadId::Dup, bottom, 0};
      MonoidElement mr{OperadId::Dup, rest, 0};
      if (is_over)
        out.push_back({mb, mr});  // t = bottom / rest
      else
        out.push_back({mr, mb});  // t = rest \ bottom
    }
  } else {
    // Generic filter over gradings; fine for As and for desk-scale Dias.
    int n = u.grading();
    for (int k = 0; k <= n; ++k) {
      std::vector<MonoidElement> ls, rs;
      auto fill = [&](int g, std::vector<MonoidElement>& v) {
        if (g == 0) {
          v.push_back(e);
        } else {
          for (const OperadElement& q : inst.enumerate(g)) v.push_back(MonoidElement::of(q));
        }
      };
      fill(k, ls);
      fill(n - k, rs);
      for (const MonoidElement& l : ls)
        for (const MonoidElement& r : rs)
          if (monoid_mul(inst, p2, l, r) == u) out.push_back({l, r});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (!(x.first == y.first)) return monoid_less(x.first, y.first);
    return monoid_less(x.second, y.second);
  });
  return out;
}

namespace {

std::vector<OperadDecomp> as_decompositions(int n) {
  // (m, compositions of n into m positive parts)
  std::vector<OperadDecomp> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      OperadDecomp d;
      d.shape = OperadElement{OperadId::As, static_cast<int>(parts.size()), 0};
      for (int k : parts) d.args.push_back(OperadElement{OperadId::As, k, 0});
      out.push_back(std::move(d));
      return;
    }
    for (int k = 1; k <= rest; ++k) {
      parts.push_back(k);
      self(self, rest - k);
      parts.pop_back();
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end(), [](const OperadDecomp& x, const OperadDecomp& y) {
    if (!(x.shape == y.shape)) return operad_less(x.shape, y.shape);
    return std::lexicographical_compare(x.args.begin(), x.args.end(), y.args.begin(), y.args.end(),
                                        operad_less);
  });
  return out;
}

}  // namespace

const std::vector<OperadDecomp>& operad_decompositions(const SetOperadInstance& inst,
                                                       const OperadElement& u) {
  static std::map<std::pair<int, std::int64_t>, std::vector<OperadDecomp>> memo;
  static std::mutex mu;
  std::pair<int, std::int64_t> key{static_cast<int>(inst.id()),
                                   (static_cast<std::int64_t>(u.a) << 16) | u.b};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::vector<OperadDecomp> dec;
  switch (inst.id()) {
    case OperadId::As:
      dec = as_decompositions(u.arity());
      break;
    case OperadId::Dup: {
      for (const TreeDecomp& td : substitution_decompositions(u.tree())) {
        OperadDecomp d;
        d.shape = OperadElement{OperadId::Dup, td.shape, 0};
        for (TreeId s : td.args) d.args.push_back(OperadElement{OperadId::Dup, s, 0});
        dec.push_back(std::move(d));
      }
      break;
    }
    case OperadId::Dias:
      throw std::logic_error("operad_decompositions: Dias series are out of scope");
  }
  std::lock_guard<std::mutex> lock(mu);
  return memo.try_emplace(key, std::move(dec)).first->second;
}

}  // namespace tes
