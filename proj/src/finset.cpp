#include "icat/finset.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace icat {

namespace {

std::string mapShape(const FinMap& f) {
  std::ostringstream os;
  os << f.dom().size << "->" << f.cod().size;
  return os.str();
}

constexpr std::size_t kDenseLimit = 1u << 16;

}  // namespace

FinObj::FinObj(std::size_t n, std::vector<std::string> displayLabels)
    : size(n), labels(std::move(displayLabels)) {
  if (!labels.empty() && labels.size() != size) {
    fail(ErrorKind::ShapeMismatch, "label count " + std::to_string(labels.size()) +
                                       " does not match size " + std::to_string(size));
  }
}

FinMap::FinMap(FinObj dom, FinObj cod, std::vector<Index> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size) {
    fail(ErrorKind::ShapeMismatch, "table length " + std::to_string(table_.size()) +
                                       " does not match domain size " + std::to_string(dom_.size));
  }
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (table_[x] >= cod_.size) {
      fail(ErrorKind::ShapeMismatch, "table entry " + std::to_string(x) + " = " +
                                         std::to_string(table_[x]) + " out of codomain of size " +
                                         std::to_string(cod_.size));
    }
  }
}

FinMap FinMap::identity(const FinObj& x) {
  std::vector<Index> t(x.size);
  std::iota(t.begin(), t.end(), Index{0});
  return FinMap(x, x, std::move(t));
}

FinMap FinMap::constant(const FinObj& dom, const FinObj& cod, Index value) {
  return FinMap(dom, cod, std::vector<Index>(dom.size, value));
}

FinMap FinMap::point(const FinObj& cod, Index value) { return FinMap(FinObj(1), cod, {value}); }

FinMap FinMap::toTerminal(const FinObj& dom) { return constant(dom, FinObj(1), 0); }

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.cod() == g.dom())) {
    fail(ErrorKind::DomainMismatch,
         "cannot compose " + mapShape(g) + " after " + mapShape(f));
  }
  std::vector<Index> t(f.dom().size);
  for (Index x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return FinMap(f.dom(), g.cod(), std::move(t));
}

bool isMono(const FinMap& f) {
  std::vector<bool> seen(f.cod().size, false);
  for (Index y : f.table()) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool isEpi(const FinMap& f) {
  std::vector<bool> hit(f.cod().size, false);
  for (Index y : f.table()) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool isIso(const FinMap& f) { return f.dom().size == f.cod().size && isMono(f); }

FinMap inverse(const FinMap& iso) {
  if (!isMono(iso)) fail(ErrorKind::NotMono, "map " + mapShape(iso) + " is not injective");
  if (!isEpi(iso)) fail(ErrorKind::NotEpi, "map " + mapShape(iso) + " is not surjective");
  std::vector<Index> t(iso.cod().size);
  for (Index x = 0; x < iso.dom().size; ++x) t[iso(x)] = x;
  return FinMap(iso.cod(), iso.dom(), std::move(t));
}

FinObj terminal() { return FinObj(1); }

// ---------------------------------------------------------------------------
// ChosenLimit

ChosenLimit::ChosenLimit(std::vector<FinObj> components, std::vector<Equation> equations,
                         std::size_t bound)
    : components_(std::move(components)) {
  const std::size_t n = components_.size();
  std::vector<std::vector<const Equation*>> checksAt(n);
  for (const Equation& eq : equations) {
    if (eq.left >= n || eq.right >= n) {
      fail(ErrorKind::DomainMismatch, "equation refers to a missing component");
    }
    if (!(eq.leftMap.dom() == components_[eq.left]) ||
        !(eq.rightMap.dom() == components_[eq.right]) ||
        !(eq.leftMap.cod() == eq.rightMap.cod())) {
      fail(ErrorKind::DomainMismatch, "equation maps " + mapShape(eq.leftMap) + " and " +
                                          mapShape(eq.rightMap) + " do not form a cospan over " +
                                          "the components");
    }
    checksAt[std::max(eq.left, eq.right)].push_back(&eq);
  }

  // A component tied to an earlier one by an equation only ranges over the
  // fibre of the earlier value, listed in increasing order.
  struct Guide {
    const Equation* eq = nullptr;
    std::vector<std::vector<Index>> fibres;
  };
  std::vector<Guide> guides(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const Equation* eq : checksAt[c]) {
      if (eq->left == eq->right) continue;
      const FinMap& here = eq->left == c ? eq->leftMap : eq->rightMap;
      guides[c].eq = eq;
      guides[c].fibres.resize(here.cod().size);
      for (Index v = 0; v < here.dom().size; ++v) guides[c].fibres[here(v)].push_back(v);
      break;
    }
  }

  // Depth-first in increasing value order yields lexicographic enumeration.
  std::vector<Index> current(n, 0);
  std::size_t visited = 0;
  std::function<void(std::size_t)> extend;
  auto tryValue = [&](std::size_t c, Index v) {
    if (++visited > bound) {
      fail(ErrorKind::SizeBound, "finite limit enumeration exceeds bound " + std::to_string(bound));
    }
    current[c] = v;
    for (const Equation* eq : checksAt[c]) {
      if (eq->leftMap(current[eq->left]) != eq->rightMap(current[eq->right])) return;
    }
    extend(c + 1);
  };
  extend = [&](std::size_t c) {
    if (c == n) {
      tuples_.insert(tuples_.end(), current.begin(), current.end());
      return;
    }
    if (const Guide& g = guides[c]; g.eq != nullptr) {
      const Equation& eq = *g.eq;
      const Index target =
          eq.left == c ? eq.rightMap(current[eq.right]) : eq.leftMap(current[eq.left]);
      for (Index v : g.fibres[target]) tryValue(c, v);
      return;
    }
    for (Index v = 0; v < components_[c].size; ++v) tryValue(c, v);
  };
  extend(0);
  const std::size_t count = n == 0 ? 1 : tuples_.size() / n;
  apex_ = FinObj(count);

  projections_.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Index> t(count);
    for (Index k = 0; k < count; ++k) t[k] = tuples_[k * n + c];
    projections_.emplace_back(apex_, components_[c], std::move(t));
  }

  // Lookup structure: mixed-radix key when the product fits in 64 bits.
  radix_.assign(n, 1);
  radixFits_ = true;
  std::uint64_t total = 1;
  for (std::size_t c = n; c-- > 0;) {
    radix_[c] = total;
    const std::uint64_t s = std::max<std::uint64_t>(components_[c].size, 1);
    if (total > std::numeric_limits<std::uint64_t>::max() / s) {
      radixFits_ = false;
      break;
    }
    total *= s;
  }
  for (Index k = 0; k < count; ++k) {
    std::span<const Index> t = tuple(k);
    if (radixFits_ && total <= kDenseLimit) {
      if (dense_.empty()) dense_.assign(total, 0);
      dense_[*radixKey(t)] = k + 1;
    } else if (radixFits_) {
      sparse_.emplace(*radixKey(t), k);
    } else {
      byTuple_.emplace(std::vector<Index>(t.begin(), t.end()), k);
    }
  }
}

std::span<const Index> ChosenLimit::tuple(Index k) const {
  return std::span<const Index>(tuples_.data() + k * arity(), arity());
}

std::optional<std::uint64_t> ChosenLimit::radixKey(std::span<const Index> tuple) const {
  std::uint64_t key = 0;
  for (std::size_t c = 0; c < tuple.size(); ++c) {
    if (tuple[c] >= components_[c].size) return std::nullopt;
    key += radix_[c] * tuple[c];
  }
  return key;
}

std::optional<Index> ChosenLimit::find(std::span<const Index> t) const {
  if (t.size() != arity()) return std::nullopt;
  if (arity() == 0) return Index{0};
  if (radixFits_) {
    const auto key = radixKey(t);
    if (!key) return std::nullopt;
    if (!dense_.empty()) {
      const Index v = dense_[*key];
      if (v == 0) return std::nullopt;
      return v - 1;
    }
    if (auto it = sparse_.find(*key); it != sparse_.end()) return it->second;
    return std::nullopt;
  }
  if (auto it = byTuple_.find(std::vector<Index>(t.begin(), t.end())); it != byTuple_.end()) {
    return it->second;
  }
  return std::nullopt;
}

Index ChosenLimit::indexOf(std::span<const Index> t) const {
  if (auto k = find(t)) return *k;
  std::ostringstream os;
  os << "tuple (";
  for (std::size_t c = 0; c < t.size(); ++c) os << (c ? "," : "") << t[c];
  os << ") is not an element of the limit";
  fail(ErrorKind::NonCommuting, os.str());
}

FinMap ChosenLimit::mediate(std::span<const FinMap> legs) const {
  if (legs.size() != arity()) {
    fail(ErrorKind::DomainMismatch, "expected " + std::to_string(arity()) + " cone legs, got " +
                                        std::to_string(legs.size()));
  }
  if (arity() == 0) {
    fail(ErrorKind::DomainMismatch, "mediating into a nullary limit needs a domain");
  }
  const FinObj& z = legs[0].dom();
  for (std::size_t c = 0; c < legs.size(); ++c) {
    if (!(legs[c].dom() == z) || !(legs[c].cod() == components_[c])) {
      fail(ErrorKind::DomainMismatch, "cone leg " + std::to_string(c) + " has shape " +
                                          mapShape(legs[c]));
    }
  }
  std::vector<Index> t(z.size);
  std::vector<Index> buf(arity());
  for (Index x = 0; x < z.size; ++x) {
    for (std::size_t c = 0; c < arity(); ++c) buf[c] = legs[c](x);
    t[x] = indexOf(buf);
  }
  return FinMap(z, apex_, std::move(t));
}

bool ChosenLimit::isLimitCone(std::span<const FinMap> legs) const {
  try {
    return isIso(mediate(legs));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonCommuting) return false;
    throw;
  }
}

ChosenLimit product(const FinObj& a, const FinObj& b) { return ChosenLimit({a, b}, {}); }

ChosenLimit product(std::vector<FinObj> factors) { return ChosenLimit(std::move(factors), {}); }

ChosenLimit pullback(const FinMap& f, const FinMap& g) {
  if (!(f.cod() == g.cod())) {
    fail(ErrorKind::DomainMismatch, "pullback of " + mapShape(f) + " and " + mapShape(g));
  }
  return ChosenLimit({f.dom(), g.dom()}, {Equation{0, f, 1, g}});
}

ChosenLimit equalizer(const FinMap& f, const FinMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    fail(ErrorKind::DomainMismatch, "equalizer of non-parallel " + mapShape(f) + " and " +
                                        mapShape(g));
  }
  return ChosenLimit({f.dom()}, {Equation{0, f, 0, g}});
}

FinMap productMap(const FinMap& f, const FinMap& g) {
  const ChosenLimit src = product(f.dom(), g.dom());
  const ChosenLimit dst = product(f.cod(), g.cod());
  return dst.mediate({compose(f, src.projection(0)), compose(g, src.projection(1))});
}

bool isPullback(const FinMap& p0, const FinMap& p1, const FinMap& f, const FinMap& g) {
  if (!(p0.dom() == p1.dom()) || !(p0.cod() == f.dom()) || !(p1.cod() == g.dom())) {
    fail(ErrorKind::DomainMismatch, "square legs do not match the cospan");
  }
  if (!(compose(f, p0) == compose(g, p1))) return false;
  const ChosenLimit pb = pullback(f, g);
  return pb.isLimitCone(std::vector<FinMap>{p0, p1});
}

bool isEqualizer(const FinMap& e, const FinMap& f, const FinMap& g) {
  if (!(e.cod() == f.dom())) fail(ErrorKind::DomainMismatch, "equalizer leg has wrong codomain");
  if (!(compose(f, e) == compose(g, e))) return false;
  return equalizer(f, g).isLimitCone(std::vector<FinMap>{e});
}

// ---------------------------------------------------------------------------
// Colimits

FinMap Coproduct::copair(const FinMap& f, const FinMap& g) const {
  if (!(f.dom() == inj0.dom()) || !(g.dom() == inj1.dom()) || !(f.cod() == g.cod())) {
    fail(ErrorKind::DomainMismatch, "copair of " + mapShape(f) + " and " + mapShape(g));
  }
  std::vector<Index> t;
  t.reserve(object.size);
  t.insert(t.end(), f.table().begin(), f.table().end());
  t.insert(t.end(), g.table().begin(), g.table().end());
  return FinMap(object, f.cod(), std::move(t));
}

Coproduct coproduct(const FinObj& a, const FinObj& b) {
  FinObj sum(a.size + b.size);
  std::vector<Index> t0(a.size), t1(b.size);
  std::iota(t0.begin(), t0.end(), Index{0});
  std::iota(t1.begin(), t1.end(), a.size);
  return Coproduct{sum, FinMap(a, sum, std::move(t0)), FinMap(b, sum, std::move(t1))};
}

FinMap Coequalizer::descend(const FinMap& h) const {
  if (!(h.dom() == quotient.dom())) {
    fail(ErrorKind::DomainMismatch, "descend: map " + mapShape(h) + " has the wrong domain");
  }
  constexpr Index unset = std::numeric_limits<Index>::max();
  std::vector<Index> t(object.size, unset);
  for (Index y = 0; y < h.dom().size; ++y) {
    Index& slot = t[quotient(y)];
    if (slot == unset) {
      slot = h(y);
    } else if (slot != h(y)) {
      fail(ErrorKind::NonCommuting, "map is not constant on the class of " + std::to_string(y));
    }
  }
  return FinMap(object, h.cod(), std::move(t));
}

Coequalizer coequalizer(const FinMap& f, const FinMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    fail(ErrorKind::DomainMismatch, "coequalizer of non-parallel " + mapShape(f) + " and " +
                                        mapShape(g));
  }
  const std::size_t n = f.cod().size;
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  std::function<Index(Index)> root = [&](Index y) {
    while (parent[y] != y) {
      parent[y] = parent[parent[y]];
      y = parent[y];
    }
    return y;
  };
  for (Index x = 0; x < f.dom().size; ++x) {
    const Index a = root(f(x)), b = root(g(x));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  constexpr Index unset = std::numeric_limits<Index>::max();
  std::vector<Index> classOf(n, unset);
  std::vector<Index> q(n);
  Index next = 0;
  for (Index y = 0; y < n; ++y) {
    const Index r = root(y);
    if (classOf[r] == unset) classOf[r] = next++;
    q[y] = classOf[r];
  }
  FinObj obj(next);
  return Coequalizer{obj, FinMap(f.cod(), obj, std::move(q))};
}

// ---------------------------------------------------------------------------
// Exponentials

namespace {

FinObj exponentialObject(const FinObj& base, const FinObj& target, std::size_t bound) {
  std::size_t size = 1;
  for (std::size_t k = 0; k < base.size; ++k) {
    if (target.size != 0 && size > bound / target.size) {
      fail(ErrorKind::SizeBound, "exponential " + std::to_string(target.size) + "^" +
                                     std::to_string(base.size) + " exceeds bound " +
                                     std::to_string(bound));
    }
    size *= target.size;
  }
  return FinObj(size);
}

}  // namespace

Exponential::Exponential(FinObj base, FinObj target, std::size_t bound)
    : base_(std::move(base)),
      target_(std::move(target)),
      object_(exponentialObject(base_, target_, bound)),
      evalDomain_(product(object_, base_)) {
  std::vector<Index> t(evalDomain_.apex().size);
  for (Index k = 0; k < t.size(); ++k) {
    const Index f = evalDomain_.component(k, 0);
    const Index a = evalDomain_.component(k, 1);
    t[k] = decode(f)[a];
  }
  eval_ = FinMap(evalDomain_.apex(), target_, std::move(t));
}

std::vector<Index> Exponential::decode(Index k) const {
  if (k >= object_.size) fail(ErrorKind::DomainMismatch, "exponential index out of range");
  std::vector<Index> table(base_.size);
  for (std::size_t a = base_.size; a-- > 0;) {
    table[a] = k % target_.size;
    k /= target_.size;
  }
  return table;
}

Index Exponential::encode(std::span<const Index> table) const {
  if (table.size() != base_.size) fail(ErrorKind::DomainMismatch, "table has wrong length");
  Index k = 0;
  for (Index v : table) {
    if (v >= target_.size) fail(ErrorKind::DomainMismatch, "table entry out of range");
    k = k * target_.size + v;
  }
  return k;
}

FinMap Exponential::curry(const FinObj& z, const FinMap& h) const {
  const ChosenLimit za = product(z, base_);
  if (!(h.dom() == za.apex()) || !(h.cod() == target_)) {
    fail(ErrorKind::DomainMismatch, "curry expects a map Z x A -> B, got " + mapShape(h));
  }
  std::vector<Index> t(z.size);
  std::vector<Index> row(base_.size);
  for (Index x = 0; x < z.size; ++x) {
    for (Index a = 0; a < base_.size; ++a) row[a] = h(za.indexOf({x, a}));
    t[x] = encode(row);
  }
  return FinMap(z, object_, std::move(t));
}

FinMap Exponential::uncurry(const FinMap& k) const {
  if (!(k.cod() == object_)) fail(ErrorKind::DomainMismatch, "uncurry expects a map into B^A");
  const ChosenLimit za = product(k.dom(), base_);
  return compose(eval_, evalDomain_.mediate({compose(k, za.projection(0)), za.projection(1)}));
}

// ---------------------------------------------------------------------------
// Classifier and factorisation

SubobjectClassifier subobjectClassifier() {
  FinObj omega(2, {"false", "true"});
  return SubobjectClassifier{omega, FinMap::point(omega, 1)};
}

FinMap characteristicMap(const FinMap& mono) {
  if (!isMono(mono)) fail(ErrorKind::NotMono, "map " + mapShape(mono) + " has a repeated entry");
  std::vector<Index> t(mono.cod().size, 0);
  for (Index y : mono.table()) t[y] = 1;
  return FinMap(mono.cod(), FinObj(2), std::move(t));
}

ImageFactorisation factorEpiMono(const FinMap& f) {
  constexpr Index unset = std::numeric_limits<Index>::max();
  std::vector<Index> rank(f.cod().size, unset);
  for (Index y : f.table()) rank[y] = 0;
  std::vector<Index> inclusion;
  for (Index y = 0; y < rank.size(); ++y) {
    if (rank[y] != unset) {
      rank[y] = inclusion.size();
      inclusion.push_back(y);
    }
  }
  FinObj image(inclusion.size());
  std::vector<Index> onto(f.dom().size);
  for (Index x = 0; x < onto.size(); ++x) onto[x] = rank[f(x)];
  return ImageFactorisation{FinMap(f.dom(), image, std::move(onto)),
                            FinMap(image, f.cod(), std::move(inclusion))};
}

FinMap chooseSection(const FinMap& e) {
  constexpr Index unset = std::numeric_limits<Index>::max();
  std::vector<Index> s(e.cod().size, unset);
  for (Index x = 0; x < e.dom().size; ++x) {
    if (s[e(x)] == unset) s[e(x)] = x;
  }
  for (Index y = 0; y < s.size(); ++y) {
    if (s[y] == unset) {
      fail(ErrorKind::NotEpi, "element " + std::to_string(y) + " has no preimage");
    }
  }
  return FinMap(e.cod(), e.dom(), std::move(s));
}

}  // namespace icat
