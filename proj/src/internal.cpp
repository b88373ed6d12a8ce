#include "icat/internal.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace icat {

namespace {

constexpr Index npos = std::numeric_limits<Index>::max();

std::string num(std::size_t v) { return std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------------------
// ValidationReport

void ValidationReport::add(std::string axiom, Index witness, std::string detail) {
  violations_.push_back(Violation{std::move(axiom), witness, std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const Violation& v : other.violations_) {
    violations_.push_back(Violation{prefix + v.axiom, v.witness, v.detail});
  }
}

bool ValidationReport::mentions(const std::string& axiom) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations_.size() << " violation(s):";
  for (const Violation& v : violations_) {
    os << "\n  " << v.axiom << " at " << v.witness;
    if (!v.detail.empty()) os << " (" << v.detail << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Data types

InternalCategory::InternalCategory(FinMap d0, FinMap d1, FinMap i, FinMap m)
    : d0_(std::move(d0)), d1_(std::move(d1)), i_(std::move(i)), m_(std::move(m)) {
  if (!(d1_.dom() == d0_.dom()) || !(d1_.cod() == d0_.cod())) {
    fail(ErrorKind::ShapeMismatch, "source and target assigners are not parallel");
  }
  if (!(i_.dom() == C0()) || !(i_.cod() == C1())) {
    fail(ErrorKind::ShapeMismatch, "identity assigner must be C0 -> C1");
  }
  pairs_ = std::make_shared<const ChosenLimit>(pullback(d1_, d0_));
  if (!(m_.dom() == pairs_->apex()) || !(m_.cod() == C1())) {
    fail(ErrorKind::ShapeMismatch, "composition must be C2 -> C1 with |C2| = " +
                                       num(pairs_->apex().size) + ", got " +
                                       num(m_.dom().size) + " -> " + num(m_.cod().size));
  }
}

ChosenLimit InternalCategory::composableTriples() const {
  return ChosenLimit({C1(), C1(), C1()}, {Equation{0, d1_, 1, d0_}, Equation{1, d1_, 2, d0_}});
}

InternalFunctor::InternalFunctor(InternalCategory dom, InternalCategory cod, FinMap f0, FinMap f1)
    : dom_(std::move(dom)), cod_(std::move(cod)), f0_(std::move(f0)), f1_(std::move(f1)) {
  if (!(f0_.dom() == dom_.C0()) || !(f0_.cod() == cod_.C0())) {
    fail(ErrorKind::ShapeMismatch, "object component has the wrong shape");
  }
  if (!(f1_.dom() == dom_.C1()) || !(f1_.cod() == cod_.C1())) {
    fail(ErrorKind::ShapeMismatch, "arrow component has the wrong shape");
  }
}

FinMap InternalFunctor::f2() const {
  const ChosenLimit& a2 = dom_.composablePairs();
  const ChosenLimit& b2 = cod_.composablePairs();
  return b2.mediate({compose(f1_, a2.projection(0)), compose(f1_, a2.projection(1))});
}

InternalNatTrans::InternalNatTrans(InternalFunctor src, InternalFunctor tgt, FinMap alpha)
    : src_(std::move(src)), tgt_(std::move(tgt)), alpha_(std::move(alpha)) {
  if (!(src_.dom() == tgt_.dom()) || !(src_.cod() == tgt_.cod())) {
    fail(ErrorKind::ShapeMismatch, "2-cell between non-parallel functors");
  }
  if (!(alpha_.dom() == src_.dom().C0()) || !(alpha_.cod() == src_.cod().C1())) {
    fail(ErrorKind::ShapeMismatch, "component assigner must be A0 -> B1");
  }
}

InternalCategory makeCategory(FinMap d0, FinMap d1, FinMap i,
                              const std::function<Index(Index, Index)>& comp) {
  const ChosenLimit pairs = pullback(d1, d0);
  std::vector<Index> m(pairs.apex().size);
  for (Index k = 0; k < m.size(); ++k) m[k] = comp(pairs.component(k, 0), pairs.component(k, 1));
  FinObj arrows = d0.dom();
  return InternalCategory(std::move(d0), std::move(d1), std::move(i),
                          FinMap(pairs.apex(), arrows, std::move(m)));
}

// ---------------------------------------------------------------------------
// Validators

ValidationReport validateCategory(const InternalCategory& c) {
  ValidationReport r;
  for (Index x = 0; x < c.C0().size; ++x) {
    if (c.target(c.identity(x)) != x) r.add("identity-target", x);
    if (c.source(c.identity(x)) != x) r.add("identity-source", x);
  }
  const ChosenLimit& pairs = c.composablePairs();
  for (Index k = 0; k < pairs.apex().size; ++k) {
    const Index u = pairs.component(k, 0), v = pairs.component(k, 1);
    const Index uv = c.m()(k);
    if (c.target(uv) != c.target(u)) r.add("composite-target", k);
    if (c.source(uv) != c.source(v)) r.add("composite-source", k);
  }
  for (Index a = 0; a < c.C1().size; ++a) {
    if (auto k = pairs.find({c.identity(c.target(a)), a})) {
      if (c.m()(*k) != a) r.add("left-unit", a, "i(d0 a) . a != a");
    } else {
      r.add("left-unit", a, "(i(d0 a), a) is not composable");
    }
    if (auto k = pairs.find({a, c.identity(c.source(a))})) {
      if (c.m()(*k) != a) r.add("right-unit", a, "a . i(d1 a) != a");
    } else {
      r.add("right-unit", a, "(a, i(d1 a)) is not composable");
    }
  }
  const ChosenLimit triples = c.composableTriples();
  for (Index k = 0; k < triples.apex().size; ++k) {
    const Index u = triples.component(k, 0), v = triples.component(k, 1),
                w = triples.component(k, 2);
    const Index uv = c.m()(pairs.indexOf({u, v}));
    const Index vw = c.m()(pairs.indexOf({v, w}));
    const auto left = pairs.find({uv, w});
    const auto right = pairs.find({u, vw});
    if (!left || !right) {
      r.add("associativity", k, "bracketings are not composable");
    } else if (c.m()(*left) != c.m()(*right)) {
      r.add("associativity", k, "(uv)w != u(vw)");
    }
  }
  return r;
}

ValidationReport validateFunctor(const InternalFunctor& f) {
  ValidationReport r;
  const InternalCategory& a = f.dom();
  const InternalCategory& b = f.cod();
  for (Index x = 0; x < a.C1().size; ++x) {
    if (b.target(f.f1()(x)) != f.f0()(a.target(x))) r.add("preserves-target", x);
    if (b.source(f.f1()(x)) != f.f0()(a.source(x))) r.add("preserves-source", x);
  }
  for (Index x = 0; x < a.C0().size; ++x) {
    if (f.f1()(a.identity(x)) != b.identity(f.f0()(x))) r.add("preserves-identities", x);
  }
  const ChosenLimit& a2 = a.composablePairs();
  const ChosenLimit& b2 = b.composablePairs();
  for (Index k = 0; k < a2.apex().size; ++k) {
    const Index u = a2.component(k, 0), v = a2.component(k, 1);
    if (auto image = b2.find({f.f1()(u), f.f1()(v)})) {
      if (b.m()(*image) != f.f1()(a.m()(k))) r.add("preserves-composition", k);
    } else {
      r.add("preserves-composition", k, "image pair is not composable");
    }
  }
  return r;
}

ValidationReport validateNatTrans(const InternalNatTrans& t) {
  ValidationReport r;
  const InternalCategory& a = t.src().dom();
  const InternalCategory& b = t.src().cod();
  const FinMap& f0 = t.src().f0();
  const FinMap& g0 = t.tgt().f0();
  for (Index x = 0; x < a.C0().size; ++x) {
    if (b.source(t.alpha()(x)) != f0(x)) r.add("component-source", x);
    if (b.target(t.alpha()(x)) != g0(x)) r.add("component-target", x);
  }
  const ChosenLimit& b2 = b.composablePairs();
  for (Index e = 0; e < a.C1().size; ++e) {
    const auto lhs = b2.find({t.tgt().f1()(e), t.alpha()(a.source(e))});
    const auto rhs = b2.find({t.alpha()(a.target(e)), t.src().f1()(e)});
    if (!lhs || !rhs) {
      r.add("naturality", e, "naturality square is not composable");
    } else if (b.m()(*lhs) != b.m()(*rhs)) {
      r.add("naturality", e);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// 2-category operations

InternalFunctor idFunctor(const InternalCategory& c) {
  return InternalFunctor(c, c, FinMap::identity(c.C0()), FinMap::identity(c.C1()));
}

InternalFunctor composeFunctors(const InternalFunctor& g, const InternalFunctor& f) {
  if (!(f.cod() == g.dom())) {
    fail(ErrorKind::DomainMismatch, "functor codomain does not match the next domain");
  }
  return InternalFunctor(f.dom(), g.cod(), compose(g.f0(), f.f0()), compose(g.f1(), f.f1()));
}

InternalNatTrans identityTrans(const InternalFunctor& f) {
  return InternalNatTrans(f, f, compose(f.cod().i(), f.f0()));
}

InternalNatTrans vcomp(const InternalNatTrans& beta, const InternalNatTrans& alpha) {
  if (!(alpha.tgt() == beta.src())) {
    fail(ErrorKind::DomainMismatch, "vertical composite needs tgt(alpha) == src(beta)");
  }
  const InternalCategory& b = alpha.src().cod();
  std::vector<Index> t(alpha.alpha().dom().size);
  for (Index x = 0; x < t.size(); ++x) t[x] = b.compose(beta.alpha()(x), alpha.alpha()(x));
  return InternalNatTrans(alpha.src(), beta.tgt(), FinMap(alpha.alpha().dom(), b.C1(), t));
}

InternalNatTrans whiskerLeft(const InternalFunctor& h, const InternalNatTrans& alpha) {
  if (!(h.dom() == alpha.src().cod())) {
    fail(ErrorKind::DomainMismatch, "whiskering functor does not start where the 2-cell ends");
  }
  return InternalNatTrans(composeFunctors(h, alpha.src()), composeFunctors(h, alpha.tgt()),
                          compose(h.f1(), alpha.alpha()));
}

InternalNatTrans whiskerRight(const InternalNatTrans& alpha, const InternalFunctor& k) {
  if (!(k.cod() == alpha.src().dom())) {
    fail(ErrorKind::DomainMismatch, "whiskering functor does not end where the 2-cell starts");
  }
  return InternalNatTrans(composeFunctors(alpha.src(), k), composeFunctors(alpha.tgt(), k),
                          compose(alpha.alpha(), k.f0()));
}

InternalNatTrans hcomp(const InternalNatTrans& beta, const InternalNatTrans& alpha) {
  return vcomp(whiskerRight(beta, alpha.tgt()), whiskerLeft(beta.src(), alpha));
}

// ---------------------------------------------------------------------------
// Predicates

FinMap endpoints(const InternalCategory& c) {
  return product(c.C0(), c.C0()).mediate({c.d0(), c.d1()});
}

namespace {

/// A1 -> pullback((d0,d1)_B, f0 x f0); nullopt when f is not a graph morphism.
std::optional<FinMap> fullyFaithfulComparison(const InternalFunctor& f) {
  const ChosenLimit pb = pullback(endpoints(f.cod()), productMap(f.f0(), f.f0()));
  try {
    return pb.mediate({f.f1(), endpoints(f.dom())});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonCommuting) return std::nullopt;
    throw;
  }
}

}  // namespace

bool isFaithful(const InternalFunctor& f) {
  const auto cmp = fullyFaithfulComparison(f);
  return cmp && isMono(*cmp);
}

bool isFullyFaithful(const InternalFunctor& f) {
  const auto cmp = fullyFaithfulComparison(f);
  return cmp && isIso(*cmp);
}

bool isMonoFunctor(const InternalFunctor& f) { return isFaithful(f) && isMono(f.f0()); }

bool isFullMono(const InternalFunctor& f) { return isFullyFaithful(f) && isMono(f.f0()); }

bool isEpiOnObjects(const InternalFunctor& f) { return isEpi(f.f0()); }

bool isIsoOnObjects(const InternalFunctor& f) { return isIso(f.f0()); }

bool isIsomorphism(const InternalFunctor& f) {
  return isIso(f.f0()) && isIso(f.f1()) && validateFunctor(f).ok();
}

bool isInvertible(const InternalNatTrans& t) {
  const InternalCategory& b = t.src().cod();
  const ChosenLimit& pairs = b.composablePairs();
  for (Index x = 0; x < t.alpha().dom().size; ++x) {
    const Index a = t.alpha()(x);
    bool found = false;
    for (Index inv = 0; inv < b.C1().size && !found; ++inv) {
      const auto there = pairs.find({inv, a});
      const auto back = pairs.find({a, inv});
      found = there && back && b.m()(*there) == b.identity(b.source(a)) &&
              b.m()(*back) == b.identity(b.target(a));
    }
    if (!found) return false;
  }
  return true;
}

FullyFaithfulLifter::FullyFaithfulLifter(const InternalFunctor& f)
    : fibre_(pullback(endpoints(f.cod()), productMap(f.f0(), f.f0()))),
      arrowFor_(fibre_.apex().size, npos),
      sourcePairs_(product(f.dom().C0(), f.dom().C0())) {
  const FinMap ends = endpoints(f.dom());
  for (Index a = 0; a < f.dom().C1().size; ++a) {
    const auto k = fibre_.find({f.f1()(a), ends(a)});
    if (!k) continue;
    arrowFor_[*k] = arrowFor_[*k] == npos ? a : npos - 1;
  }
}

Index FullyFaithfulLifter::lift(Index b, Index target, Index source) const {
  const auto k = fibre_.find({b, sourcePairs_.indexOf({target, source})});
  if (!k || arrowFor_[*k] >= npos - 1) {
    fail(ErrorKind::FiberNotSingleton, "arrow " + num(b) + " has no unique lift between " +
                                           num(source) + " and " + num(target));
  }
  return arrowFor_[*k];
}

// ---------------------------------------------------------------------------
// Isomorphism search

std::optional<InternalFunctor> findIsomorphism(const InternalCategory& a,
                                               const InternalCategory& b) {
  if (a.C0().size != b.C0().size || a.C1().size != b.C1().size) return std::nullopt;
  const std::size_t n0 = a.C0().size, n1 = a.C1().size;

  auto signature = [](const InternalCategory& c, Index x) {
    std::size_t out = 0, in = 0, endo = 0;
    for (Index e = 0; e < c.C1().size; ++e) {
      if (c.source(e) == x) ++out;
      if (c.target(e) == x) ++in;
      if (c.source(e) == x && c.target(e) == x) ++endo;
    }
    return std::make_tuple(out, in, endo);
  };
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> sigA(n0), sigB(n0);
  for (Index x = 0; x < n0; ++x) {
    sigA[x] = signature(a, x);
    sigB[x] = signature(b, x);
  }

  const ChosenLimit& a2 = a.composablePairs();
  const ChosenLimit& b2 = b.composablePairs();
  // Composition checks fire once u, v and u.v all have images.
  std::vector<std::vector<Index>> checksAt(n1);
  for (Index k = 0; k < a2.apex().size; ++k) {
    const Index last =
        std::max({a2.component(k, 0), a2.component(k, 1), a.m()(k)});
    checksAt[last].push_back(k);
  }

  std::vector<Index> obj(n0, npos), arr(n1, npos);
  std::vector<bool> usedObj(n0, false), usedArr(n1, false);
  std::size_t budget = 50'000'000;

  std::function<bool(Index)> assignArrow = [&](Index e) -> bool {
    if (e == n1) return true;
    const Index s = obj[a.source(e)], t = obj[a.target(e)];
    const bool isId = a.identity(a.source(e)) == e;
    for (Index cand = 0; cand < n1; ++cand) {
      if (--budget == 0) fail(ErrorKind::SizeBound, "isomorphism search budget exhausted");
      if (usedArr[cand] || b.source(cand) != s || b.target(cand) != t) continue;
      if (isId != (b.identity(s) == cand)) continue;
      arr[e] = cand;
      bool ok = true;
      for (Index k : checksAt[e]) {
        const auto img = b2.find({arr[a2.component(k, 0)], arr[a2.component(k, 1)]});
        if (!img || b.m()(*img) != arr[a.m()(k)]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        usedArr[cand] = true;
        if (assignArrow(e + 1)) return true;
        usedArr[cand] = false;
      }
      arr[e] = npos;
    }
    return false;
  };

  std::function<bool(Index)> assignObject = [&](Index x) -> bool {
    if (x == n0) return assignArrow(0);
    for (Index y = 0; y < n0; ++y) {
      if (--budget == 0) fail(ErrorKind::SizeBound, "isomorphism search budget exhausted");
      if (usedObj[y] || sigA[x] != sigB[y]) continue;
      obj[x] = y;
      usedObj[y] = true;
      if (assignObject(x + 1)) return true;
      usedObj[y] = false;
    }
    obj[x] = npos;
    return false;
  };

  if (!assignObject(0)) return std::nullopt;
  InternalFunctor iso(a, b, FinMap(a.C0(), b.C0(), obj), FinMap(a.C1(), b.C1(), arr));
  if (!isIsomorphism(iso)) return std::nullopt;
  return iso;
}

}  // namespace icat
