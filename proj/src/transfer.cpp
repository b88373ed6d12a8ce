#include "icat/transfer.hpp"

#include <numeric>

namespace icat {

// ---------------------------------------------------------------------------
// disc, indisc, components

InternalCategory disc(const FinObj& x) {
  const FinMap id = FinMap::identity(x);
  return makeCategory(id, id, id, [](Index u, Index) { return u; });
}

InternalCategory indisc(const FinObj& x) {
  const ChosenLimit sq = product(x, x);
  const FinMap diagonal = sq.mediate({FinMap::identity(x), FinMap::identity(x)});
  return makeCategory(sq.projection(0), sq.projection(1), diagonal, [&](Index u, Index v) {
    return sq.indexOf({sq.component(u, 0), sq.component(v, 1)});
  });
}

InternalFunctor discMap(const FinMap& f) { return InternalFunctor(disc(f.dom()), disc(f.cod()), f, f); }

InternalFunctor indiscMap(const FinMap& f) {
  return InternalFunctor(indisc(f.dom()), indisc(f.cod()), f, productMap(f, f));
}

const FinObj& objectsPart(const InternalCategory& c) { return c.C0(); }
const FinObj& arrowsPart(const InternalCategory& c) { return c.C1(); }

Coequalizer componentsQuotient(const InternalCategory& c) { return coequalizer(c.d0(), c.d1()); }

FinObj pi0(const InternalCategory& c) { return componentsQuotient(c).object; }

FinMap pi0Map(const InternalFunctor& f) {
  const Coequalizer qa = componentsQuotient(f.dom());
  const Coequalizer qb = componentsQuotient(f.cod());
  return qa.descend(compose(qb.quotient, f.f0()));
}

bool reflectsIdentities(const InternalFunctor& f) {
  const InternalCategory& a = f.dom();
  const InternalCategory& b = f.cod();
  for (Index e = 0; e < a.C1().size; ++e) {
    const Index image = f.f1()(e);
    if (b.identity(b.source(image)) == image && a.identity(a.source(e)) != e) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Simplex category

std::vector<Monotone> monotoneMaps(std::size_t n, std::size_t k) {
  std::vector<Monotone> out;
  std::vector<Index> values(n + 1, 0);
  // Odometer over non-decreasing sequences.
  while (true) {
    out.push_back(Monotone{n, k, values});
    std::size_t j = n + 1;
    while (j > 0 && values[j - 1] == k) --j;
    if (j == 0) break;
    const Index v = values[j - 1] + 1;
    for (std::size_t t = j - 1; t <= n; ++t) values[t] = v;
  }
  return out;
}

Monotone composeMonotone(const Monotone& psi, const Monotone& theta) {
  if (theta.to != psi.from) fail(ErrorKind::DomainMismatch, "monotone maps do not compose");
  Monotone r{theta.from, psi.to, std::vector<Index>(theta.from + 1)};
  for (Index j = 0; j <= theta.from; ++j) r.values[j] = psi(theta(j));
  return r;
}

Monotone identityMonotone(std::size_t n) {
  Monotone r{n, n, std::vector<Index>(n + 1)};
  std::iota(r.values.begin(), r.values.end(), Index{0});
  return r;
}

Monotone coface(std::size_t n, std::size_t i) {
  Monotone r{n - 1, n, {}};
  for (Index j = 0; j <= n; ++j)
    if (j != i) r.values.push_back(j);
  return r;
}

Monotone codegeneracy(std::size_t n, std::size_t i) {
  Monotone r{n + 1, n, {}};
  for (Index j = 0; j <= n + 1; ++j) r.values.push_back(j <= i ? j : j - 1);
  return r;
}

// ---------------------------------------------------------------------------
// Nerve

TruncatedNerve::TruncatedNerve(InternalCategory c)
    : c_(std::move(c)), c3_(c_.composableTriples()) {}

TruncatedNerve nerve(const InternalCategory& c) { return TruncatedNerve(c); }

const FinObj& TruncatedNerve::level(std::size_t n) const {
  switch (n) {
    case 0: return c_.C0();
    case 1: return c_.C1();
    case 2: return c_.composablePairs().apex();
    case 3: return c3_.apex();
    default: fail(ErrorKind::ShapeMismatch, "nerve is truncated at level 3");
  }
}

std::vector<Index> TruncatedNerve::spine(std::size_t n, Index x) const {
  switch (n) {
    case 0: return {};
    case 1: return {x};
    case 2: {
      const ChosenLimit& p = c_.composablePairs();
      return {p.component(x, 1), p.component(x, 0)};
    }
    case 3: return {c3_.component(x, 2), c3_.component(x, 1), c3_.component(x, 0)};
    default: fail(ErrorKind::ShapeMismatch, "nerve is truncated at level 3");
  }
}

Index TruncatedNerve::vertex(std::size_t n, Index x, std::size_t j) const {
  if (n == 0) return x;
  const std::vector<Index> edges = spine(n, x);
  return j < n ? c_.source(edges[j]) : c_.target(edges[n - 1]);
}

std::optional<Index> TruncatedNerve::fromSpine(std::size_t n, std::span<const Index> edges) const {
  if (edges.size() != n || n == 0) fail(ErrorKind::ShapeMismatch, "spine length mismatch");
  switch (n) {
    case 1: return edges[0];
    case 2: return c_.composablePairs().find({edges[1], edges[0]});
    case 3: return c3_.find({edges[2], edges[1], edges[0]});
    default: fail(ErrorKind::ShapeMismatch, "nerve is truncated at level 3");
  }
}

Index TruncatedNerve::act(const Monotone& theta, Index x) const {
  if (theta.from > kTop || theta.to > kTop) {
    fail(ErrorKind::ShapeMismatch, "nerve is truncated at level 3");
  }
  if (theta.from == 0) return vertex(theta.to, x, theta(0));
  const std::vector<Index> edges = spine(theta.to, x);
  std::vector<Index> out(theta.from);
  for (std::size_t j = 1; j <= theta.from; ++j) {
    const Index lo = theta(j - 1), hi = theta(j);
    if (lo == hi) {
      out[j - 1] = c_.identity(vertex(theta.to, x, lo));
      continue;
    }
    Index acc = edges[lo];
    for (Index e = lo + 1; e < hi; ++e) acc = c_.compose(edges[e], acc);
    out[j - 1] = acc;
  }
  const auto r = fromSpine(theta.from, out);
  if (!r) fail(ErrorKind::ValidationError, "simplicial action left the nerve");
  return *r;
}

FinMap TruncatedNerve::actMap(const Monotone& theta) const {
  std::vector<Index> t(level(theta.to).size);
  for (Index x = 0; x < t.size(); ++x) t[x] = act(theta, x);
  return FinMap(level(theta.to), level(theta.from), std::move(t));
}

bool TruncatedNerve::satisfiesSimplicialIdentities() const {
  std::array<std::array<std::vector<std::pair<Monotone, FinMap>>, kTop + 1>, kTop + 1> maps;
  for (std::size_t a = 0; a <= kTop; ++a)
    for (std::size_t b = 0; b <= kTop; ++b)
      for (const Monotone& theta : monotoneMaps(a, b)) maps[a][b].emplace_back(theta, actMap(theta));
  for (std::size_t a = 0; a <= kTop; ++a) {
    if (!(actMap(identityMonotone(a)) == FinMap::identity(level(a)))) return false;
    for (std::size_t b = 0; b <= kTop; ++b)
      for (std::size_t c = 0; c <= kTop; ++c)
        for (const auto& [theta, thetaStar] : maps[a][b])
          for (const auto& [psi, psiStar] : maps[b][c])
            if (!(actMap(composeMonotone(psi, theta)) == compose(thetaStar, psiStar))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Objects and morphisms of either kind

namespace {

const FinObj& asSet(const Object& o, const char* role) {
  if (const auto* x = std::get_if<FinObj>(&o)) return *x;
  fail(ErrorKind::NotInHomSet, std::string(role) + " must be a base object");
}

const InternalCategory& asCat(const Object& o, const char* role) {
  if (const auto* c = std::get_if<InternalCategory>(&o)) return *c;
  fail(ErrorKind::NotInHomSet, std::string(role) + " must be an internal category");
}

const FinMap& asMap(const Morphism& m) {
  if (const auto* f = std::get_if<FinMap>(&m)) return *f;
  fail(ErrorKind::NotInHomSet, "expected a base morphism");
}

const InternalFunctor& asFunctor(const Morphism& m) {
  if (const auto* f = std::get_if<InternalFunctor>(&m)) return *f;
  fail(ErrorKind::NotInHomSet, "expected an internal functor");
}

void requireSet(const FinMap& f, const FinObj& dom, const FinObj& cod) {
  if (!(f.dom() == dom) || !(f.cod() == cod)) {
    fail(ErrorKind::NotInHomSet, "base morphism has the wrong endpoints");
  }
}

void requireCat(const InternalFunctor& f, const InternalCategory& dom, const InternalCategory& cod) {
  if (!(f.dom() == dom) || !(f.cod() == cod)) {
    fail(ErrorKind::NotInHomSet, "internal functor has the wrong endpoints");
  }
}

}  // namespace

Object domainOf(const Morphism& f) {
  if (const auto* m = std::get_if<FinMap>(&f)) return m->dom();
  return std::get<InternalFunctor>(f).dom();
}

Object codomainOf(const Morphism& f) {
  if (const auto* m = std::get_if<FinMap>(&f)) return m->cod();
  return std::get<InternalFunctor>(f).cod();
}

Morphism identityOf(const Object& x) {
  if (const auto* s = std::get_if<FinObj>(&x)) return FinMap::identity(*s);
  return idFunctor(std::get<InternalCategory>(x));
}

Morphism composeMorphisms(const Morphism& g, const Morphism& f) {
  if (g.index() != f.index()) fail(ErrorKind::DomainMismatch, "cannot compose across kinds");
  if (const auto* gm = std::get_if<FinMap>(&g)) return compose(*gm, std::get<FinMap>(f));
  return composeFunctors(std::get<InternalFunctor>(g), std::get<InternalFunctor>(f));
}

bool sameObject(const Object& a, const Object& b) { return a == b; }

// ---------------------------------------------------------------------------
// The three adjunctions

AdjunctionWitness adjunctionDiscObjects() {
  AdjunctionWitness w;
  w.leftName = "disc";
  w.rightName = "objects";
  w.left = [](const Object& x) -> Object { return disc(asSet(x, "x")); };
  w.right = [](const Object& a) -> Object { return asCat(a, "y").C0(); };
  w.leftMap = [](const Morphism& f) -> Morphism { return discMap(asMap(f)); };
  w.rightMap = [](const Morphism& f) -> Morphism { return asFunctor(f).f0(); };
  w.transposeForward = [](const Object& x, const Object& a, const Morphism& f) -> Morphism {
    const InternalFunctor& F = asFunctor(f);
    requireCat(F, disc(asSet(x, "x")), asCat(a, "y"));
    return F.f0();
  };
  w.transposeBackward = [](const Object& x, const Object& a, const Morphism& g) -> Morphism {
    const InternalCategory& A = asCat(a, "y");
    const FinMap& gm = asMap(g);
    requireSet(gm, asSet(x, "x"), A.C0());
    return InternalFunctor(disc(gm.dom()), A, gm, compose(A.i(), gm));
  };
  w.unit = [](const Object& x) -> Morphism { return FinMap::identity(asSet(x, "x")); };
  w.counit = [](const Object& a) -> Morphism {
    const InternalCategory& A = asCat(a, "y");
    return InternalFunctor(disc(A.C0()), A, FinMap::identity(A.C0()), A.i());
  };
  return w;
}

AdjunctionWitness adjunctionObjectsIndisc() {
  AdjunctionWitness w;
  w.leftName = "objects";
  w.rightName = "indisc";
  w.left = [](const Object& a) -> Object { return asCat(a, "x").C0(); };
  w.right = [](const Object& y) -> Object { return indisc(asSet(y, "y")); };
  w.leftMap = [](const Morphism& f) -> Morphism { return asFunctor(f).f0(); };
  w.rightMap = [](const Morphism& f) -> Morphism { return indiscMap(asMap(f)); };
  w.transposeForward = [](const Object& a, const Object& y, const Morphism& g) -> Morphism {
    const InternalCategory& A = asCat(a, "x");
    const FinObj& Y = asSet(y, "y");
    const FinMap& gm = asMap(g);
    requireSet(gm, A.C0(), Y);
    const FinMap arrows = product(Y, Y).mediate({compose(gm, A.d0()), compose(gm, A.d1())});
    return InternalFunctor(A, indisc(Y), gm, arrows);
  };
  w.transposeBackward = [](const Object& a, const Object& y, const Morphism& f) -> Morphism {
    const InternalFunctor& F = asFunctor(f);
    requireCat(F, asCat(a, "x"), indisc(asSet(y, "y")));
    return F.f0();
  };
  w.unit = [](const Object& a) -> Morphism {
    const InternalCategory& A = asCat(a, "x");
    return InternalFunctor(A, indisc(A.C0()), FinMap::identity(A.C0()), endpoints(A));
  };
  w.counit = [](const Object& y) -> Morphism { return FinMap::identity(asSet(y, "y")); };
  return w;
}

AdjunctionWitness adjunctionPi0Disc() {
  AdjunctionWitness w;
  w.leftName = "pi0";
  w.rightName = "disc";
  w.left = [](const Object& a) -> Object { return pi0(asCat(a, "x")); };
  w.right = [](const Object& b) -> Object { return disc(asSet(b, "y")); };
  w.leftMap = [](const Morphism& f) -> Morphism { return pi0Map(asFunctor(f)); };
  w.rightMap = [](const Morphism& f) -> Morphism { return discMap(asMap(f)); };
  w.transposeForward = [](const Object& a, const Object& b, const Morphism& h) -> Morphism {
    const InternalCategory& A = asCat(a, "x");
    const FinMap& hm = asMap(h);
    const Coequalizer q = componentsQuotient(A);
    requireSet(hm, q.object, asSet(b, "y"));
    const FinMap onObjects = compose(hm, q.quotient);
    return InternalFunctor(A, disc(hm.cod()), onObjects, compose(onObjects, A.d0()));
  };
  w.transposeBackward = [](const Object& a, const Object& b, const Morphism& f) -> Morphism {
    const InternalCategory& A = asCat(a, "x");
    const InternalFunctor& F = asFunctor(f);
    requireCat(F, A, disc(asSet(b, "y")));
    return componentsQuotient(A).descend(F.f0());
  };
  w.unit = [](const Object& a) -> Morphism {
    const InternalCategory& A = asCat(a, "x");
    const Coequalizer q = componentsQuotient(A);
    return InternalFunctor(A, disc(q.object), q.quotient, compose(q.quotient, A.d0()));
  };
  w.counit = [](const Object& b) -> Morphism {
    const FinObj& B = asSet(b, "y");
    return componentsQuotient(disc(B)).descend(FinMap::identity(B));
  };
  return w;
}

// ---------------------------------------------------------------------------
// Generic checks

bool checkRoundTrip(const AdjunctionWitness& adj, const Object& x, const Object& y,
                    const Morphism& f) {
  return adj.transposeBackward(x, y, adj.transposeForward(x, y, f)) == f;
}

bool checkRoundTripRight(const AdjunctionWitness& adj, const Object& x, const Object& y,
                         const Morphism& g) {
  return adj.transposeForward(x, y, adj.transposeBackward(x, y, g)) == g;
}

bool checkNaturality(const AdjunctionWitness& adj, const Morphism& a, const Morphism& f,
                     const Morphism& b) {
  const Object x0 = domainOf(a), x = codomainOf(a);
  const Object y = codomainOf(f), y1 = codomainOf(b);
  const Morphism moved = composeMorphisms(b, composeMorphisms(f, adj.leftMap(a)));
  const Morphism lhs = adj.transposeForward(x0, y1, moved);
  const Morphism rhs =
      composeMorphisms(adj.rightMap(b), composeMorphisms(adj.transposeForward(x, y, f), a));
  return lhs == rhs;
}

bool checkTriangles(const AdjunctionWitness& adj, const Object& x, const Object& y) {
  const Object lx = adj.left(x), ry = adj.right(y);
  const bool leftTriangle =
      composeMorphisms(adj.counit(lx), adj.leftMap(adj.unit(x))) == identityOf(lx);
  const bool rightTriangle =
      composeMorphisms(adj.rightMap(adj.counit(y)), adj.unit(ry)) == identityOf(ry);
  return leftTriangle && rightTriangle;
}

bool unitSquareIsPullback(const InternalFunctor& f) {
  // Level 0 of the square is f0 against itself along identities, always a pullback.
  return isPullback(endpoints(f.dom()), f.f1(), productMap(f.f0(), f.f0()), endpoints(f.cod()));
}

bool counitSquareIsPullback(const InternalFunctor& f) {
  return isPullback(f.dom().i(), f.f0(), f.f1(), f.cod().i());
}

// ---------------------------------------------------------------------------

DiscreteCellBijection::DiscreteCellBijection(FinObj x, InternalCategory a)
    : x_(std::move(x)), a_(std::move(a)) {}

InternalNatTrans DiscreteCellBijection::toCell(const FinMap& phi) const {
  if (!(phi.dom() == x_) || !(phi.cod() == a_.C1())) {
    fail(ErrorKind::NotInHomSet, "expected a map X -> A1");
  }
  const InternalCategory dx = disc(x_);
  const FinMap s = compose(a_.d1(), phi), t = compose(a_.d0(), phi);
  return InternalNatTrans(InternalFunctor(dx, a_, s, compose(a_.i(), s)),
                          InternalFunctor(dx, a_, t, compose(a_.i(), t)), phi);
}

FinMap DiscreteCellBijection::toMap(const InternalNatTrans& t) const {
  if (!(t.src().dom() == disc(x_)) || !(t.src().cod() == a_)) {
    fail(ErrorKind::NotInHomSet, "2-cell is not between functors disc(X) -> A");
  }
  return t.alpha();
}

}  // namespace icat
