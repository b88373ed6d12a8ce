#include "icat/factorisation.hpp"

#include <string>

namespace icat {

namespace {

// For s surjective: u(b) = p(a) for any a over b. The square makes the choice
// irrelevant, but it is checked anyway so that a bad square never yields a map.
FinMap liftAlongSurjection(const FinMap& s, const FinMap& f, const FinMap& p, const FinMap& q) {
  if (!(compose(f, p) == compose(q, s))) {
    fail(ErrorKind::NonCommuting, "base square does not commute");
  }
  const FinMap section = chooseSection(s);
  const FinMap u = compose(p, section);
  if (!(compose(u, s) == p)) {
    fail(ErrorKind::NonCommuting, "p is not constant on the fibres of s");
  }
  return u;
}

}  // namespace

BaseOFS epiMono() {
  BaseOFS ofs;
  ofs.name = "epi-mono";
  ofs.inLeft = isEpi;
  ofs.inRight = isMono;
  ofs.factor = [](const FinMap& f) {
    ImageFactorisation im = factorEpiMono(f);
    return std::pair{std::move(im.left), std::move(im.right)};
  };
  ofs.lift = liftAlongSurjection;
  return ofs;
}

BaseOFS isoAll() {
  BaseOFS ofs;
  ofs.name = "iso-all";
  ofs.inLeft = isIso;
  ofs.inRight = [](const FinMap&) { return true; };
  ofs.factor = [](const FinMap& f) { return std::pair{FinMap::identity(f.dom()), f}; };
  ofs.lift = liftAlongSurjection;
  return ofs;
}

LiftedFactorisation factorInternal(const InternalFunctor& f, const BaseOFS& ofs) {
  const InternalCategory& x = f.dom();
  const InternalCategory& y = f.cod();
  const auto [l0, r0] = ofs.factor(f.f0());
  const FinObj c0 = l0.cod();

  // C1 = Y1 x_{Y0 x Y0} (C0 x C0): an arrow of Y together with lifts of its ends.
  const ChosenLimit ends = product(c0, c0);
  const ChosenLimit c1 = pullback(endpoints(y), productMap(r0, r0));
  auto arrow = [&](Index b, Index target, Index source) {
    return c1.indexOf({b, ends.indexOf({target, source})});
  };
  auto yArrow = [&](Index c) { return c1.component(c, 0); };
  auto targetOf = [&](Index c) { return ends.component(c1.component(c, 1), 0); };
  auto sourceOf = [&](Index c) { return ends.component(c1.component(c, 1), 1); };

  std::vector<Index> d0(c1.apex().size), d1(c1.apex().size), ident(c0.size);
  for (Index c = 0; c < c1.apex().size; ++c) {
    d0[c] = targetOf(c);
    d1[c] = sourceOf(c);
  }
  for (Index o = 0; o < c0.size; ++o) ident[o] = arrow(y.identity(r0(o)), o, o);

  InternalCategory middle = makeCategory(
      FinMap(c1.apex(), c0, std::move(d0)), FinMap(c1.apex(), c0, std::move(d1)),
      FinMap(c0, c1.apex(), std::move(ident)), [&](Index u, Index v) {
        return arrow(y.compose(yArrow(u), yArrow(v)), targetOf(u), sourceOf(v));
      });

  std::vector<Index> l1(x.C1().size);
  for (Index a = 0; a < x.C1().size; ++a) l1[a] = arrow(f.f1()(a), l0(x.target(a)), l0(x.source(a)));

  InternalFunctor left(x, middle, l0, FinMap(x.C1(), c1.apex(), std::move(l1)));
  InternalFunctor right(middle, y, r0, c1.projection(0));
  return LiftedFactorisation{std::move(middle), std::move(left), std::move(right)};
}

namespace {

void requireClasses(const InternalFunctor& s, const InternalFunctor& f, const BaseOFS& ofs) {
  if (!ofs.inLeft(s.f0())) {
    fail(ErrorKind::NotInClass, "left map is not " + ofs.name + "-left on objects");
  }
  if (!ofs.inRight(f.f0()) || !isFullyFaithful(f)) {
    fail(ErrorKind::NotInClass,
         "right map is not " + ofs.name + "-right on objects and fully faithful");
  }
}

}  // namespace

InternalFunctor liftSquare(const InternalFunctor& s, const InternalFunctor& f,
                           const InternalFunctor& p, const InternalFunctor& q, const BaseOFS& ofs) {
  requireClasses(s, f, ofs);
  if (!(composeFunctors(f, p) == composeFunctors(q, s))) {
    fail(ErrorKind::NonCommuting, "lifting square does not commute");
  }
  const InternalCategory& b = s.cod();
  const FinMap u0 = ofs.lift(s.f0(), f.f0(), p.f0(), q.f0());
  const FullyFaithfulLifter lifter(f);
  std::vector<Index> u1(b.C1().size);
  for (Index e = 0; e < b.C1().size; ++e) u1[e] = lifter.lift(q.f1()(e), u0(b.target(e)), u0(b.source(e)));
  return InternalFunctor(b, f.dom(), u0, FinMap(b.C1(), f.dom().C1(), std::move(u1)));
}

InternalNatTrans liftTwoCell(const InternalFunctor& s, const InternalFunctor& f,
                             const InternalNatTrans& alphaBar, const InternalNatTrans& betaBar,
                             const BaseOFS& ofs) {
  requireClasses(s, f, ofs);
  if (!(whiskerLeft(f, alphaBar) == whiskerRight(betaBar, s))) {
    fail(ErrorKind::NonCommuting, "f . alphaBar differs from betaBar . s");
  }
  const InternalFunctor u0 = liftSquare(s, f, alphaBar.src(), betaBar.src(), ofs);
  const InternalFunctor u1 = liftSquare(s, f, alphaBar.tgt(), betaBar.tgt(), ofs);
  const InternalCategory& b = s.cod();
  const FullyFaithfulLifter lifter(f);
  std::vector<Index> gamma(b.C0().size);
  for (Index o = 0; o < b.C0().size; ++o) gamma[o] = lifter.lift(betaBar.alpha()(o), u1.f0()(o), u0.f0()(o));
  return InternalNatTrans(u0, u1, FinMap(b.C0(), f.dom().C1(), std::move(gamma)));
}

bool isAcute(const InternalFunctor& f) { return isEpiOnObjects(f); }

}  // namespace icat
