#include <random>

#include "doctest.h"
#include "icat/internal.hpp"
#include "support.hpp"

using namespace icat;
using namespace testing_support;

namespace {

// Arrow index of s <= t in a poset category built with lex-ordered pairs.
Index posetArrow(const InternalCategory& c, Index s, Index t) {
  for (Index a = 0; a < c.C1().size; ++a)
    if (c.source(a) == s && c.target(a) == t) return a;
  FAIL("no arrow");
  return 0;
}

InternalFunctor monotone(const InternalCategory& a, const InternalCategory& b,
                         std::vector<Index> objects) {
  std::vector<Index> arrows(a.C1().size);
  for (Index e = 0; e < arrows.size(); ++e)
    arrows[e] = posetArrow(b, objects[a.source(e)], objects[a.target(e)]);
  return InternalFunctor(a, b, FinMap(a.C0(), b.C0(), objects), FinMap(a.C1(), b.C1(), arrows));
}

// The unique 2-cell f => g between functors into a poset (f <= g pointwise).
InternalNatTrans posetCell(const InternalFunctor& f, const InternalFunctor& g) {
  std::vector<Index> alpha(f.dom().C0().size);
  for (Index x = 0; x < alpha.size(); ++x) alpha[x] = posetArrow(f.cod(), f.f0()(x), g.f0()(x));
  return InternalNatTrans(f, g, FinMap(f.dom().C0(), f.cod().C1(), alpha));
}

}  // namespace

TEST_CASE("validators accept ordinary categories") {
  CHECK(validateCategory(discrete(3)).ok());
  CHECK(validateCategory(walkingArrow()).ok());
  CHECK(validateCategory(chain3()).ok());
  CHECK(validateCategory(cyclic(3)).ok());
  CHECK(walkingArrow().composablePairs().apex().size == 4);
  CHECK(walkingArrow().composableTriples().apex().size == 5);
}

TEST_CASE("validators name broken axioms") {
  const InternalCategory w = walkingArrow();
  // m on lex pairs (0,0),(1,0),(2,1),(2,2); send a . id0 to id0 instead of a.
  const InternalCategory broken(w.d0(), w.d1(), w.i(), map(4, 3, {0, 0, 1, 2}));
  const ValidationReport r = validateCategory(broken);
  CHECK_FALSE(r.ok());
  CHECK(r.mentions("right-unit"));
  CHECK(r.mentions("composite-target"));

  const InternalCategory badId(w.d0(), w.d1(), map(2, 3, {0, 1}), w.m());
  CHECK(validateCategory(badId).mentions("identity-source"));

  const InternalCategory c3 = cyclic(3);
  std::vector<Index> m = c3.m().table();
  std::swap(m[1], m[2]);  // 0+1 and 0+2 exchanged
  const ValidationReport nonAssoc =
      validateCategory(InternalCategory(c3.d0(), c3.d1(), c3.i(), map(9, 3, m)));
  CHECK(nonAssoc.mentions("left-unit"));
  CHECK(nonAssoc.mentions("associativity"));
  CHECK(nonAssoc.violations().size() > 2);
}

TEST_CASE("constructor checks shapes") {
  const InternalCategory w = walkingArrow();
  CHECK_THROWS_AS(InternalCategory(w.d0(), w.d1(), w.i(), map(3, 3, {0, 1, 2})), Error);
  CHECK_THROWS_AS(InternalCategory(w.d0(), map(3, 3, {0, 0, 1}), w.i(), w.m()), Error);
}

TEST_CASE("functors") {
  const InternalCategory w = walkingArrow(), c = chain3();
  CHECK(validateFunctor(idFunctor(w)).ok());

  const InternalFunctor f = monotone(w, c, {0, 2});
  const InternalFunctor g = monotone(c, c, {1, 1, 2});
  CHECK(validateFunctor(f).ok());
  CHECK(composeFunctors(idFunctor(c), f) == f);
  CHECK(composeFunctors(f, idFunctor(w)) == f);
  const InternalFunctor gf = composeFunctors(g, f);
  CHECK(gf.f0() == map(2, 3, {1, 2}));
  CHECK(gf.f1() == map(3, 6, {3, 4, 5}));
  CHECK_THROWS_AS(composeFunctors(f, g), Error);

  // A table that is a graph morphism but reverses composition.
  const InternalCategory z3 = cyclic(3);
  const InternalFunctor bad(z3, z3, map(1, 1, {0}), map(3, 3, {0, 1, 1}));
  CHECK(validateFunctor(bad).mentions("preserves-composition"));
  const InternalFunctor badEnds(w, c, map(2, 3, {0, 2}), map(3, 6, {0, 1, 5}));
  CHECK(validateFunctor(badEnds).mentions("preserves-target"));
}

TEST_CASE("2-cells and their composition") {
  const InternalCategory w = walkingArrow(), c = chain3();
  const InternalFunctor f = monotone(w, c, {0, 1});
  const InternalFunctor g = monotone(w, c, {1, 1});
  const InternalFunctor h = monotone(w, c, {1, 2});
  const InternalNatTrans alpha = posetCell(f, g), beta = posetCell(g, h);
  CHECK(validateNatTrans(alpha).ok());
  CHECK(validateNatTrans(identityTrans(f)).ok());

  const InternalNatTrans ba = vcomp(beta, alpha);
  CHECK(ba == posetCell(f, h));
  CHECK(ba.alpha() == map(2, 6, {1, 4}));
  CHECK(vcomp(identityTrans(g), alpha) == alpha);
  CHECK(vcomp(alpha, identityTrans(f)) == alpha);
  CHECK_THROWS_AS(vcomp(alpha, beta), Error);

  // An assigner with the wrong endpoints.
  const InternalNatTrans wrong(f, g, map(2, 6, {0, 3}));
  CHECK(validateNatTrans(wrong).mentions("component-target"));

  // Naturality failure: components f(x) -> g(x) exist but the square does not commute.
  const InternalCategory z3 = cyclic(3);
  const InternalFunctor shift(c, z3, map(3, 1, {0, 0, 0}), map(6, 3, {0, 0, 0, 0, 0, 0}));
  const InternalNatTrans unnatural(shift, shift, map(3, 3, {0, 1, 2}));
  CHECK(validateNatTrans(unnatural).mentions("naturality"));
}

TEST_CASE("whiskering and interchange") {
  const InternalCategory w = walkingArrow(), c = chain3();
  const InternalFunctor f = monotone(w, c, {0, 1}), g = monotone(w, c, {1, 2});
  const InternalFunctor f2 = monotone(w, c, {2, 2});
  const InternalFunctor h = monotone(c, c, {0, 0, 1}), k = monotone(c, c, {1, 2, 2});
  const InternalFunctor k2 = monotone(c, c, {2, 2, 2});
  const InternalNatTrans alpha = posetCell(f, g), alpha2 = posetCell(g, f2);
  const InternalNatTrans beta = posetCell(h, k), beta2 = posetCell(k, k2);

  CHECK(whiskerLeft(idFunctor(c), alpha) == alpha);
  CHECK(whiskerRight(alpha, idFunctor(w)) == alpha);
  CHECK(hcomp(identityTrans(idFunctor(c)), identityTrans(idFunctor(c))) ==
        identityTrans(idFunctor(c)));

  const InternalNatTrans oneOrder = hcomp(beta, alpha);
  const InternalNatTrans otherOrder = vcomp(whiskerLeft(k, alpha), whiskerRight(beta, f));
  CHECK(oneOrder == otherOrder);
  CHECK(validateNatTrans(oneOrder).ok());

  CHECK(hcomp(vcomp(beta2, beta), vcomp(alpha2, alpha)) ==
        vcomp(hcomp(beta2, alpha2), hcomp(beta, alpha)));
  CHECK_THROWS_AS(whiskerLeft(f, alpha), Error);
  CHECK_THROWS_AS(whiskerRight(alpha, f), Error);
}

TEST_CASE("functor predicates") {
  const InternalCategory w = walkingArrow(), c = chain3(), one = discrete(1);
  const InternalFunctor id = idFunctor(w);
  CHECK(isFullyFaithful(id));
  CHECK(isFullMono(id));
  CHECK(isMonoFunctor(id));
  CHECK(isEpiOnObjects(id));
  CHECK(isIsoOnObjects(id));
  CHECK(isIsomorphism(id));

  const InternalFunctor endpoint(one, w, map(1, 2, {1}), map(1, 3, {2}));
  CHECK(isFullyFaithful(endpoint));
  CHECK(isFullMono(endpoint));
  CHECK_FALSE(isEpiOnObjects(endpoint));

  const InternalFunctor outer = monotone(w, c, {0, 2});
  CHECK(isFullMono(outer));
  const InternalFunctor collapse = monotone(c, w, {0, 1, 1});
  CHECK(isFaithful(collapse));
  CHECK_FALSE(isFullyFaithful(collapse));
  CHECK(isEpiOnObjects(collapse));

  const InternalFunctor discInc(discrete(2), w, map(2, 2, {0, 1}), map(2, 3, {0, 2}));
  CHECK(isFaithful(discInc));
  CHECK(isMonoFunctor(discInc));
  CHECK_FALSE(isFullyFaithful(discInc));
}

TEST_CASE("fully faithful lifting and invertibility") {
  const InternalCategory w = walkingArrow(), c = chain3();
  const InternalFunctor outer = monotone(w, c, {0, 2});
  const FullyFaithfulLifter lifter(outer);
  CHECK(lifter.lift(2, 1, 0) == 1);
  CHECK(lifter.lift(5, 1, 1) == 2);
  CHECK_THROWS_AS(lifter.lift(1, 1, 0), Error);

  const InternalFunctor idz = idFunctor(cyclic(3));
  CHECK(isInvertible(InternalNatTrans(idz, idz, map(1, 3, {1}))));
  const InternalFunctor f = monotone(w, c, {0, 1}), g = monotone(w, c, {1, 1});
  CHECK_FALSE(isInvertible(posetCell(f, g)));
  CHECK(isInvertible(identityTrans(f)));
}

TEST_CASE("isomorphism search") {
  const InternalCategory w = walkingArrow();
  // The same category with the objects and arrows listed in another order.
  const InternalCategory relabelled = fromTables(
      2, {{1, 1}, {0, 0}, {1, 0}}, {1, 0}, [](Index u, Index v) {
        if (u == 1) return v;
        if (v == 1 || v == 0) return u;
        return Index{2};
      });
  REQUIRE(validateCategory(relabelled).ok());
  const auto iso = findIsomorphism(w, relabelled);
  REQUIRE(iso.has_value());
  CHECK(isIsomorphism(*iso));
  CHECK_FALSE(findIsomorphism(w, discrete(3)).has_value());
  CHECK(findIsomorphism(cyclic(3), cyclic(3)).has_value());
  const InternalCategory klein = fromTables(1, std::vector<std::pair<Index, Index>>(4, {0, 0}),
                                            {0}, [](Index u, Index v) { return u ^ v; });
  CHECK_FALSE(findIsomorphism(cyclic(4), klein).has_value());
}
