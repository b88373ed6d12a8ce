#include "doctest.h"
#include "icat/limits2d.hpp"
#include "support.hpp"

using namespace icat;
using namespace testing_support;

namespace {

// Count commuting squares of the walking arrow by brute force over quadruples.
std::size_t squaresByBruteForce(const InternalCategory& a) {
  std::size_t count = 0;
  const std::size_t n = a.C1().size;
  const ChosenLimit& pairs = a.composablePairs();
  for (Index f = 0; f < n; ++f)
    for (Index g = 0; g < n; ++g)
      for (Index top = 0; top < n; ++top)
        for (Index bottom = 0; bottom < n; ++bottom) {
          const auto l = pairs.find({g, top});
          const auto r = pairs.find({bottom, f});
          if (l && r && a.m()(*l) == a.m()(*r)) ++count;
        }
  return count;
}

}  // namespace

TEST_CASE("terminal, products and pullbacks") {
  CHECK(terminalCat() == disc(FinObj(1)));
  const CatProduct p = productCat(freeArrow(), freeArrow());
  CHECK(p.object.C0().size == 4);
  CHECK(p.object.C1().size == 9);
  CHECK(validateCategory(p.object).ok());
  CHECK(validateFunctor(p.proj0).ok());
  const InternalFunctor diag = p.pair(idFunctor(freeArrow()), idFunctor(freeArrow()));
  CHECK(composeFunctors(p.proj0, diag) == idFunctor(freeArrow()));
  CHECK(composeFunctors(p.proj1, diag) == idFunctor(freeArrow()));

  const InternalFunctor id = idFunctor(chain3());
  const CatPullback pb = pullbackCat(id, id);
  CHECK(findIsomorphism(pb.object, chain3()).has_value());
  CHECK(isPullbackCone(pb.proj0, pb.proj1, id, id));
  CHECK(pb.mediate(id, id).f0().cod() == pb.object.C0());

  // Pullback of the two endpoint inclusions 1 -> 2_E is empty.
  const InternalFunctor e0(terminalCat(), freeArrow(), map(1, 2, {0}), map(1, 3, {0}));
  const InternalFunctor e1(terminalCat(), freeArrow(), map(1, 2, {1}), map(1, 3, {2}));
  CHECK(pullbackCat(e0, e1).object.C0().size == 0);
  CHECK_THROWS_AS(pullbackCat(e0, idFunctor(chain3())), Error);
}

TEST_CASE("limits are detected levelwise") {
  const InternalCategory w = walkingArrow();
  const InternalFunctor bang(w, terminalCat(), FinMap::toTerminal(w.C0()), FinMap::toTerminal(w.C1()));
  const CatPullback pb = pullbackCat(bang, bang);
  const CatProduct prod = productCat(w, w);
  // The product cone is a pullback over the terminal category.
  CHECK(isPullbackCone(prod.proj0, prod.proj1, bang, bang));
  // A non-limiting cone: the diagonal with both legs the identity.
  const InternalFunctor id = idFunctor(w);
  CHECK_FALSE(isPullbackCone(id, id, bang, bang));
  CHECK(findIsomorphism(pb.object, prod.object).has_value());
}

TEST_CASE("coproducts") {
  const CatCoproduct s = coproductCat(freeArrow(), disc(FinObj(0)));
  CHECK(s.object == freeArrow());
  const CatCoproduct ones = coproductCat(terminalCat(), terminalCat());
  CHECK(ones.object == disc(FinObj(2)));
  const CatCoproduct mixed = coproductCat(freeArrow(), indisc(FinObj(2)));
  CHECK(validateCategory(mixed.object).ok());
  CHECK(validateFunctor(mixed.inj1).ok());
  const InternalFunctor fold = mixed.copair(
      InternalFunctor(freeArrow(), terminalCat(), map(2, 1, {0, 0}), map(3, 1, {0, 0, 0})),
      InternalFunctor(indisc(FinObj(2)), terminalCat(), map(2, 1, {0, 0}), map(4, 1, {0, 0, 0, 0})));
  CHECK(validateFunctor(fold).ok());
  // Extensivity: pulling the injections back along the fold-free identity splits the sum.
  const InternalFunctor id = idFunctor(mixed.object);
  const CatPullback left = pullbackCat(id, mixed.inj0);
  const CatPullback right = pullbackCat(id, mixed.inj1);
  CHECK(left.object.C1().size + right.object.C1().size == mixed.object.C1().size);
  CHECK(left.object.C0().size + right.object.C0().size == mixed.object.C0().size);
}

TEST_CASE("the free-living arrow") {
  const InternalCategory two = freeArrow();
  CHECK(two.C0().size == 2);
  CHECK(two.C1().size == 3);
  CHECK(validateCategory(two).ok());
  CHECK(two.source(1) != two.target(1));
  CHECK(findIsomorphism(two, walkingArrow()).has_value());
  const TruncatedNerve n = nerve(two);
  CHECK(n.level(2).size == 4);
  CHECK(n.level(3).size == 5);
}

TEST_CASE("power by two") {
  SUBCASE("discrete categories are fixed") {
    const PowerByTwo p = powerByTwo(disc(FinObj(3)));
    CHECK(findIsomorphism(p.carrier, disc(FinObj(3))).has_value());
  }
  SUBCASE("the walking arrow") {
    const InternalCategory w = walkingArrow();
    const PowerByTwo p = powerByTwo(w);
    CHECK(p.carrier.C0().size == 3);
    CHECK(p.carrier.C1().size == 6);
    CHECK(squaresByBruteForce(w) == 6);
    CHECK(validateCategory(p.carrier).ok());
    CHECK(validateFunctor(p.sourceProj).ok());
    CHECK(validateFunctor(p.targetProj).ok());
    CHECK(validateNatTrans(p.universalCell).ok());
    // Functor category [2, A] computed by enumeration.
    CHECK(findIsomorphism(p.carrier, homCategory(freeArrow(), w).asCategory()).has_value());
  }
  SUBCASE("functors into A^2 are 2-cells") {
    for (const InternalCategory& a : {walkingArrow(), cyclic(2), indisc(FinObj(2))}) {
      const PowerByTwo p = powerByTwo(a);
      for (const InternalCategory& x : {walkingArrow(), discrete(2)}) {
        const HomCategory cells = homCategory(x, a);
        const HomCategory functors = homCategory(x, p.carrier);
        CHECK(cells.arrows().size() == functors.objects().size());
        for (const InternalNatTrans& alpha : cells.arrows()) {
          const InternalFunctor f = p.fromTwoCell(alpha);
          CHECK(validateFunctor(f).ok());
          CHECK(p.toTwoCell(f) == alpha);
        }
      }
    }
  }
}

TEST_CASE("copower by two") {
  const CopowerByTwo one = copowerByTwo(terminalCat());
  CHECK(findIsomorphism(one.carrier, freeArrow()).has_value());
  for (const InternalCategory& a : {walkingArrow(), cyclic(2), discrete(2)}) {
    const CopowerByTwo c = copowerByTwo(a);
    CHECK(c.carrier.C0().size == 2 * a.C0().size);
    CHECK(validateNatTrans(c.universalCell).ok());
    for (const InternalCategory& b : {walkingArrow(), indisc(FinObj(2))}) {
      const HomCategory cells = homCategory(a, b);
      const HomCategory functors = homCategory(c.carrier, b);
      CHECK(cells.arrows().size() == functors.objects().size());
      for (const InternalNatTrans& alpha : cells.arrows()) {
        const InternalFunctor f = c.fromTwoCell(alpha);
        CHECK(validateFunctor(f).ok());
        CHECK(c.toTwoCell(f) == alpha);
      }
      for (const InternalFunctor& f : functors.objects()) CHECK(c.fromTwoCell(c.toTwoCell(f)) == f);
    }
  }
}

TEST_CASE("hom-categories by enumeration") {
  const HomCategory h = homCategory(freeArrow(), freeArrow());
  CHECK(h.objects().size() == 3);
  CHECK(validateCategory(h.asCategory()).ok());
  const HomCategory pts = homCategory(terminalCat(), chain3());
  CHECK(pts.objects().size() == 3);
  CHECK(pts.arrows().size() == 6);
  CHECK(homCategory(chain3(), terminalCat()).objects().size() == 1);
  CHECK_THROWS_AS(homCategory(chain3(), chain3(), 5), Error);
}

TEST_CASE("internal hom via the end formula") {
  SUBCASE("unit law") {
    const InternalHom h = internalHom(terminalCat(), chain3());
    CHECK(findIsomorphism(h.carrier(), chain3()).has_value());
  }
  SUBCASE("[2, 2]") {
    const InternalHom h = internalHom(freeArrow(), freeArrow());
    CHECK(h.levelSize(0) == 3);
    CHECK(h.levelSize(1) == 6);
    CHECK(validateCategory(h.carrier()).ok());
    CHECK(validateFunctor(h.evaluation()).ok());
  }
  SUBCASE("agreement with enumeration") {
    const std::vector<InternalCategory> cats = {walkingArrow(), cyclic(2), indisc(FinObj(2)),
                                                discrete(2), chain3(), disc(FinObj(0))};
    for (const InternalCategory& x : cats) {
      for (const InternalCategory& y : cats) {
        const InternalHom h = internalHom(x, y);
        const HomCategory e = homCategory(x, y);
        CHECK(h.levelSize(0) == e.objects().size());
        CHECK(h.levelSize(1) == e.arrows().size());
        CHECK(validateCategory(h.carrier()).ok());
        for (Index t = 0; t < h.levelSize(0); ++t) {
          CHECK(e.indexOfFunctor(h.decodeFunctor(t)).has_value());
          CHECK(h.encodeFunctor(h.decodeFunctor(t)) == t);
        }
        for (Index s = 0; s < h.levelSize(1); ++s) {
          CHECK(e.indexOfTransformation(h.decodeTransformation(s)).has_value());
        }
      }
    }
  }
  SUBCASE("currying is inverse to evaluation") {
    const InternalCategory x = walkingArrow(), y = cyclic(2), z = chain3();
    const InternalHom h = internalHom(x, y);
    const CatProduct zx = productCat(z, x);
    const HomCategory functors = homCategory(zx.object, y);
    for (const InternalFunctor& f : functors.objects()) {
      const InternalFunctor g = h.curry(z, f);
      CHECK(validateFunctor(g).ok());
      // ev . (g x id) == f
      const CatProduct hx = productCat(h.carrier(), x);
      const InternalFunctor gx = hx.pair(composeFunctors(g, zx.proj0), zx.proj1);
      CHECK(composeFunctors(h.evaluation(), gx) == f);
    }
  }
  SUBCASE("disc preserves internal homs") {
    for (std::size_t a = 0; a <= 2; ++a) {
      for (std::size_t b = 0; b <= 3; ++b) {
        const InternalHom h = internalHom(disc(FinObj(a)), disc(FinObj(b)));
        const Exponential e{FinObj(a), FinObj(b)};
        CHECK(findIsomorphism(h.carrier(), disc(e.object())).has_value());
      }
    }
  }
  SUBCASE("imposing the equations at n = 3 changes nothing") {
    const std::vector<InternalCategory> cats = {walkingArrow(), cyclic(3), indisc(FinObj(2)), chain3(),
                                                discrete(2)};
    for (const InternalCategory& x : cats) {
      for (const InternalCategory& y : cats) {
        const InternalHom fast = internalHom(x, y);
        const InternalHom full = internalHom(x, y, kDefaultSizeBound, EndCheck::Full);
        for (std::size_t k = 0; k <= 2; ++k) CHECK(fast.levelSize(k) == full.levelSize(k));
        CHECK(fast.carrier() == full.carrier());
        CHECK(fast.evaluation() == full.evaluation());
      }
    }
  }
  SUBCASE("size bound") {
    CHECK_THROWS_AS(internalHom(chain3(), chain3(), 10), Error);
    // [indisc(3), indisc(3)] has 27 objects, 729 arrows and 19683 composable pairs.
    CHECK_THROWS_AS(internalHom(indisc(FinObj(3)), indisc(FinObj(3)), 19682), Error);
    CHECK(internalHom(indisc(FinObj(3)), indisc(FinObj(3)), 1000000).levelSize(2) == 19683);
  }
}
