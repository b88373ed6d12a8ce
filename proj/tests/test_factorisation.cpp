#include <algorithm>
#include <set>

#include "doctest.h"
#include "icat/factorisation.hpp"
#include "icat/limits2d.hpp"
#include "icat/transfer.hpp"
#include "support.hpp"

using namespace icat;
using namespace testing_support;

namespace {

std::vector<InternalCategory> smallCategories() {
  return {walkingArrow(), chain3(), discrete(1), discrete(2), cyclic(2)};
}

bool surjective(const std::vector<Index>& t, std::size_t cod) {
  std::set<Index> hit(t.begin(), t.end());
  return hit.size() == cod;
}

bool injective(const std::vector<Index>& t) {
  return std::set<Index>(t.begin(), t.end()).size() == t.size();
}

// Fully faithful, decided by counting hom-sets directly.
bool fullyFaithfulByCounting(const InternalFunctor& f) {
  const InternalCategory& a = f.dom();
  const InternalCategory& b = f.cod();
  for (Index x = 0; x < a.C0().size; ++x) {
    for (Index y = 0; y < a.C0().size; ++y) {
      std::set<Index> image;
      std::size_t count = 0;
      for (Index e = 0; e < a.C1().size; ++e) {
        if (a.source(e) != x || a.target(e) != y) continue;
        ++count;
        image.insert(f.f1()(e));
      }
      std::size_t target = 0;
      for (Index e = 0; e < b.C1().size; ++e)
        if (b.source(e) == f.f0()(x) && b.target(e) == f.f0()(y)) ++target;
      if (image.size() != count || count != target) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("factorInternal splits every small functor for both systems") {
  std::size_t seen = 0;
  for (const BaseOFS& ofs : {epiMono(), isoAll()}) {
    for (const InternalCategory& a : smallCategories()) {
      for (const InternalCategory& b : smallCategories()) {
        for (const InternalFunctor& f : functorsByOracle(a, b)) {
          const LiftedFactorisation lf = factorInternal(f, ofs);
          CAPTURE(ofs.name);
          CHECK(validateCategory(lf.middle).ok());
          CHECK(validateFunctor(lf.left).ok());
          CHECK(validateFunctor(lf.right).ok());
          CHECK(composeFunctors(lf.right, lf.left) == f);
          CHECK(ofs.inLeft(lf.left.f0()));
          CHECK(ofs.inRight(lf.right.f0()));
          CHECK(fullyFaithfulByCounting(lf.right));
          ++seen;
        }
      }
    }
  }
  CHECK(seen > 100);
}

TEST_CASE("epi-mono factorisation of a collapsing functor") {
  // chain3 -> walkingArrow sending 0, 1 to 0 and 2 to 1.
  const InternalCategory c = chain3();
  const InternalCategory w = walkingArrow();
  const auto all = functorsByOracle(c, w);
  const auto it = std::find_if(all.begin(), all.end(), [](const InternalFunctor& f) {
    return f.f0().table() == std::vector<Index>{0, 0, 1};
  });
  REQUIRE(it != all.end());
  const LiftedFactorisation lf = factorInternal(*it, epiMono());
  CHECK(lf.middle.C0().size == 2);
  CHECK(lf.middle.C1().size == 3);
  CHECK(isIsomorphism(lf.right));
}

TEST_CASE("liftSquare returns the unique filler among all candidate functors") {
  const BaseOFS ofs = epiMono();
  std::size_t squares = 0;
  const std::vector<InternalCategory> cats = smallCategories();
  for (const InternalCategory& a : cats) {
    for (const InternalCategory& b : cats) {
      for (const InternalFunctor& s : functorsByOracle(a, b)) {
        if (!surjective(s.f0().table(), b.C0().size)) continue;
        for (const InternalCategory& x : cats) {
          for (const InternalCategory& y : cats) {
            for (const InternalFunctor& f : functorsByOracle(x, y)) {
              if (!injective(f.f0().table()) || !fullyFaithfulByCounting(f)) continue;
              const auto ps = functorsByOracle(a, x);
              const auto qs = functorsByOracle(b, y);
              const auto us = functorsByOracle(b, x);
              for (const InternalFunctor& p : ps) {
                for (const InternalFunctor& q : qs) {
                  if (!(composeFunctors(f, p) == composeFunctors(q, s))) continue;
                  std::vector<InternalFunctor> fillers;
                  for (const InternalFunctor& u : us)
                    if (composeFunctors(f, u) == q && composeFunctors(u, s) == p) fillers.push_back(u);
                  REQUIRE(fillers.size() == 1);
                  CHECK(liftSquare(s, f, p, q, ofs) == fillers.front());
                  ++squares;
                }
              }
            }
          }
        }
        if (squares > 400) break;
      }
    }
  }
  CHECK(squares >= 100);
}

TEST_CASE("liftSquare rejects squares outside the classes or not commuting") {
  const InternalCategory w = walkingArrow();
  const InternalFunctor id = idFunctor(w);
  const InternalCategory two = discrete(2);
  // The inclusion of the two objects is injective on objects but not full.
  const InternalFunctor objects(two, w, FinMap::identity(FinObj(2)), map(2, 3, {0, 2}));
  const InternalFunctor id2 = idFunctor(two);
  try {
    liftSquare(id2, objects, id2, objects, epiMono());
    FAIL("expected NotInClass");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInClass);
  }
  // A commuting failure: s = id, f = id, p and q the two constant functors.
  const auto constants = functorsByOracle(w, w);
  const InternalFunctor at0 = constants.front();
  const InternalFunctor at1 = constants.back();
  REQUIRE(!(at0 == at1));
  try {
    liftSquare(id, id, at0, at1, epiMono());
    FAIL("expected NonCommuting");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonCommuting);
  }
}

TEST_CASE("liftTwoCell returns the unique filler among all assigners") {
  const BaseOFS ofs = epiMono();
  std::size_t cells = 0;
  const InternalCategory c = chain3();
  const InternalCategory w = walkingArrow();
  std::vector<std::pair<InternalCategory, InternalCategory>> shapes = {{c, w}, {w, w}, {discrete(2), discrete(1)}};
  for (const auto& [a, b] : shapes) {
    for (const InternalFunctor& s : functorsByOracle(a, b)) {
      if (!surjective(s.f0().table(), b.C0().size)) continue;
      for (const InternalCategory& x : {w, c}) {
        const InternalFunctor f = idFunctor(x);
        const auto ps = functorsByOracle(a, x);
        const auto qs = functorsByOracle(b, x);
        for (const InternalFunctor& p0 : ps) {
          for (const InternalFunctor& p1 : ps) {
            for (const InternalFunctor& q0 : qs) {
              if (!(composeFunctors(q0, s) == p0)) continue;
              for (const InternalFunctor& q1 : qs) {
                if (!(composeFunctors(q1, s) == p1)) continue;
                for (const InternalNatTrans& alpha : cellsByOracle(p0, p1)) {
                  for (const InternalNatTrans& beta : cellsByOracle(q0, q1)) {
                    if (!(whiskerLeft(f, alpha) == whiskerRight(beta, s))) continue;
                    const InternalFunctor u0 = liftSquare(s, f, p0, q0, ofs);
                    const InternalFunctor u1 = liftSquare(s, f, p1, q1, ofs);
                    std::vector<InternalNatTrans> fillers;
                    for (const InternalNatTrans& g : cellsByOracle(u0, u1)) {
                      bool ok = true;
                      for (Index o = 0; o < b.C0().size; ++o) ok = ok && f.f1()(g.alpha()(o)) == beta.alpha()(o);
                      for (Index o = 0; o < a.C0().size; ++o) ok = ok && g.alpha()(s.f0()(o)) == alpha.alpha()(o);
                      if (ok) fillers.push_back(g);
                    }
                    REQUIRE(fillers.size() == 1);
                    CHECK(liftTwoCell(s, f, alpha, beta, ofs) == fillers.front());
                    ++cells;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  CHECK(cells > 10);
}

TEST_CASE("isAcute is surjectivity on objects") {
  const InternalCategory w = walkingArrow();
  for (const InternalFunctor& f : functorsByOracle(chain3(), w))
    CHECK(isAcute(f) == surjective(f.f0().table(), 2));
  const InternalFunctor objects(discrete(2), w, FinMap::identity(FinObj(2)), map(2, 3, {0, 2}));
  CHECK(isAcute(objects));
}
