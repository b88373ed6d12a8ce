#include <set>

#include "doctest.h"
#include "icat/classifiers.hpp"
#include "icat/corpus.hpp"
#include "icat/factorisation.hpp"
#include "support.hpp"

using namespace icat;
using namespace testing_support;

namespace {

/// The codiscrete category on n objects; arrow s * n + t goes s -> t.
InternalCategory indisc(std::size_t n) {
  std::vector<std::pair<Index, Index>> arrows;
  for (Index s = 0; s < n; ++s)
    for (Index t = 0; t < n; ++t) arrows.emplace_back(s, t);
  std::vector<Index> ids;
  for (Index x = 0; x < n; ++x) ids.push_back(x * n + x);
  return fromTables(n, arrows, ids, [arrows, n](Index u, Index v) { return arrows[v].first * n + arrows[u].second; });
}

/// walkingArrow plus an isolated object 2 (arrow 3 is its identity).
InternalCategory arrowPlusPoint() {
  return fromTables(3, {{0, 0}, {0, 1}, {1, 1}, {2, 2}}, {0, 2, 3}, [](Index u, Index v) {
    if (u == 0 || u == 2 || u == 3) return v;
    return u;
  });
}

std::vector<InternalCategory> targets() { return {walkingArrow(), chain3(), discrete(2), cyclic(2), indisc(2)}; }

/// Subsets of objects as increasing index lists.
std::vector<std::vector<Index>> subsets(std::size_t n) {
  std::vector<std::vector<Index>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Index> s;
    for (Index k = 0; k < n; ++k)
      if (mask >> k & 1) s.push_back(k);
    out.push_back(s);
  }
  return out;
}

/// The pullback of (chi, top) is f, checked pointwise: exactly the objects
/// and arrows in the image of f land on the top object and top identity.
bool pullsBackTo(const InternalFunctor& chi, const InternalFunctor& top, const InternalFunctor& f) {
  const Index t0 = top.f0()(0), t1 = top.f1()(0);
  const std::vector<Index> f0 = f.f0().table(), f1 = f.f1().table();
  const std::set<Index> objs(f0.begin(), f0.end()), arrs(f1.begin(), f1.end());
  if (objs.size() != f0.size() || arrs.size() != f1.size()) return false;
  for (Index b = 0; b < chi.dom().C0().size; ++b)
    if ((chi.f0()(b) == t0) != (objs.count(b) == 1)) return false;
  for (Index e = 0; e < chi.dom().C1().size; ++e)
    if ((chi.f1()(e) == t1) != (arrs.count(e) == 1)) return false;
  return true;
}

}  // namespace

TEST_CASE("the full subobject classifier is indisc of a two-element set") {
  const FullSubobjectClassifier omega = fullSubobjectClassifier();
  CHECK(omega.omega.C0().size == 2);
  CHECK(omega.omega.C1().size == 4);
  CHECK(omega.top.f0()(0) == 1);
  CHECK(validateFunctor(omega.top).ok());
}

TEST_CASE("chi is the unique functor whose pullback of top is the full mono") {
  const FullSubobjectClassifier omega = fullSubobjectClassifier();
  std::size_t checked = 0;
  for (const InternalCategory& b : targets()) {
    const auto chis = functorsByOracle(b, omega.omega);
    for (const auto& objects : subsets(b.C0().size)) {
      const InternalFunctor f = fullSubcategoryInclusion(b, objects);
      const InternalFunctor chi = classifyFullMono(f);
      CHECK(validateFunctor(chi).ok());
      CHECK(isClassifyingSquare(f, chi, omega.top));
      std::vector<InternalFunctor> candidates;
      for (const InternalFunctor& c : chis)
        if (pullsBackTo(c, omega.top, f)) candidates.push_back(c);
      REQUIRE(candidates.size() == 1);
      CHECK(candidates.front() == chi);
      ++checked;
    }
  }
  CHECK(checked == 4 + 8 + 4 + 2 + 4);
}

TEST_CASE("classifyFullMono rejects functors that are not full monos") {
  const InternalFunctor objects(discrete(2), walkingArrow(), FinMap::identity(FinObj(2)), map(2, 3, {0, 2}));
  try {
    classifyFullMono(objects);
    FAIL("expected NotFullMono");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFullMono);
  }
}

TEST_CASE("strict bi-sieves are unions of components") {
  const InternalCategory b = arrowPlusPoint();
  const InternalFunctor point(discrete(1), b, map(1, 3, {2}), map(1, 4, {3}));
  const InternalFunctor source(discrete(1), b, map(1, 3, {0}), map(1, 4, {0}));
  CHECK(isStrictBiSieve(point));
  CHECK_FALSE(isStrictBiSieve(source));

  const BiSieveClassification c = classifyStrictBiSieve(point);
  CHECK(c.pi0Mono);
  CHECK(c.pullbackVerified);
  const Index t = c.top.f0()(0);
  CHECK(c.chi.f0()(2) == t);
  CHECK(c.chi.f0()(0) != t);
  CHECK(c.chi.f0()(0) == c.chi.f0()(1));
  CHECK(c.chi.cod().C0().size == c.chi.cod().C1().size);  // discrete codomain

  try {
    classifyStrictBiSieve(source);
    FAIL("expected NotBiSieve");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBiSieve);
  }
}

TEST_CASE("Boolean and two-valued") {
  CHECK(isBoolean());
  const TwoValuedReport r = isTwoValued();
  CHECK(r.functorCount == 2);
  CHECK(r.arrowCount == 4);
  CHECK(r.allInvertible);
  CHECK(r.twoValued());
  // The counts agree with brute force over functors 1 -> indisc(2).
  const FullSubobjectClassifier omega = fullSubobjectClassifier();
  const auto points = functorsByOracle(discrete(1), omega.omega);
  CHECK(points.size() == r.functorCount);
  std::size_t cells = 0;
  for (const auto& p : points)
    for (const auto& q : points) cells += cellsByOracle(p, q).size();
  CHECK(cells == r.arrowCount);
}

TEST_CASE("sections of fully faithful functors surjective on objects") {
  // indisc(3) -> indisc(2) sending 0, 1 to 0 and 2 to 1.
  const InternalCategory a = indisc(3), b = indisc(2);
  std::vector<Index> f1;
  const std::vector<Index> f0{0, 0, 1};
  for (Index s = 0; s < 3; ++s)
    for (Index t = 0; t < 3; ++t) f1.push_back(f0[s] * 2 + f0[t]);
  const InternalFunctor e(a, b, map(3, 2, f0), map(9, 4, f1));
  REQUIRE(validateFunctor(e).ok());

  const SectionCertificate cert = sectionOfFFEpi(e);
  CHECK(checkSectionCertificate(e, cert).empty());
  CHECK(cert.section.f0().table() == std::vector<Index>{0, 2});
  for (Index x = 0; x < 2; ++x) CHECK(e.f0()(cert.section.f0()(x)) == x);
  for (Index u = 0; u < 4; ++u) CHECK(e.f1()(cert.section.f1()(u)) == u);

  // Tampering with the unit breaks the certificate.
  std::vector<Index> wrong = cert.unit.alpha().table();
  wrong[0] = 0 * 3 + 1;
  const SectionCertificate tampered{cert.section,
                                    InternalNatTrans(cert.unit.src(), cert.unit.tgt(), map(3, 9, wrong))};
  CHECK_FALSE(checkSectionCertificate(e, tampered).empty());
}

TEST_CASE("sectionOfFFEpi rejects functors that are not fully faithful or not surjective") {
  const InternalFunctor collapse(walkingArrow(), discrete(1), map(2, 1, {0, 0}), map(3, 1, {0, 0, 0}));
  REQUIRE(validateFunctor(collapse).ok());
  try {
    sectionOfFFEpi(collapse);
    FAIL("expected NotFFEpi");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFFEpi);
  }
  const InternalFunctor point(discrete(1), discrete(2), map(1, 2, {0}), map(1, 2, {0}));
  CHECK_THROWS_AS(sectionOfFFEpi(point), Error);
}

TEST_CASE("the choice audit certifies acute fully faithful functors and skips the rest") {
  const InternalCategory b = chain3();
  const std::vector<InternalFunctor> functors{
      fullyFaithfulCover(b, map(5, 3, {0, 1, 2, 2, 0})),
      fullSubcategoryInclusion(b, {0, 2}),
      InternalFunctor(walkingArrow(), discrete(1), map(2, 1, {0, 0}), map(3, 1, {0, 0, 0})),
  };
  const ChoiceAuditFragment r = categorifiedChoiceAudit(functors);
  REQUIRE(r.entries.size() == 3);
  CHECK(r.entries[0].status == ChoiceAuditEntry::Status::Certified);
  CHECK(r.entries[1].status == ChoiceAuditEntry::Status::Skipped);
  CHECK(r.entries[1].reason == "not acute");
  CHECK(r.entries[2].status == ChoiceAuditEntry::Status::Skipped);
  CHECK(r.entries[2].reason == "not fully faithful");
  CHECK(r.certified() == 1);
  CHECK(r.skipped() == 2);
  CHECK(r.counterexamples() == 0);
}
