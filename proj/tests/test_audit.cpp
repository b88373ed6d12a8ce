#include "doctest.h"
#include "icat/audit.hpp"
#include "icat/io.hpp"
#include "icat/limits2d.hpp"
#include "icat/transfer.hpp"
#include "support.hpp"

using namespace icat;
using namespace testing_support;

namespace {

bool nextTable(std::vector<Index>& t, std::size_t cod) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (++t[k] < cod) return true;
    t[k] = 0;
  }
  return false;
}

/// Number of u : N -> X with u(z) = x0 and u . s = g . u, by trying every table.
std::size_t countRecursors(const std::vector<Index>& s, Index z, std::size_t x, Index x0,
                           const std::vector<Index>& g) {
  std::size_t count = 0;
  std::vector<Index> u(s.size(), 0);
  do {
    bool ok = u[z] == x0;
    for (Index k = 0; ok && k < s.size(); ++k) ok = u[s[k]] == g[u[k]];
    count += ok;
  } while (nextTable(u, x));
  return count;
}

RecursorOutcome outcomeOf(std::size_t count) {
  if (count == 0) return RecursorOutcome::NoRecursor;
  return count == 1 ? RecursorOutcome::UniqueRecursor : RecursorOutcome::MultipleRecursors;
}

InternalFunctor pointAt(const InternalCategory& x, Index obj) {
  return InternalFunctor(terminalCat(), x, FinMap::point(x.C0(), obj), FinMap::point(x.C1(), x.identity(obj)));
}

}  // namespace

TEST_CASE("recursorSearch agrees with enumerating every map") {
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t x = 1; x <= 3; ++x) {
      for (const NNOCandidate& c : enumerateNNOCandidates(n)) {
        if (c.n.size != n) continue;
        for (Index x0 = 0; x0 < x; ++x0) {
          std::vector<Index> g(x, 0);
          do {
            const RecursorResult r =
                recursorSearch(c, FinObj(x), FinMap::point(FinObj(x), x0), FinMap(FinObj(x), FinObj(x), g));
            const std::size_t count = countRecursors(c.s.table(), c.z(0), x, x0, g);
            CHECK(r.outcome == outcomeOf(count));
            CHECK(r.count == std::min<std::size_t>(count, 2));
            if (r.recursor) {
              CHECK(r.recursor->table()[c.z(0)] == x0);
              for (Index k = 0; k < n; ++k) CHECK(r.recursor->table()[c.s(k)] == g[r.recursor->table()[k]]);
            }
            ++cases;
          } while (nextTable(g, x));
        }
      }
    }
  }
  CHECK(cases > 1000);
}

TEST_CASE("candidate enumeration counts") {
  // size n contributes n * n^n candidates.
  CHECK(enumerateNNOCandidates(1).size() == 1);
  CHECK(enumerateNNOCandidates(2).size() == 1 + 8);
  CHECK(enumerateNNOCandidates(3).size() == 1 + 8 + 81);
}

TEST_CASE("no finite candidate is a natural numbers object") {
  const auto refutations = refuteFiniteNNO(2);
  CHECK(refutations.size() == 9);
  for (const NNORefutation& r : refutations) {
    REQUIRE(r.counterexample.has_value());
    const NNOCounterexample& ce = *r.counterexample;
    CHECK(ce.x.size <= 3);
    const std::size_t count =
        countRecursors(r.candidate.s.table(), r.candidate.z(0), ce.x.size, ce.f(0), ce.g.table());
    CHECK(count != 1);
    CHECK(ce.outcome == outcomeOf(count));
  }
}

TEST_CASE("two-dimensional recursion on disc(N)") {
  const InternalCategory w = walkingArrow();
  const InternalFunctor f = pointAt(w, 0), fPrime = pointAt(w, 1), g = idFunctor(w);
  const InternalNatTrans alpha(f, fPrime, FinMap::point(w.C1(), 1));
  REQUIRE(validateNatTrans(alpha).ok());

  const NNOCandidate one{FinObj(1), FinMap::point(FinObj(1), 0), FinMap::identity(FinObj(1))};
  const TwoDimensionalNNOVerdict v = twoDimensionalNNOCheck(one, f, fPrime, g, alpha);
  CHECK(v.source.outcome == RecursorOutcome::UniqueRecursor);
  CHECK(v.target.outcome == RecursorOutcome::UniqueRecursor);
  CHECK(v.cell.outcome == RecursorOutcome::UniqueRecursor);
  REQUIRE(v.transformation.has_value());
  CHECK(v.transformation->alpha().table() == std::vector<Index>{1});

  const NNOCandidate loose{FinObj(2), FinMap::point(FinObj(2), 0), FinMap::identity(FinObj(2))};
  const TwoDimensionalNNOVerdict w2 = twoDimensionalNNOCheck(loose, f, fPrime, g, alpha);
  CHECK(w2.source.outcome == RecursorOutcome::MultipleRecursors);
  CHECK_FALSE(w2.transformation.has_value());

  CHECK_THROWS_AS(twoDimensionalNNOCheck(one, f, fPrime, pointAt(w, 0), alpha), Error);
}

TEST_CASE("2_E separates functors that agree on objects") {
  const InternalCategory z3 = cyclic(3);
  const InternalFunctor id = idFunctor(z3);
  const InternalFunctor negate(z3, z3, FinMap::identity(z3.C0()), map(3, 3, {0, 2, 1}));
  REQUIRE(validateFunctor(negate).ok());

  const auto probe = separatingProbe({freeArrow()}, id, negate);
  REQUIRE(probe.has_value());
  CHECK(validateFunctor(*probe).ok());
  CHECK_FALSE(composeFunctors(id, *probe) == composeFunctors(negate, *probe));
  CHECK_FALSE(separatingProbe({freeArrow()}, id, id).has_value());

  // The terminal category only sees objects.
  CHECK_FALSE(separatingProbe({terminalCat()}, id, negate).has_value());
  const GeneratorVerdict weak = generatorCheck({terminalCat()}, {{id, negate}, {id, id}});
  CHECK(weak.pairs == 2);
  CHECK(weak.distinct == 1);
  CHECK(weak.failures == std::vector<Index>{0});
  CHECK(generatorCheck({freeArrow()}, {{id, negate}, {id, id}}).ok());
}

TEST_CASE("2_E separates parallel 2-cells") {
  const InternalCategory z2 = cyclic(2);
  const InternalFunctor p = pointAt(z2, 0);
  const InternalNatTrans zero(p, p, map(1, 2, {0})), one(p, p, map(1, 2, {1}));
  REQUIRE(validateNatTrans(one).ok());
  const GeneratorVerdict v = generatorCheckCells({freeArrow()}, {{zero, one}, {one, one}});
  CHECK(v.distinct == 1);
  CHECK(v.ok());
}

TEST_CASE("the diagonal is an equaliser for small base sets") {
  for (std::size_t n = 0; n <= 5; ++n) CHECK(diagonalIsEqualiser(FinObj(n)));
}

TEST_CASE("two-well-pointedness on a planted pair") {
  const InternalCategory z3 = cyclic(3);
  const InternalFunctor negate(z3, z3, FinMap::identity(z3.C0()), map(3, 3, {0, 2, 1}));
  const WellPointedVerdict v = twoWellPointedCheck({{idFunctor(z3), negate}}, {});
  CHECK(v.componentsOfTwoTerminal);
  CHECK(v.equaliserLemma);
  CHECK(v.ok());
}

TEST_CASE("an empty corpus skips every axiom") {
  AuditConfig config;
  config.corpus.count = 0;
  const AuditReport r = runAudit(config);
  CHECK(r.corpusSize == 0);
  REQUIRE(r.entries.size() == auditAxioms().size());
  for (const AuditEntry& e : r.entries) CHECK(e.verdict == Verdict::Skipped);
  CHECK(r.asExpected());
}

TEST_CASE("a small audit is as expected and deterministic") {
  AuditConfig config;
  config.corpus.count = 6;
  config.corpus.maxArrows = 6;
  config.functorSamples = 10;
  config.nnoMaxSize = 2;
  const AuditReport a = runAudit(config);
  const AuditReport b = runAudit(config);
  CHECK(a.asExpected());
  CHECK(a.find("nno")->verdict == Verdict::Refuted);
  CHECK(a.find("boolean")->verdict == Verdict::VerifiedAtScale);
  CHECK(io::dump(io::toJson(a)) == io::dump(io::toJson(b)));

  config.suites = {"boolean"};
  const AuditReport only = runAudit(config);
  CHECK(only.find("boolean")->verdict == Verdict::VerifiedAtScale);
  CHECK(only.find("nno")->summary == "suite not selected");
}
