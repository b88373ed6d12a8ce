#include "icat/audit.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "icat/classifiers.hpp"
#include "icat/limits2d.hpp"
#include "icat/transfer.hpp"

namespace icat {

using nlohmann::ordered_json;

std::string_view outcomeName(RecursorOutcome o) {
  switch (o) {
    case RecursorOutcome::UniqueRecursor: return "uniqueRecursor";
    case RecursorOutcome::NoRecursor: return "noRecursor";
    case RecursorOutcome::MultipleRecursors: return "multipleRecursors";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::size_t satAdd(std::size_t a, std::size_t b) { return std::min<std::size_t>(a + b, 2); }
std::size_t satMul(std::size_t a, std::size_t b) { return std::min<std::size_t>(a * b, 2); }

void requireShape(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::ShapeMismatch, what);
}

/// Advances a table over {0..cod-1} lexicographically; false after the last one.
bool nextTable(std::vector<Index>& t, std::size_t cod) {
  std::size_t k = t.size();
  while (k > 0 && ++t[k - 1] == cod) t[--k] = 0;
  return k > 0;
}

}  // namespace

RecursorResult recursorSearch(const NNOCandidate& c, const FinObj& x, const FinMap& f, const FinMap& g) {
  requireShape(c.z.dom().size == 1 && c.z.cod() == c.n, "z must be a point of N");
  requireShape(c.s.dom() == c.n && c.s.cod() == c.n, "s must be an endomap of N");
  requireShape(f.dom().size == 1 && f.cod() == x, "f must be a point of X");
  requireShape(g.dom() == x && g.cod() == x, "g must be an endomap of X");
  const std::size_t n = c.n.size, nx = x.size;
  const Index z = c.z(0), x0 = f(0);

  std::vector<bool> onCycle(n, false);
  for (Index v = 0; v < n; ++v) {
    Index w = c.s(v);
    for (std::size_t k = 0; k < n && w != v; ++k) w = c.s(w);
    onCycle[v] = w == v;
  }
  std::vector<std::vector<Index>> children(n), preimage(nx);
  for (Index m = 0; m < n; ++m)
    if (!onCycle[m]) children[c.s(m)].push_back(m);
  for (Index v = 0; v < nx; ++v) preimage[g(v)].push_back(v);
  auto pinned = [&](Index m, Index value) { return m != z || value == x0; };

  // below(m, v): solutions on the trees hanging off m, given u(m) = v.
  std::vector<std::size_t> memo(n * nx, kUnset);
  std::function<std::size_t(Index, Index)> below = [&](Index m, Index v) -> std::size_t {
    std::size_t& slot = memo[m * nx + v];
    if (slot != kUnset) return slot;
    std::size_t total = 1;
    for (Index child : children[m]) {
      std::size_t ways = 0;
      for (Index w : preimage[v])
        if (pinned(child, w)) ways = satAdd(ways, below(child, w));
      total = satMul(total, ways);
    }
    return slot = total;
  };

  std::vector<std::vector<Index>> cycles;
  std::vector<bool> seen(n, false);
  for (Index v = 0; v < n; ++v) {
    if (!onCycle[v] || seen[v]) continue;
    std::vector<Index> cycle;
    for (Index w = v; !seen[w]; w = c.s(w)) {
      seen[w] = true;
      cycle.push_back(w);
    }
    cycles.push_back(std::move(cycle));
  }
  // Weight of starting the cycle at value v; zero unless v is g-periodic with that period.
  auto cycleWeight = [&](const std::vector<Index>& cycle, Index v) -> std::size_t {
    std::size_t weight = 1;
    Index value = v;
    for (Index m : cycle) {
      if (!pinned(m, value)) return 0;
      weight = satMul(weight, below(m, value));
      value = g(value);
    }
    return value == v ? weight : 0;
  };

  std::size_t count = 1;
  for (const auto& cycle : cycles) {
    std::size_t ways = 0;
    for (Index v = 0; v < nx; ++v) ways = satAdd(ways, cycleWeight(cycle, v));
    count = satMul(count, ways);
  }

  RecursorResult result{count == 0   ? RecursorOutcome::NoRecursor
                        : count == 1 ? RecursorOutcome::UniqueRecursor
                                     : RecursorOutcome::MultipleRecursors,
                        count, std::nullopt};
  if (count == 0) return result;

  std::vector<Index> u(n, 0);
  std::function<void(Index, Index)> assign = [&](Index m, Index v) {
    u[m] = v;
    for (Index child : children[m]) {
      for (Index w : preimage[v]) {
        if (pinned(child, w) && below(child, w) > 0) {
          assign(child, w);
          break;
        }
      }
    }
  };
  for (const auto& cycle : cycles) {
    Index v = 0;
    while (cycleWeight(cycle, v) == 0) ++v;
    for (Index m : cycle) {
      assign(m, v);
      v = g(v);
    }
  }
  result.recursor = FinMap(c.n, x, u);
  return result;
}

std::vector<NNOCandidate> enumerateNNOCandidates(std::size_t maxSize) {
  std::vector<NNOCandidate> out;
  for (std::size_t size = 1; size <= maxSize; ++size) {
    const FinObj n(size);
    for (Index z = 0; z < size; ++z) {
      std::vector<Index> s(size, 0);
      do {
        out.push_back(NNOCandidate{n, FinMap::point(n, z), FinMap(n, n, s)});
      } while (nextTable(s, size));
    }
  }
  return out;
}

std::vector<NNORefutation> refuteFiniteNNO(std::size_t maxSize) {
  std::vector<NNORefutation> out;
  for (NNOCandidate& cand : enumerateNNOCandidates(maxSize)) {
    NNORefutation r{std::move(cand), std::nullopt};
    for (std::size_t size = 1; size <= maxSize + 1 && !r.counterexample; ++size) {
      const FinObj x(size);
      for (Index x0 = 0; x0 < size && !r.counterexample; ++x0) {
        std::vector<Index> g(size, 0);
        do {
          const FinMap f = FinMap::point(x, x0), gm(x, x, g);
          const RecursorResult res = recursorSearch(r.candidate, x, f, gm);
          if (res.outcome != RecursorOutcome::UniqueRecursor) {
            r.counterexample = NNOCounterexample{x, f, gm, res.outcome};
            break;
          }
        } while (nextTable(g, size));
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

TwoDimensionalNNOVerdict twoDimensionalNNOCheck(const NNOCandidate& c, const InternalFunctor& f,
                                                const InternalFunctor& fPrime,
                                                const InternalFunctor& g,
                                                const InternalNatTrans& alphaBar) {
  const InternalCategory& x = g.dom();
  requireShape(g.cod() == x, "g must be an endofunctor");
  requireShape(f.dom() == terminalCat() && fPrime.dom() == terminalCat(), "f, f' must be points");
  requireShape(f.cod() == x && fPrime.cod() == x, "f, f' must land in the domain of g");
  requireShape(alphaBar.src() == f && alphaBar.tgt() == fPrime, "alphaBar must go from f to f'");

  TwoDimensionalNNOVerdict v{recursorSearch(c, x.C0(), f.f0(), g.f0()),
                             recursorSearch(c, x.C0(), fPrime.f0(), g.f0()),
                             recursorSearch(c, x.C1(), alphaBar.alpha(), g.f1()), std::nullopt};
  const auto unique = [](const RecursorResult& r) { return r.outcome == RecursorOutcome::UniqueRecursor; };
  if (unique(v.source) && unique(v.target) && unique(v.cell)) {
    const InternalCategory dn = disc(c.n);
    const InternalFunctor u(dn, x, *v.source.recursor, compose(x.i(), *v.source.recursor));
    const InternalFunctor uPrime(dn, x, *v.target.recursor, compose(x.i(), *v.target.recursor));
    InternalNatTrans phi(u, uPrime, *v.cell.recursor);
    if (validateNatTrans(phi).ok()) v.transformation = std::move(phi);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Generators

std::optional<InternalFunctor> separatingProbe(const std::vector<InternalCategory>& family,
                                               const InternalFunctor& f, const InternalFunctor& g,
                                               std::size_t bound) {
  requireShape(f.dom() == g.dom() && f.cod() == g.cod(), "probe needs a parallel pair");
  if (f == g) return std::nullopt;
  const InternalCategory& a = f.dom();
  Index arrow = 0;
  while (f.f1()(arrow) == g.f1()(arrow)) ++arrow;

  const InternalCategory two = freeArrow();
  for (const InternalCategory& member : family) {
    if (const auto iso = findIsomorphism(member, two)) {
      const Index s = a.source(arrow), t = a.target(arrow);
      const InternalFunctor pick(two, a, FinMap(two.C0(), a.C0(), {s, t}),
                                 FinMap(two.C1(), a.C1(), {a.identity(s), arrow, a.identity(t)}));
      const InternalFunctor h = composeFunctors(pick, *iso);
      if (!(composeFunctors(f, h) == composeFunctors(g, h))) return h;
      continue;
    }
    for (const InternalFunctor& h : allFunctors(member, a, bound)) {
      if (!(composeFunctors(f, h) == composeFunctors(g, h))) return h;
    }
  }
  return std::nullopt;
}

GeneratorVerdict generatorCheck(const std::vector<InternalCategory>& family,
                                const std::vector<std::pair<InternalFunctor, InternalFunctor>>& pairs,
                                std::size_t bound) {
  GeneratorVerdict v;
  for (Index k = 0; k < pairs.size(); ++k) {
    ++v.pairs;
    const auto& [f, g] = pairs[k];
    if (f == g) continue;
    ++v.distinct;
    if (!separatingProbe(family, f, g, bound)) v.failures.push_back(k);
  }
  return v;
}

GeneratorVerdict generatorCheckCells(
    const std::vector<InternalCategory>& family,
    const std::vector<std::pair<InternalNatTrans, InternalNatTrans>>& pairs, std::size_t bound) {
  GeneratorVerdict v;
  std::vector<PowerByTwo> powers;
  for (Index k = 0; k < pairs.size(); ++k) {
    ++v.pairs;
    const auto& [alpha, beta] = pairs[k];
    requireShape(alpha.src() == beta.src() && alpha.tgt() == beta.tgt(), "cells must be parallel");
    if (alpha == beta) continue;
    ++v.distinct;
    const InternalCategory& b = alpha.src().cod();
    auto cached = std::find_if(powers.begin(), powers.end(), [&](const PowerByTwo& p) { return p.base == b; });
    if (cached == powers.end()) cached = powers.insert(powers.end(), powerByTwo(b));
    if (!separatingProbe(family, cached->fromTwoCell(alpha), cached->fromTwoCell(beta), bound)) {
      v.failures.push_back(k);
    }
  }
  return v;
}

bool diagonalIsEqualiser(const FinObj& a) {
  const ChosenLimit pair = product(a, a);
  const ChosenLimit triple = product({a, a, a});
  const FinMap& p0 = pair.projection(0);
  const FinMap& p1 = pair.projection(1);
  const FinMap left = triple.mediate({p0, p0, p1});
  const FinMap right = triple.mediate({p0, p1, p1});
  const FinMap diagonal = pair.mediate({FinMap::identity(a), FinMap::identity(a)});
  return isEqualizer(diagonal, left, right);
}

WellPointedVerdict twoWellPointedCheck(
    const std::vector<std::pair<InternalFunctor, InternalFunctor>>& pairs,
    const std::vector<std::pair<InternalNatTrans, InternalNatTrans>>& cellPairs, std::size_t maxBase,
    std::size_t bound) {
  const std::vector<InternalCategory> family = {freeArrow()};
  WellPointedVerdict v;
  v.functors = generatorCheck(family, pairs, bound);
  v.cells = generatorCheckCells(family, cellPairs, bound);
  v.componentsOfTwoTerminal = pi0(freeArrow()).size == 1;
  v.equaliserLemma = true;
  for (std::size_t n = 0; n <= maxBase; ++n) v.equaliserLemma = v.equaliserLemma && diagonalIsEqualiser(FinObj(n));
  return v;
}

// ---------------------------------------------------------------------------
// Aggregate report

std::string_view verdictName(Verdict v) {
  switch (v) {
    case Verdict::VerifiedAtScale: return "verified-at-scale";
    case Verdict::Refuted: return "refuted";
    case Verdict::Skipped: return "skipped";
  }
  return "unknown";
}

const std::vector<std::string>& auditAxioms() {
  static const std::vector<std::string> axioms = {
      "finiteLimits",   "cartesianClosed",    "wellPointed2", "nno",      "fullSubobjectClassifier",
      "categorifiedChoice", "extensivity", "boolean", "twoValued"};
  return axioms;
}

const AuditEntry* AuditReport::find(std::string_view axiom) const {
  for (const AuditEntry& e : entries)
    if (e.axiom == axiom) return &e;
  return nullptr;
}

bool AuditReport::asExpected() const {
  return std::all_of(entries.begin(), entries.end(), [](const AuditEntry& e) {
    if (e.verdict == Verdict::Skipped) return true;
    return e.axiom == "nno" ? e.verdict == Verdict::Refuted : e.verdict == Verdict::VerifiedAtScale;
  });
}

namespace {

ordered_json tableJson(const FinMap& m) { return m.table(); }

struct Context {
  const AuditConfig& config;
  const std::vector<CorpusItem>& corpus;
  std::vector<InternalFunctor> functors;
};

AuditEntry verdictFrom(std::string axiom, std::size_t checks, std::vector<std::string> failures,
                       ordered_json witness) {
  witness["checks"] = checks;
  witness["failures"] = failures.size();
  if (!failures.empty()) {
    witness["firstFailure"] = failures.front();
    return AuditEntry{std::move(axiom), Verdict::Refuted,
                      std::to_string(failures.size()) + " of " + std::to_string(checks) + " checks failed",
                      std::move(witness)};
  }
  if (checks == 0) return AuditEntry{std::move(axiom), Verdict::Skipped, "nothing to check", std::move(witness)};
  return AuditEntry{std::move(axiom), Verdict::VerifiedAtScale,
                    std::to_string(checks) + " checks passed", std::move(witness)};
}

/// The first `limit` corpus items, for suites that look at all pairs.
std::size_t head(const Context& ctx, std::size_t limit) { return std::min(ctx.corpus.size(), limit); }

AuditEntry auditFiniteLimits(const Context& ctx) {
  std::size_t checks = 0, overBound = 0;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  };
  auto guarded = [&](auto&& body) {
    try {
      body();
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::SizeBound) throw;
      ++overBound;
    }
  };
  expect(validateCategory(terminalCat()).ok() && terminalCat().C0().size == 1, "terminal");
  const std::size_t n = head(ctx, 10);
  for (Index i = 0; i < n; ++i) {
    const CorpusItem& a = ctx.corpus[i];
    guarded([&] {
      const PowerByTwo power = powerByTwo(a.category);
      expect(power.carrier.C0().size == a.category.C1().size && validateCategory(power.carrier).ok() &&
                 validateNatTrans(power.universalCell).ok(),
             "power by 2 of " + a.name);
    });
    for (Index j = 0; j < n; ++j) {
      const CorpusItem& b = ctx.corpus[j];
      guarded([&] {
        const CatProduct p = productCat(a.category, b.category);
        expect(validateCategory(p.object).ok() && validateFunctor(p.proj0).ok() &&
                   validateFunctor(p.proj1).ok(),
               "product " + a.name + " x " + b.name);
      });
    }
  }
  for (const InternalFunctor& f : ctx.functors) {
    for (const InternalFunctor& g : ctx.functors) {
      if (!(f.cod() == g.cod())) continue;
      guarded([&] {
        const CatPullback pb = pullbackCat(f, g);
        expect(validateCategory(pb.object).ok() && isPullbackCone(pb.proj0, pb.proj1, f, g),
               "pullback of sampled cospan");
      });
    }
  }
  ordered_json w;
  w["overBound"] = overBound;
  return verdictFrom("finiteLimits", checks, std::move(failures), std::move(w));
}

AuditEntry auditCartesianClosed(const Context& ctx) {
  std::size_t checks = 0, overBound = 0;
  std::vector<std::string> failures;
  const std::size_t n = head(ctx, 6);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const CorpusItem& x = ctx.corpus[i];
      const CorpusItem& y = ctx.corpus[j];
      try {
        const InternalHom h = internalHom(x.category, y.category, ctx.config.sizeBound);
        const HomCategory e = homCategory(x.category, y.category, ctx.config.sizeBound);
        ++checks;
        if (h.levelSize(0) != e.objects().size() || h.levelSize(1) != e.arrows().size() ||
            !validateFunctor(h.evaluation()).ok()) {
          failures.push_back("[" + x.name + ", " + y.name + "]");
        }
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::SizeBound) throw;
        ++overBound;
      }
    }
  }
  ordered_json w;
  w["pairsOverBound"] = overBound;
  return verdictFrom("cartesianClosed", checks, std::move(failures), std::move(w));
}

AuditEntry auditWellPointed(const Context& ctx) {
  std::vector<std::pair<InternalFunctor, InternalFunctor>> pairs;
  std::vector<std::pair<InternalNatTrans, InternalNatTrans>> cellPairs;
  for (const InternalFunctor& f : ctx.functors) {
    std::vector<InternalFunctor> parallel;
    try {
      parallel = allFunctors(f.dom(), f.cod(), ctx.config.sizeBound);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::SizeBound) throw;
    }
    for (std::size_t k = 0; k < parallel.size() && k < 8; ++k) {
      pairs.emplace_back(f, parallel[k]);
      std::vector<InternalNatTrans> cells;
      try {
        cells = allTransformations(f, parallel[k], ctx.config.sizeBound);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::SizeBound) throw;
      }
      for (std::size_t c = 1; c < cells.size() && c < 4; ++c) cellPairs.emplace_back(cells[0], cells[c]);
    }
  }
  const WellPointedVerdict v = twoWellPointedCheck(pairs, cellPairs, ctx.config.baseMaxSize, ctx.config.sizeBound);
  std::vector<std::string> failures;
  for (Index k : v.functors.failures) failures.push_back("functor pair " + std::to_string(k));
  for (Index k : v.cells.failures) failures.push_back("cell pair " + std::to_string(k));
  if (!v.componentsOfTwoTerminal) failures.push_back("Pi0(2_E) is not terminal");
  if (!v.equaliserLemma) failures.push_back("diagonal equaliser");
  ordered_json w;
  w["functorPairs"] = v.functors.distinct;
  w["cellPairs"] = v.cells.distinct;
  w["pi0OfFreeArrow"] = pi0(freeArrow()).size;
  return verdictFrom("wellPointed2", v.functors.distinct + v.cells.distinct + 2, std::move(failures),
                     std::move(w));
}

AuditEntry auditNNO(const Context& ctx) {
  const std::vector<NNORefutation> refutations = refuteFiniteNNO(ctx.config.nnoMaxSize);
  const auto survivor = std::find_if(refutations.begin(), refutations.end(),
                                     [](const NNORefutation& r) { return !r.counterexample; });
  ordered_json w;
  w["candidates"] = refutations.size();
  w["maxSize"] = ctx.config.nnoMaxSize;
  if (survivor != refutations.end()) {
    w["unrefuted"] = {{"N", survivor->candidate.n.size},
                      {"z", survivor->candidate.z(0)},
                      {"s", tableJson(survivor->candidate.s)}};
    return AuditEntry{"nno", Verdict::VerifiedAtScale, "a finite candidate survived every test", w};
  }
  const NNORefutation& first = refutations.front();
  w["counterexample"] = {{"N", first.candidate.n.size},
                         {"z", first.candidate.z(0)},
                         {"s", tableJson(first.candidate.s)},
                         {"X", first.counterexample->x.size},
                         {"f", first.counterexample->f(0)},
                         {"g", tableJson(first.counterexample->g)},
                         {"outcome", outcomeName(first.counterexample->outcome)}};
  return AuditEntry{"nno", Verdict::Refuted,
                    "no finite candidate is a natural numbers object: all " +
                        std::to_string(refutations.size()) + " refuted",
                    std::move(w)};
}

AuditEntry auditClassifier(const Context& ctx) {
  const FullSubobjectClassifier c = fullSubobjectClassifier();
  std::size_t checks = 1, uniqueness = 0;
  std::vector<std::string> failures;
  if (!isFullMono(c.top)) failures.push_back("top is not a full mono");
  for (const CorpusItem& item : ctx.corpus) {
    const std::size_t n0 = item.category.C0().size;
    if (n0 > 4) continue;
    std::vector<InternalFunctor> candidates;
    const bool exhaustive = item.category.C1().size <= 8;
    if (exhaustive) candidates = allFunctors(item.category, c.omega, ctx.config.sizeBound);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n0); ++mask) {
      std::vector<Index> objects;
      for (Index x = 0; x < n0; ++x)
        if (mask >> x & 1) objects.push_back(x);
      const InternalFunctor f = fullSubcategoryInclusion(item.category, objects);
      const InternalFunctor chi = classifyFullMono(f);
      ++checks;
      if (!isClassifyingSquare(f, chi, c.top)) failures.push_back("square for " + item.name);
      if (!exhaustive) continue;
      ++uniqueness;
      const auto classifying = std::count_if(candidates.begin(), candidates.end(),
                                             [&](const InternalFunctor& k) { return isClassifyingSquare(f, k, c.top); });
      if (classifying != 1) failures.push_back("uniqueness for " + item.name);
    }
  }
  ordered_json w;
  w["uniquenessChecks"] = uniqueness;
  return verdictFrom("fullSubobjectClassifier", checks, std::move(failures), std::move(w));
}

AuditEntry auditChoice(const Context& ctx, std::mt19937_64& rng) {
  std::vector<InternalFunctor> functors = ctx.functors;
  for (const CorpusItem& item : ctx.corpus) {
    const std::size_t n0 = item.category.C0().size;
    if (n0 == 0) continue;
    // A random surjection from one more object onto B0.
    std::vector<Index> e0(n0 + 1);
    for (Index x = 0; x < n0; ++x) e0[x] = x;
    e0[n0] = rng() % n0;
    std::shuffle(e0.begin(), e0.end(), rng);
    functors.push_back(fullyFaithfulCover(item.category, FinMap(FinObj(n0 + 1), item.category.C0(), e0)));
  }
  const ChoiceAuditFragment frag = categorifiedChoiceAudit(functors);
  std::vector<std::string> failures;
  for (const ChoiceAuditEntry& e : frag.entries)
    if (e.status == ChoiceAuditEntry::Status::Counterexample) failures.push_back(e.reason);
  ordered_json w;
  w["certified"] = frag.certified();
  w["skipped"] = frag.skipped();
  return verdictFrom("categorifiedChoice", frag.certified() + frag.counterexamples(), std::move(failures),
                     std::move(w));
}

AuditEntry auditExtensivity(const Context& ctx) {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  const std::size_t n = head(ctx, 8);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const CorpusItem& a = ctx.corpus[i];
      const CorpusItem& b = ctx.corpus[j];
      const CatCoproduct s = coproductCat(a.category, b.category);
      const CatPullback meet = pullbackCat(s.inj0, s.inj1);
      ++checks;
      if (meet.object.C0().size != 0 || meet.object.C1().size != 0 || !isFullMono(s.inj0) ||
          !isFullMono(s.inj1)) {
        failures.push_back("injections of " + a.name + " + " + b.name);
      }
    }
  }
  // Pulling the injections back along h + h : X + X -> B + B splits the domain.
  for (const InternalFunctor& h : ctx.functors) {
    const CatCoproduct sx = coproductCat(h.dom(), h.dom());
    const CatCoproduct sb = coproductCat(h.cod(), h.cod());
    const InternalFunctor sum =
        sx.copair(composeFunctors(sb.inj0, h), composeFunctors(sb.inj1, h));
    const CatPullback left = pullbackCat(sum, sb.inj0);
    const CatPullback right = pullbackCat(sum, sb.inj1);
    ++checks;
    if (left.object.C0().size != h.dom().C0().size || left.object.C1().size != h.dom().C1().size ||
        right.object.C0().size != h.dom().C0().size || right.object.C1().size != h.dom().C1().size) {
      failures.push_back("pullback along a sum of sampled functors");
    }
  }
  return verdictFrom("extensivity", checks, std::move(failures), ordered_json::object());
}

AuditEntry auditBoolean() {
  const bool ok = isBoolean();
  return AuditEntry{"boolean", ok ? Verdict::VerifiedAtScale : Verdict::Refuted,
                    ok ? "both endpoint classifiers are bijective on objects"
                       : "an endpoint classifier is not bijective on objects",
                    ordered_json::object()};
}

AuditEntry auditTwoValued() {
  const TwoValuedReport r = isTwoValued();
  ordered_json w;
  w["functors"] = r.functorCount;
  w["arrows"] = r.arrowCount;
  w["allInvertible"] = r.allInvertible;
  w["freeLivingIsomorphism"] = r.freeLivingIsomorphism;
  return AuditEntry{"twoValued", r.twoValued() ? Verdict::VerifiedAtScale : Verdict::Refuted,
                    std::to_string(r.functorCount) + " points of indisc(Omega)", std::move(w)};
}

}  // namespace

AuditReport runAudit(const AuditConfig& config) {
  AuditReport report;
  report.config = config;
  const std::vector<CorpusItem> corpus = generateCorpus(config.corpus);
  report.corpusSize = corpus.size();
  std::mt19937_64 rng(config.corpus.seed + 1);
  Context ctx{config, corpus, {}};
  if (!corpus.empty()) ctx.functors = sampleFunctors(corpus, rng, config.functorSamples, config.sizeBound);

  for (const std::string& axiom : auditAxioms()) {
    if (corpus.empty()) {
      report.entries.push_back({axiom, Verdict::Skipped, "empty corpus", ordered_json::object()});
      continue;
    }
    if (!config.suites.empty() && !config.suites.count(axiom)) {
      report.entries.push_back({axiom, Verdict::Skipped, "suite not selected", ordered_json::object()});
      continue;
    }
    if (axiom == "finiteLimits") report.entries.push_back(auditFiniteLimits(ctx));
    else if (axiom == "cartesianClosed") report.entries.push_back(auditCartesianClosed(ctx));
    else if (axiom == "wellPointed2") report.entries.push_back(auditWellPointed(ctx));
    else if (axiom == "nno") report.entries.push_back(auditNNO(ctx));
    else if (axiom == "fullSubobjectClassifier") report.entries.push_back(auditClassifier(ctx));
    else if (axiom == "categorifiedChoice") report.entries.push_back(auditChoice(ctx, rng));
    else if (axiom == "extensivity") report.entries.push_back(auditExtensivity(ctx));
    else if (axiom == "boolean") report.entries.push_back(auditBoolean());
    else if (axiom == "twoValued") report.entries.push_back(auditTwoValued());
  }
  return report;
}

}  // namespace icat
