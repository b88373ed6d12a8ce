#pragma once

// The axiom checklist for Cat(FinSet): natural numbers objects (refuted),
// generators and 2-well-pointedness, and the aggregate report.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "icat/corpus.hpp"
#include "icat/internal.hpp"

namespace icat {

// ---------------------------------------------------------------------------
// Natural numbers objects

/// 1 --z--> N --s--> N.
struct NNOCandidate {
  FinObj n;
  FinMap z;
  FinMap s;
};

enum class RecursorOutcome { UniqueRecursor, NoRecursor, MultipleRecursors };

std::string_view outcomeName(RecursorOutcome o);

struct RecursorResult {
  RecursorOutcome outcome;
  /// Number of maps u : N -> X with u z = f and u s = g u, saturated at 2.
  std::size_t count;
  /// Some solution, present unless outcome is NoRecursor.
  std::optional<FinMap> recursor;
};

/// Exact count of recursors, by solving along the functional graph of s:
/// every cycle needs a g-periodic value, every tree node a g-preimage of its
/// parent's value. ShapeMismatch on ill-typed data.
RecursorResult recursorSearch(const NNOCandidate& c, const FinObj& x, const FinMap& f, const FinMap& g);

/// Every (N, z, s) with 1 <= |N| <= maxSize, by size, then z, then s lexicographically.
std::vector<NNOCandidate> enumerateNNOCandidates(std::size_t maxSize);

struct NNOCounterexample {
  FinObj x;
  FinMap f;
  FinMap g;
  RecursorOutcome outcome;
};

struct NNORefutation {
  NNOCandidate candidate;
  std::optional<NNOCounterexample> counterexample;
};

/// For every enumerated candidate, the first (X, f, g) (by |X|, then f, then g)
/// without a unique recursor, with |X| <= maxSize + 1.
std::vector<NNORefutation> refuteFiniteNNO(std::size_t maxSize);

struct TwoDimensionalNNOVerdict {
  RecursorResult source;  // u : disc(N) -> X from (f, g)
  RecursorResult target;  // u' from (f', g)
  RecursorResult cell;    // phi : N -> X1 with phi z = alpha and g1 phi = phi s
  /// The 2-cell u => u' given by phi, when both lifts and phi are unique.
  std::optional<InternalNatTrans> transformation;
};

/// The candidate disc(N) tested against f, f' : 1 -> X, g : X -> X and
/// alphaBar : f => f'. ShapeMismatch unless the data fit together.
TwoDimensionalNNOVerdict twoDimensionalNNOCheck(const NNOCandidate& c, const InternalFunctor& f,
                                                const InternalFunctor& fPrime,
                                                const InternalFunctor& g,
                                                const InternalNatTrans& alphaBar);

// ---------------------------------------------------------------------------
// Generators

struct GeneratorVerdict {
  std::size_t pairs = 0;     // pairs examined
  std::size_t distinct = 0;  // of which f != g
  std::vector<Index> failures;  // distinct pairs no probe separates
  bool ok() const { return failures.empty(); }
};

/// A functor h out of a family member with f . h != g . h, or nullopt when
/// f == g or none exists. A member isomorphic to 2_E is probed at an arrow
/// where f1 and g1 differ; any other member is searched exhaustively.
std::optional<InternalFunctor> separatingProbe(const std::vector<InternalCategory>& family,
                                               const InternalFunctor& f, const InternalFunctor& g,
                                               std::size_t bound = kDefaultSizeBound);

GeneratorVerdict generatorCheck(const std::vector<InternalCategory>& family,
                                const std::vector<std::pair<InternalFunctor, InternalFunctor>>& pairs,
                                std::size_t bound = kDefaultSizeBound);

/// Parallel 2-cells are compared as functors into the power by 2 of the codomain.
GeneratorVerdict generatorCheckCells(
    const std::vector<InternalCategory>& family,
    const std::vector<std::pair<InternalNatTrans, InternalNatTrans>>& pairs,
    std::size_t bound = kDefaultSizeBound);

/// The diagonal A -> A x A equalises (x, y) |-> (x, x, y) and (x, y) |-> (x, y, y).
bool diagonalIsEqualiser(const FinObj& a);

struct WellPointedVerdict {
  GeneratorVerdict functors;
  GeneratorVerdict cells;
  bool componentsOfTwoTerminal = false;  // Pi0(2_E) has one element
  bool equaliserLemma = false;           // for every base size 0..maxBase
  bool ok() const { return functors.ok() && cells.ok() && componentsOfTwoTerminal && equaliserLemma; }
};

WellPointedVerdict twoWellPointedCheck(
    const std::vector<std::pair<InternalFunctor, InternalFunctor>>& pairs,
    const std::vector<std::pair<InternalNatTrans, InternalNatTrans>>& cellPairs,
    std::size_t maxBase = 5, std::size_t bound = kDefaultSizeBound);

// ---------------------------------------------------------------------------
// Aggregate report

enum class Verdict { VerifiedAtScale, Refuted, Skipped };

std::string_view verdictName(Verdict v);

struct AuditEntry {
  std::string axiom;
  Verdict verdict;
  std::string summary;
  nlohmann::ordered_json witness;  // counts, or a counterexample when refuted
};

struct AuditConfig {
  CorpusSpec corpus;
  std::size_t sizeBound = kDefaultSizeBound;
  std::size_t functorSamples = 40;
  std::size_t nnoMaxSize = 3;
  std::size_t baseMaxSize = 5;
  /// Axiom names to run; empty runs everything.
  std::set<std::string> suites;
};

struct AuditReport {
  AuditConfig config;
  std::size_t corpusSize = 0;
  std::vector<AuditEntry> entries;

  const AuditEntry* find(std::string_view axiom) const;
  /// Every entry verified or skipped, except nno which must be refuted.
  bool asExpected() const;
};

/// The axiom names in report order.
const std::vector<std::string>& auditAxioms();

AuditReport runAudit(const AuditConfig& config);

}  // namespace icat
