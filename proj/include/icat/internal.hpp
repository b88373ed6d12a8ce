#pragma once

// Categories, functors and natural transformations internal to finite sets,
// and the 2-category operations on them.
//
// Orientation, fixed everywhere: d1 is the source assigner and d0 the target
// assigner. A composable pair (u, v) has d1(u) == d0(v) and m(u, v) = u . v.
// A 2-cell alpha: f => g has components alpha_x : f(x) -> g(x), i.e.
// d1 . alpha == f0 and d0 . alpha == g0.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "icat/finset.hpp"

namespace icat {

struct Violation {
  std::string axiom;
  Index witness;
  std::string detail;
};

/// Every violated axiom with a concrete witness index; empty means valid.
class ValidationReport {
 public:
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(std::string axiom, Index witness, std::string detail = {});
  void merge(const ValidationReport& other, const std::string& prefix);
  bool mentions(const std::string& axiom) const;
  std::string summary() const;

 private:
  std::vector<Violation> violations_;
};

class InternalCategory {
 public:
  InternalCategory(FinMap d0, FinMap d1, FinMap i, FinMap m);

  const FinObj& C0() const { return d0_.cod(); }
  const FinObj& C1() const { return d0_.dom(); }
  const FinMap& d0() const { return d0_; }
  const FinMap& d1() const { return d1_; }
  const FinMap& i() const { return i_; }
  const FinMap& m() const { return m_; }

  Index target(Index a) const { return d0_(a); }
  Index source(Index a) const { return d1_(a); }
  Index identity(Index x) const { return i_(x); }

  /// C2: pairs (u, v) with d1(u) == d0(v), lexicographic.
  const ChosenLimit& composablePairs() const { return *pairs_; }
  /// C3: triples (u, v, w) with d1(u) == d0(v), d1(v) == d0(w), lexicographic.
  ChosenLimit composableTriples() const;

  /// u . v; NonCommuting when the pair is not composable.
  Index compose(Index u, Index v) const { return m_(pairs_->indexOf({u, v})); }

  friend bool operator==(const InternalCategory& a, const InternalCategory& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.i_ == b.i_ && a.m_ == b.m_;
  }

 private:
  FinMap d0_, d1_, i_, m_;
  std::shared_ptr<const ChosenLimit> pairs_;  // derived from (d0, d1)
};

class InternalFunctor {
 public:
  InternalFunctor(InternalCategory dom, InternalCategory cod, FinMap f0, FinMap f1);

  const InternalCategory& dom() const { return dom_; }
  const InternalCategory& cod() const { return cod_; }
  const FinMap& f0() const { return f0_; }
  const FinMap& f1() const { return f1_; }

  /// The induced map on composable pairs; NonCommuting if f1 breaks composability.
  FinMap f2() const;

  friend bool operator==(const InternalFunctor& a, const InternalFunctor& b) = default;

 private:
  InternalCategory dom_;
  InternalCategory cod_;
  FinMap f0_;
  FinMap f1_;
};

class InternalNatTrans {
 public:
  InternalNatTrans(InternalFunctor src, InternalFunctor tgt, FinMap alpha);

  const InternalFunctor& src() const { return src_; }
  const InternalFunctor& tgt() const { return tgt_; }
  const FinMap& alpha() const { return alpha_; }

  friend bool operator==(const InternalNatTrans& a, const InternalNatTrans& b) = default;

 private:
  InternalFunctor src_;
  InternalFunctor tgt_;
  FinMap alpha_;
};

/// Builds m by evaluating comp(u, v) = u . v on every composable pair.
InternalCategory makeCategory(FinMap d0, FinMap d1, FinMap i,
                              const std::function<Index(Index, Index)>& comp);

ValidationReport validateCategory(const InternalCategory& c);
ValidationReport validateFunctor(const InternalFunctor& f);
ValidationReport validateNatTrans(const InternalNatTrans& t);

InternalFunctor idFunctor(const InternalCategory& c);
/// g after f.
InternalFunctor composeFunctors(const InternalFunctor& g, const InternalFunctor& f);

/// Identity 2-cell on f, with assigner i . f0.
InternalNatTrans identityTrans(const InternalFunctor& f);
/// beta after alpha (alpha: f => g, beta: g => h).
InternalNatTrans vcomp(const InternalNatTrans& beta, const InternalNatTrans& alpha);
/// h . alpha, assigner h1 . alpha.
InternalNatTrans whiskerLeft(const InternalFunctor& h, const InternalNatTrans& alpha);
/// alpha . k, assigner alpha . k0.
InternalNatTrans whiskerRight(const InternalNatTrans& alpha, const InternalFunctor& k);
/// Horizontal composite of beta: h => k (B -> C) with alpha: f => g (A -> B).
InternalNatTrans hcomp(const InternalNatTrans& beta, const InternalNatTrans& alpha);

bool isFaithful(const InternalFunctor& f);
bool isFullyFaithful(const InternalFunctor& f);
bool isMonoFunctor(const InternalFunctor& f);
bool isFullMono(const InternalFunctor& f);
bool isEpiOnObjects(const InternalFunctor& f);
bool isIsoOnObjects(const InternalFunctor& f);
/// Valid functor with both components bijective.
bool isIsomorphism(const InternalFunctor& f);
/// Every component of the 2-cell is an invertible arrow.
bool isInvertible(const InternalNatTrans& t);

/// (d0, d1): C1 -> C0 x C0 into the chosen product.
FinMap endpoints(const InternalCategory& c);

/// Inverts the comparison A1 -> B1 x_{B0 x B0} (A0 x A0) of a fully faithful functor.
class FullyFaithfulLifter {
 public:
  explicit FullyFaithfulLifter(const InternalFunctor& f);

  /// The unique arrow t <- s of the domain over the codomain arrow b.
  /// FiberNotSingleton when there is none or more than one.
  Index lift(Index b, Index target, Index source) const;

 private:
  ChosenLimit fibre_;            // pullback of (d0,d1) along f0 x f0
  std::vector<Index> arrowFor_;  // fibre index -> arrow, or npos
  ChosenLimit sourcePairs_;      // chosen A0 x A0
};

/// Search for an invertible functor A -> B (used for oracle comparisons).
std::optional<InternalFunctor> findIsomorphism(const InternalCategory& a,
                                               const InternalCategory& b);

}  // namespace icat
