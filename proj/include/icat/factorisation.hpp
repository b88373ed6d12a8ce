#pragma once

// Orthogonal factorisation systems on finite sets, lifted to internal
// categories: (L-on-objects, R-on-objects and fully faithful).

#include <functional>
#include <string>
#include <utility>

#include "icat/internal.hpp"

namespace icat {

/// A factorisation system (L, R) on finite sets.
struct BaseOFS {
  std::string name;
  std::function<bool(const FinMap&)> inLeft;
  std::function<bool(const FinMap&)> inRight;
  /// f = r . l with l in L and r in R, returned as (l, r).
  std::function<std::pair<FinMap, FinMap>(const FinMap&)> factor;
  /// The unique u with u . s = p and f . u = q, for s in L, f in R and f . p = q . s.
  std::function<FinMap(const FinMap& s, const FinMap& f, const FinMap& p, const FinMap& q)> lift;
};

/// (surjections, injections); the image is ordered by codomain index.
BaseOFS epiMono();
/// (bijections, all maps); factors f as f . identity.
BaseOFS isoAll();

struct LiftedFactorisation {
  InternalCategory middle;
  InternalFunctor left;
  InternalFunctor right;
};

/// f = right . left, with middle arrows the pullback of (d0, d1) along r0 x r0.
LiftedFactorisation factorInternal(const InternalFunctor& f, const BaseOFS& ofs);

/// The unique u : B -> X with f . u = q and u . s = p, for the square
///
///     A --p--> X
///     s        f
///     B --q--> Y
///
/// NotInClass if s is not L-on-objects or f is not R-on-objects and fully
/// faithful; NonCommuting if f . p != q . s.
InternalFunctor liftSquare(const InternalFunctor& s, const InternalFunctor& f,
                           const InternalFunctor& p, const InternalFunctor& q, const BaseOFS& ofs);

/// Given alphaBar : p0 => p1 and betaBar : q0 => q1 with f . alphaBar = betaBar . s,
/// the unique gamma : u0 => u1 between the lifts with f . gamma = betaBar and
/// gamma . s = alphaBar.
InternalNatTrans liftTwoCell(const InternalFunctor& s, const InternalFunctor& f,
                             const InternalNatTrans& alphaBar, const InternalNatTrans& betaBar,
                             const BaseOFS& ofs);

/// Left orthogonal to every full monomorphism; over finite sets this is
/// exactly being surjective on objects.
bool isAcute(const InternalFunctor& f);

}  // namespace icat
