#pragma once

// A deliberately naive representation of finite categories, with its own
// validator and exhaustive enumerators. It only reads the raw tables of an
// internal category and shares no code with the internal-core algorithms, so
// it can serve as an independent check on them.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icat/internal.hpp"

namespace icat::oracle {

struct NaiveCategory {
  std::size_t objects = 0;
  std::vector<std::pair<Index, Index>> arrows;  // (source, target)
  std::vector<Index> identities;
  std::map<std::pair<Index, Index>, Index> composition;  // (g, f) -> g . f

  std::size_t arrowCount() const { return arrows.size(); }
  Index source(Index f) const { return arrows[f].first; }
  Index target(Index f) const { return arrows[f].second; }
  /// g . f; throws NonCommuting when the pair is not in the table.
  Index compose(Index g, Index f) const;
};

/// Problems with the ordinary category axioms; empty when valid.
std::vector<std::string> validateNaive(const NaiveCategory& c);

NaiveCategory oracleFromInternal(const InternalCategory& c);

struct NaiveFunctor {
  std::vector<Index> onObjects;
  std::vector<Index> onArrows;
  friend bool operator==(const NaiveFunctor&, const NaiveFunctor&) = default;
  friend auto operator<=>(const NaiveFunctor&, const NaiveFunctor&) = default;
};

struct NaiveTransformation {
  std::vector<Index> components;
  friend bool operator==(const NaiveTransformation&, const NaiveTransformation&) = default;
};

/// All functors A -> B by backtracking, ordered by (objects, arrows).
/// SizeBound when more than `bound` partial assignments are tried.
std::vector<NaiveFunctor> oracleFunctors(const NaiveCategory& a, const NaiveCategory& b,
                                         std::size_t bound = kDefaultSizeBound);
/// All natural transformations F => G, ordered by component table.
std::vector<NaiveTransformation> oracleNatTrans(const NaiveCategory& a, const NaiveCategory& b,
                                                const NaiveFunctor& f, const NaiveFunctor& g,
                                                std::size_t bound = kDefaultSizeBound);

/// The functor category [A, B]: objects are `functors`, arrow k is the
/// transformation cells[k] between functors source(k) and target(k).
struct NaiveFunctorCategory {
  NaiveCategory category;
  std::vector<NaiveFunctor> functors;
  std::vector<NaiveTransformation> cells;
};

NaiveFunctorCategory oracleFunctorCategory(const NaiveCategory& a, const NaiveCategory& b,
                                           std::size_t bound = kDefaultSizeBound);

/// The walking arrow 0 -> 1, arrows listed id0, a, id1.
NaiveCategory walkingArrow();

/// True iff the two maps are bijections that preserve source, target,
/// identities and composition.
bool isIsomorphism(const NaiveCategory& a, const NaiveCategory& b, const std::vector<Index>& onObjects,
                   const std::vector<Index>& onArrows);

// ---------------------------------------------------------------------------
// Comparisons with the internal constructions

struct Comparison {
  std::size_t internalObjects = 0, internalArrows = 0;
  std::size_t oracleObjects = 0, oracleArrows = 0;
  /// The decoded correspondence is an isomorphism of categories.
  bool isomorphic = false;
  bool match() const {
    return isomorphic && internalObjects == oracleObjects && internalArrows == oracleArrows;
  }
};

/// internalHom(x, y) against the functor category [x, y].
Comparison compareHom(const InternalCategory& x, const InternalCategory& y,
                      std::size_t bound = kDefaultSizeBound);
/// powerByTwo(a) against the functor category [2, a].
Comparison comparePower(const InternalCategory& a, std::size_t bound = kDefaultSizeBound);

}  // namespace icat::oracle
