#pragma once

// Small hand-transcribed categories for unit tests. These are written out
// directly from ordinary category descriptions, without using any library
// constructor beyond the raw InternalCategory record.

#include <functional>
#include <utility>
#include <vector>

#include "icat/internal.hpp"
#include "icat/oracle.hpp"

namespace testing_support {

using icat::FinMap;
using icat::FinObj;
using icat::Index;
using icat::InternalCategory;

inline FinMap map(std::size_t dom, std::size_t cod, std::vector<Index> t) {
  return FinMap(FinObj(dom), FinObj(cod), std::move(t));
}

/// Build an internal category from an arrow list (source, target), the
/// identity arrow of each object, and a composition rule comp(u, v) = u . v.
inline InternalCategory fromTables(std::size_t objects,
                                   const std::vector<std::pair<Index, Index>>& arrows,
                                   const std::vector<Index>& identities,
                                   const std::function<Index(Index, Index)>& comp) {
  const std::size_t n = arrows.size();
  std::vector<Index> d0(n), d1(n), m;
  for (Index a = 0; a < n; ++a) {
    d1[a] = arrows[a].first;
    d0[a] = arrows[a].second;
  }
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      if (d1[u] == d0[v]) m.push_back(comp(u, v));
  return InternalCategory(map(n, objects, d0), map(n, objects, d1),
                          map(objects, n, identities), map(m.size(), n, m));
}

/// The ordinary category 0 -> 1: arrows id0, a, id1.
inline InternalCategory walkingArrow() {
  return fromTables(2, {{0, 0}, {0, 1}, {1, 1}}, {0, 2}, [](Index u, Index v) {
    if (u == 0) return v;
    if (v == 0 || v == 2) return u;
    return Index{1};
  });
}

/// The chain 0 -> 1 -> 2 with all composites; arrows are pairs s <= t in lex order.
inline InternalCategory chain3() {
  std::vector<std::pair<Index, Index>> arrows;
  for (Index s = 0; s < 3; ++s)
    for (Index t = s; t < 3; ++t) arrows.emplace_back(s, t);
  auto find = [arrows](Index s, Index t) {
    for (Index a = 0; a < arrows.size(); ++a)
      if (arrows[a] == std::make_pair(s, t)) return a;
    return Index{0};
  };
  return fromTables(3, arrows, {find(0, 0), find(1, 1), find(2, 2)},
                    [=](Index u, Index v) { return find(arrows[v].first, arrows[u].second); });
}

inline InternalCategory discrete(std::size_t n) {
  std::vector<std::pair<Index, Index>> arrows;
  std::vector<Index> ids;
  for (Index x = 0; x < n; ++x) {
    arrows.emplace_back(x, x);
    ids.push_back(x);
  }
  return fromTables(n, arrows, ids, [](Index u, Index) { return u; });
}

/// The cyclic group of order n as a one-object category.
inline InternalCategory cyclic(std::size_t n) {
  std::vector<std::pair<Index, Index>> arrows(n, {0, 0});
  return fromTables(1, arrows, {0}, [n](Index u, Index v) { return (u + v) % n; });
}

/// Every functor a -> b, enumerated by the naive oracle rather than the library.
inline std::vector<icat::InternalFunctor> functorsByOracle(const InternalCategory& a,
                                                           const InternalCategory& b) {
  std::vector<icat::InternalFunctor> out;
  for (const auto& f : icat::oracle::oracleFunctors(icat::oracle::oracleFromInternal(a),
                                                    icat::oracle::oracleFromInternal(b))) {
    out.emplace_back(a, b, FinMap(a.C0(), b.C0(), f.onObjects), FinMap(a.C1(), b.C1(), f.onArrows));
  }
  return out;
}

/// Every 2-cell f => g, enumerated by the naive oracle.
inline std::vector<icat::InternalNatTrans> cellsByOracle(const icat::InternalFunctor& f,
                                                         const icat::InternalFunctor& g) {
  using icat::oracle::NaiveFunctor;
  const auto a = icat::oracle::oracleFromInternal(f.dom());
  const auto b = icat::oracle::oracleFromInternal(f.cod());
  std::vector<icat::InternalNatTrans> out;
  for (const auto& t : icat::oracle::oracleNatTrans(a, b, NaiveFunctor{f.f0().table(), f.f1().table()},
                                                    NaiveFunctor{g.f0().table(), g.f1().table()})) {
    out.emplace_back(f, g, FinMap(f.dom().C0(), f.cod().C1(), t.components));
  }
  return out;
}

}  // namespace testing_support
