#include "icat/oracle.hpp"

#include <algorithm>
#include <functional>

#include "icat/limits2d.hpp"

namespace icat::oracle {

Index NaiveCategory::compose(Index g, Index f) const {
  const auto it = composition.find({g, f});
  if (it == composition.end()) fail(ErrorKind::NonCommuting, "arrows are not composable");
  return it->second;
}

std::vector<std::string> validateNaive(const NaiveCategory& c) {
  std::vector<std::string> problems;
  const std::size_t n = c.arrowCount();
  auto say = [&](std::string s) { problems.push_back(std::move(s)); };
  if (c.identities.size() != c.objects) say("one identity per object is required");
  for (Index f = 0; f < n; ++f) {
    if (c.source(f) >= c.objects || c.target(f) >= c.objects) say("arrow " + std::to_string(f) + " has a bad endpoint");
  }
  if (!problems.empty()) return problems;
  for (Index x = 0; x < c.objects; ++x) {
    const Index e = c.identities[x];
    if (e >= n || c.source(e) != x || c.target(e) != x) say("identity of " + std::to_string(x) + " is not a loop on it");
  }
  if (!problems.empty()) return problems;
  for (Index g = 0; g < n; ++g) {
    for (Index f = 0; f < n; ++f) {
      const bool composable = c.source(g) == c.target(f);
      const auto it = c.composition.find({g, f});
      if (composable != (it != c.composition.end())) {
        say("composition table wrong at (" + std::to_string(g) + ", " + std::to_string(f) + ")");
        continue;
      }
      if (!composable) continue;
      const Index h = it->second;
      if (h >= n || c.source(h) != c.source(f) || c.target(h) != c.target(g)) {
        say("composite of (" + std::to_string(g) + ", " + std::to_string(f) + ") has wrong endpoints");
      }
    }
  }
  if (!problems.empty()) return problems;
  for (Index f = 0; f < n; ++f) {
    if (c.compose(c.identities[c.target(f)], f) != f || c.compose(f, c.identities[c.source(f)]) != f) {
      say("unit law fails at " + std::to_string(f));
    }
  }
  for (const auto& [gf, h] : c.composition) {
    const Index f = gf.second;
    for (Index e = 0; e < n; ++e) {
      if (c.source(f) != c.target(e)) continue;
      const Index left = c.compose(h, e);
      const Index right = c.compose(gf.first, c.compose(f, e));
      if (left != right) say("associativity fails");
    }
  }
  return problems;
}

NaiveCategory oracleFromInternal(const InternalCategory& c) {
  NaiveCategory out;
  out.objects = c.C0().size;
  const std::vector<Index>& d0 = c.d0().table();
  const std::vector<Index>& d1 = c.d1().table();
  for (Index f = 0; f < d0.size(); ++f) out.arrows.emplace_back(d1[f], d0[f]);
  out.identities = c.i().table();
  // The m table lists composable (u, v), d1 u = d0 v, lexicographically.
  const std::vector<Index>& m = c.m().table();
  Index k = 0;
  for (Index u = 0; u < d0.size(); ++u) {
    for (Index v = 0; v < d0.size(); ++v) {
      if (d1[u] != d0[v]) continue;
      if (k >= m.size()) fail(ErrorKind::ShapeMismatch, "composition table is too short");
      out.composition[{u, v}] = m[k++];
    }
  }
  if (k != m.size()) fail(ErrorKind::ShapeMismatch, "composition table is too long");
  return out;
}

namespace {

void tick(std::size_t& nodes, std::size_t bound) {
  if (++nodes > bound) fail(ErrorKind::SizeBound, "oracle enumeration exceeds bound " + std::to_string(bound));
}

}  // namespace

std::vector<NaiveFunctor> oracleFunctors(const NaiveCategory& a, const NaiveCategory& b, std::size_t bound) {
  std::vector<NaiveFunctor> out;
  std::size_t nodes = 0;
  const std::size_t na = a.arrowCount();
  // Composable pairs of A grouped by the largest arrow index involved.
  std::vector<std::vector<std::pair<Index, Index>>> pairsDueAt(na);
  for (const auto& [gf, h] : a.composition) {
    pairsDueAt[std::max({gf.first, gf.second, h})].push_back(gf);
  }
  NaiveFunctor f{std::vector<Index>(a.objects), std::vector<Index>(na)};

  std::function<void(Index)> arrowsFrom = [&](Index k) {
    if (k == na) {
      out.push_back(f);
      return;
    }
    for (Index candidate = 0; candidate < b.arrowCount(); ++candidate) {
      if (b.source(candidate) != f.onObjects[a.source(k)] || b.target(candidate) != f.onObjects[a.target(k)]) continue;
      tick(nodes, bound);
      f.onArrows[k] = candidate;
      bool ok = true;
      for (Index x = 0; x < a.objects && ok; ++x) {
        if (a.identities[x] == k) ok = candidate == b.identities[f.onObjects[x]];
      }
      for (const auto& [g, h] : pairsDueAt[k]) {
        if (!ok) break;
        ok = f.onArrows[a.compose(g, h)] == b.compose(f.onArrows[g], f.onArrows[h]);
      }
      if (ok) arrowsFrom(k + 1);
    }
  };
  std::function<void(Index)> objectsFrom = [&](Index x) {
    if (x == a.objects) {
      arrowsFrom(0);
      return;
    }
    for (Index y = 0; y < b.objects; ++y) {
      tick(nodes, bound);
      f.onObjects[x] = y;
      objectsFrom(x + 1);
    }
  };
  objectsFrom(0);
  return out;
}

std::vector<NaiveTransformation> oracleNatTrans(const NaiveCategory& a, const NaiveCategory& b,
                                                const NaiveFunctor& f, const NaiveFunctor& g,
                                                std::size_t bound) {
  std::vector<NaiveTransformation> out;
  std::size_t nodes = 0;
  NaiveTransformation t{std::vector<Index>(a.objects)};
  std::function<void(Index)> from = [&](Index x) {
    if (x == a.objects) {
      out.push_back(t);
      return;
    }
    for (Index candidate = 0; candidate < b.arrowCount(); ++candidate) {
      if (b.source(candidate) != f.onObjects[x] || b.target(candidate) != g.onObjects[x]) continue;
      tick(nodes, bound);
      t.components[x] = candidate;
      bool natural = true;
      for (Index e = 0; e < a.arrowCount() && natural; ++e) {
        const Index s = a.source(e), u = a.target(e);
        if (std::max(s, u) != x) continue;
        natural = b.compose(g.onArrows[e], t.components[s]) == b.compose(t.components[u], f.onArrows[e]);
      }
      if (natural) from(x + 1);
    }
  };
  from(0);
  return out;
}

NaiveFunctorCategory oracleFunctorCategory(const NaiveCategory& a, const NaiveCategory& b, std::size_t bound) {
  NaiveFunctorCategory out;
  out.functors = oracleFunctors(a, b, bound);
  const std::size_t n = out.functors.size();
  out.category.objects = n;
  out.category.identities.assign(n, 0);
  std::map<std::tuple<Index, Index, std::vector<Index>>, Index> index;
  for (Index s = 0; s < n; ++s) {
    for (Index t = 0; t < n; ++t) {
      for (NaiveTransformation& cell : oracleNatTrans(a, b, out.functors[s], out.functors[t], bound)) {
        const Index k = out.cells.size();
        index[{s, t, cell.components}] = k;
        out.category.arrows.emplace_back(s, t);
        if (s == t) {
          bool identity = true;
          for (Index x = 0; x < a.objects; ++x)
            identity = identity && cell.components[x] == b.identities[out.functors[s].onObjects[x]];
          if (identity) out.category.identities[s] = k;
        }
        out.cells.push_back(std::move(cell));
        if (out.cells.size() > bound) fail(ErrorKind::SizeBound, "functor category exceeds bound");
      }
    }
  }
  for (Index g = 0; g < out.cells.size(); ++g) {
    for (Index f = 0; f < out.cells.size(); ++f) {
      if (out.category.source(g) != out.category.target(f)) continue;
      std::vector<Index> comps(a.objects);
      for (Index x = 0; x < a.objects; ++x) comps[x] = b.compose(out.cells[g].components[x], out.cells[f].components[x]);
      out.category.composition[{g, f}] = index.at({out.category.source(f), out.category.target(g), comps});
    }
  }
  return out;
}

NaiveCategory walkingArrow() {
  NaiveCategory c;
  c.objects = 2;
  c.arrows = {{0, 0}, {0, 1}, {1, 1}};
  c.identities = {0, 2};
  c.composition = {{{0, 0}, 0}, {{1, 0}, 1}, {{2, 1}, 1}, {{2, 2}, 2}};
  return c;
}

bool isIsomorphism(const NaiveCategory& a, const NaiveCategory& b, const std::vector<Index>& onObjects,
                   const std::vector<Index>& onArrows) {
  if (a.objects != b.objects || a.arrowCount() != b.arrowCount()) return false;
  if (onObjects.size() != a.objects || onArrows.size() != a.arrowCount()) return false;
  auto bijective = [](std::vector<Index> v, std::size_t n) {
    std::sort(v.begin(), v.end());
    for (Index k = 0; k < v.size(); ++k)
      if (v[k] != k) return false;
    return v.size() == n;
  };
  if (!bijective(onObjects, b.objects) || !bijective(onArrows, b.arrowCount())) return false;
  for (Index f = 0; f < a.arrowCount(); ++f) {
    if (b.source(onArrows[f]) != onObjects[a.source(f)] || b.target(onArrows[f]) != onObjects[a.target(f)]) return false;
  }
  for (Index x = 0; x < a.objects; ++x)
    if (onArrows[a.identities[x]] != b.identities[onObjects[x]]) return false;
  for (const auto& [gf, h] : a.composition)
    if (b.compose(onArrows[gf.first], onArrows[gf.second]) != onArrows[h]) return false;
  return true;
}

namespace {

/// Looks every internal object and arrow up in the oracle functor category.
Comparison correspond(const InternalCategory& carrier, const NaiveFunctorCategory& fc,
                      const std::function<NaiveFunctor(Index)>& object,
                      const std::function<NaiveTransformation(Index)>& arrow) {
  Comparison c;
  c.internalObjects = carrier.C0().size;
  c.internalArrows = carrier.C1().size;
  c.oracleObjects = fc.functors.size();
  c.oracleArrows = fc.cells.size();
  if (c.internalObjects != c.oracleObjects || c.internalArrows != c.oracleArrows) return c;

  std::map<NaiveFunctor, Index> objectIndex;
  for (Index k = 0; k < fc.functors.size(); ++k) objectIndex[fc.functors[k]] = k;
  std::map<std::tuple<Index, Index, std::vector<Index>>, Index> arrowIndex;
  for (Index k = 0; k < fc.cells.size(); ++k)
    arrowIndex[{fc.category.source(k), fc.category.target(k), fc.cells[k].components}] = k;

  std::vector<Index> onObjects(c.internalObjects), onArrows(c.internalArrows);
  for (Index k = 0; k < c.internalObjects; ++k) {
    const auto it = objectIndex.find(object(k));
    if (it == objectIndex.end()) return c;
    onObjects[k] = it->second;
  }
  for (Index k = 0; k < c.internalArrows; ++k) {
    const auto it = arrowIndex.find(
        {onObjects[carrier.source(k)], onObjects[carrier.target(k)], arrow(k).components});
    if (it == arrowIndex.end()) return c;
    onArrows[k] = it->second;
  }
  c.isomorphic = isIsomorphism(oracleFromInternal(carrier), fc.category, onObjects, onArrows);
  return c;
}

}  // namespace

Comparison compareHom(const InternalCategory& x, const InternalCategory& y, std::size_t bound) {
  const InternalHom hom = internalHom(x, y, bound);
  const NaiveFunctorCategory fc = oracleFunctorCategory(oracleFromInternal(x), oracleFromInternal(y), bound);
  return correspond(
      hom.carrier(), fc,
      [&](Index k) {
        const InternalFunctor f = hom.decodeFunctor(k);
        return NaiveFunctor{f.f0().table(), f.f1().table()};
      },
      [&](Index k) { return NaiveTransformation{hom.decodeTransformation(k).alpha().table()}; });
}

Comparison comparePower(const InternalCategory& a, std::size_t bound) {
  const PowerByTwo power = powerByTwo(a);
  const NaiveFunctorCategory fc = oracleFunctorCategory(walkingArrow(), oracleFromInternal(a), bound);
  return correspond(
      power.carrier, fc,
      [&](Index f) {
        return NaiveFunctor{{a.source(f), a.target(f)}, {a.identity(a.source(f)), f, a.identity(a.target(f))}};
      },
      [&](Index s) {
        return NaiveTransformation{{power.sourceProj.f1()(s), power.targetProj.f1()(s)}};
      });
}

}  // namespace icat::oracle
