#include "icat/corpus.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <optional>
#include <tuple>

#include "icat/limits2d.hpp"
#include "icat/transfer.hpp"

namespace icat {

namespace {
constexpr Index npos = static_cast<Index>(-1);
}  // namespace

std::string_view constructorName(Constructor c) {
  switch (c) {
    case Constructor::FreeOnDAG: return "freeOnDAG";
    case Constructor::MonoidDelooping: return "monoidDelooping";
    case Constructor::Preorder: return "preorder";
    case Constructor::Product: return "product";
    case Constructor::Coproduct: return "coproduct";
    case Constructor::Disc: return "disc";
    case Constructor::Indisc: return "indisc";
    case Constructor::Opposite: return "opposite";
  }
  return "unknown";
}

const std::vector<Constructor>& allConstructors() {
  static const std::vector<Constructor> all = {
      Constructor::FreeOnDAG, Constructor::MonoidDelooping, Constructor::Preorder,
      Constructor::Product,   Constructor::Coproduct,       Constructor::Disc,
      Constructor::Indisc,    Constructor::Opposite};
  return all;
}

InternalCategory freeCategory(std::size_t objects, const std::vector<std::pair<Index, Index>>& edges) {
  for (const auto& [s, t] : edges) {
    if (s >= t || t >= objects) fail(ErrorKind::ShapeMismatch, "free category needs edges s -> t with s < t");
  }
  struct Path {
    Index source, target;
    std::vector<Index> edges;
  };
  std::vector<Path> paths;
  std::function<void(Path)> extend = [&](Path p) {
    paths.push_back(p);
    for (Index e = 0; e < edges.size(); ++e) {
      if (edges[e].first != p.target) continue;
      Path q = p;
      q.target = edges[e].second;
      q.edges.push_back(e);
      extend(std::move(q));
    }
  };
  for (Index x = 0; x < objects; ++x) extend(Path{x, x, {}});
  std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    return std::tie(a.source, a.target, a.edges) < std::tie(b.source, b.target, b.edges);
  });
  std::map<std::vector<Index>, Index> byEdges;
  std::vector<Index> identities(objects);
  std::vector<Index> d0(paths.size()), d1(paths.size());
  for (Index k = 0; k < paths.size(); ++k) {
    d0[k] = paths[k].target;
    d1[k] = paths[k].source;
    if (paths[k].edges.empty()) identities[paths[k].source] = k;
    else byEdges[paths[k].edges] = k;
  }
  const FinObj c0(objects), c1(paths.size());
  return makeCategory(FinMap(c1, c0, d0), FinMap(c1, c0, d1), FinMap(c0, c1, identities),
                      [&](Index u, Index v) {
                        if (paths[v].edges.empty()) return u;
                        if (paths[u].edges.empty()) return v;
                        std::vector<Index> joined = paths[v].edges;
                        joined.insert(joined.end(), paths[u].edges.begin(), paths[u].edges.end());
                        return byEdges.at(joined);
                      });
}

InternalCategory deloop(std::size_t size, Index unit, const std::vector<std::vector<Index>>& table) {
  const FinObj arrows(size);
  return makeCategory(FinMap::toTerminal(arrows), FinMap::toTerminal(arrows), FinMap::point(arrows, unit),
                      [&](Index u, Index v) { return table[u][v]; });
}

InternalCategory monogenicMonoid(std::size_t index, std::size_t period) {
  if (period == 0) fail(ErrorKind::ShapeMismatch, "monogenic monoid needs a positive period");
  const std::size_t n = index + period;
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index k = a + b;
      table[a][b] = k < n ? k : index + (k - index) % period;
    }
  }
  return deloop(n, 0, table);
}

InternalCategory preorder(std::vector<std::vector<bool>> related) {
  const std::size_t n = related.size();
  for (Index x = 0; x < n; ++x) related[x][x] = true;
  for (Index k = 0; k < n; ++k)
    for (Index s = 0; s < n; ++s)
      for (Index t = 0; t < n; ++t)
        if (related[s][k] && related[k][t]) related[s][t] = true;
  std::vector<Index> d0, d1;
  std::map<std::pair<Index, Index>, Index> arrowFor;
  for (Index s = 0; s < n; ++s) {
    for (Index t = 0; t < n; ++t) {
      if (!related[s][t]) continue;
      arrowFor[{s, t}] = d0.size();
      d0.push_back(t);
      d1.push_back(s);
    }
  }
  const FinObj c0(n), c1(d0.size());
  std::vector<Index> ids(n);
  for (Index x = 0; x < n; ++x) ids[x] = arrowFor.at({x, x});
  return makeCategory(FinMap(c1, c0, d0), FinMap(c1, c0, d1), FinMap(c0, c1, ids),
                      [&](Index u, Index v) { return arrowFor.at({d1[v], d0[u]}); });
}

InternalCategory opposite(const InternalCategory& c) {
  return makeCategory(c.d1(), c.d0(), c.i(), [&](Index u, Index v) { return c.compose(v, u); });
}

InternalFunctor fullSubcategoryInclusion(const InternalCategory& b, const std::vector<Index>& objects) {
  std::vector<Index> position(b.C0().size, npos);
  for (Index k = 0; k < objects.size(); ++k) {
    if (objects[k] >= b.C0().size || (k > 0 && objects[k] <= objects[k - 1])) {
      fail(ErrorKind::ShapeMismatch, "subcategory objects must be increasing and in range");
    }
    position[objects[k]] = k;
  }
  std::vector<Index> arrows, d0, d1, local(b.C1().size, npos);
  for (Index e = 0; e < b.C1().size; ++e) {
    if (position[b.source(e)] == npos || position[b.target(e)] == npos) continue;
    local[e] = arrows.size();
    arrows.push_back(e);
    d0.push_back(position[b.target(e)]);
    d1.push_back(position[b.source(e)]);
  }
  const FinObj a0(objects.size()), a1(arrows.size());
  std::vector<Index> ids(objects.size());
  for (Index k = 0; k < objects.size(); ++k) ids[k] = local[b.identity(objects[k])];
  InternalCategory a = makeCategory(FinMap(a1, a0, d0), FinMap(a1, a0, d1), FinMap(a0, a1, ids),
                                    [&](Index u, Index v) { return local[b.compose(arrows[u], arrows[v])]; });
  return InternalFunctor(a, b, FinMap(a0, b.C0(), objects), FinMap(a1, b.C1(), arrows));
}

InternalFunctor fullyFaithfulCover(const InternalCategory& b, const FinMap& e0) {
  if (!(e0.cod() == b.C0())) fail(ErrorKind::DomainMismatch, "cover must land in the objects of B");
  const std::size_t n = e0.dom().size;
  struct Arrow {
    Index over, target, source;
  };
  std::vector<Arrow> arrows;
  std::map<std::tuple<Index, Index, Index>, Index> index;
  for (Index e = 0; e < b.C1().size; ++e) {
    for (Index t = 0; t < n; ++t) {
      if (e0(t) != b.target(e)) continue;
      for (Index s = 0; s < n; ++s) {
        if (e0(s) != b.source(e)) continue;
        index[{e, t, s}] = arrows.size();
        arrows.push_back({e, t, s});
      }
    }
  }
  const FinObj a0(n), a1(arrows.size());
  std::vector<Index> d0, d1, over, ids(n);
  for (const Arrow& a : arrows) {
    d0.push_back(a.target);
    d1.push_back(a.source);
    over.push_back(a.over);
  }
  for (Index x = 0; x < n; ++x) ids[x] = index.at({b.identity(e0(x)), x, x});
  InternalCategory a = makeCategory(
      FinMap(a1, a0, d0), FinMap(a1, a0, d1), FinMap(a0, a1, ids), [&](Index u, Index v) {
        return index.at({b.compose(arrows[u].over, arrows[v].over), arrows[u].target, arrows[v].source});
      });
  return InternalFunctor(a, b, e0, FinMap(a1, b.C1(), over));
}

namespace {

Index pick(std::mt19937_64& rng, std::size_t n) { return static_cast<Index>(rng() % n); }

struct Candidate {
  std::string name;
  InternalCategory category;
};

std::optional<Candidate> build(Constructor c, const CorpusSpec& spec, std::mt19937_64& rng,
                               const std::vector<CorpusItem>& earlier) {
  const std::size_t maxObj = spec.maxObjects;
  switch (c) {
    case Constructor::Disc: {
      const std::size_t n = pick(rng, maxObj + 1);
      return Candidate{"disc(" + std::to_string(n) + ")", disc(FinObj(n))};
    }
    case Constructor::Indisc: {
      const std::size_t n = pick(rng, maxObj + 1);
      return Candidate{"indisc(" + std::to_string(n) + ")", indisc(FinObj(n))};
    }
    case Constructor::Preorder: {
      const std::size_t n = pick(rng, maxObj + 1);
      std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
      std::string bits;
      for (Index s = 0; s < n; ++s)
        for (Index t = 0; t < n; ++t)
          if (s != t && pick(rng, 3) == 0) {
            rel[s][t] = true;
            bits += std::to_string(s) + "<=" + std::to_string(t) + ";";
          }
      return Candidate{"preorder(" + std::to_string(n) + ":" + bits + ")", preorder(rel)};
    }
    case Constructor::FreeOnDAG: {
      const std::size_t n = pick(rng, maxObj + 1);
      std::vector<std::pair<Index, Index>> edges;
      std::string text;
      if (n >= 2) {
        const std::size_t count = pick(rng, n + 1);
        for (Index k = 0; k < count; ++k) {
          Index s = pick(rng, n), t = pick(rng, n);
          if (s == t) continue;
          if (s > t) std::swap(s, t);
          edges.emplace_back(s, t);
          text += std::to_string(s) + "->" + std::to_string(t) + ";";
        }
      }
      return Candidate{"free(" + std::to_string(n) + ":" + text + ")", freeCategory(n, edges)};
    }
    case Constructor::MonoidDelooping: {
      if (maxObj == 0) return std::nullopt;
      if (pick(rng, 4) == 0 && spec.maxArrows >= 4) {
        // Endomaps of {0, 1}: constants 0, 1, identity, swap; element u.v = u after v.
        const std::vector<std::vector<Index>> maps = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
        std::vector<std::vector<Index>> table(4, std::vector<Index>(4));
        for (Index u = 0; u < 4; ++u)
          for (Index v = 0; v < 4; ++v) {
            const std::vector<Index> uv = {maps[u][maps[v][0]], maps[u][maps[v][1]]};
            table[u][v] = static_cast<Index>(std::find(maps.begin(), maps.end(), uv) - maps.begin());
          }
        return Candidate{"endo(2)", deloop(4, 2, table)};
      }
      const std::size_t limit = std::max<std::size_t>(spec.maxArrows, 1);
      const std::size_t period = 1 + pick(rng, limit);
      const std::size_t index = pick(rng, limit - period + 1);
      return Candidate{"monogenic(" + std::to_string(index) + "," + std::to_string(period) + ")",
                       monogenicMonoid(index, period)};
    }
    case Constructor::Product:
    case Constructor::Coproduct: {
      if (earlier.empty()) return std::nullopt;
      const Index i = pick(rng, earlier.size()), j = pick(rng, earlier.size());
      const InternalCategory& a = earlier[i].category;
      const InternalCategory& b = earlier[j].category;
      const bool prod = c == Constructor::Product;
      if (prod ? a.C1().size * b.C1().size > spec.maxArrows : a.C1().size + b.C1().size > spec.maxArrows) {
        return std::nullopt;
      }
      InternalCategory out = prod ? productCat(a, b).object : coproductCat(a, b).object;
      return Candidate{std::string(prod ? "product(" : "coproduct(") + earlier[i].name + "," +
                           earlier[j].name + ")",
                       std::move(out)};
    }
    case Constructor::Opposite: {
      if (earlier.empty()) return std::nullopt;
      const Index i = pick(rng, earlier.size());
      return Candidate{"opposite(" + earlier[i].name + ")", opposite(earlier[i].category)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<CorpusItem> generateCorpus(const CorpusSpec& spec) {
  std::vector<CorpusItem> out;
  const std::vector<Constructor> enabled(spec.enabled.begin(), spec.enabled.end());
  if (enabled.empty() || spec.count == 0) return out;
  std::mt19937_64 rng(spec.seed);
  const std::size_t attempts = 50 * spec.count;
  for (std::size_t k = 0; k < attempts && out.size() < spec.count; ++k) {
    const Constructor c = enabled[pick(rng, enabled.size())];
    std::optional<Candidate> cand;
    try {
      cand = build(c, spec, rng, out);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeBound) throw;
    }
    if (!cand) continue;
    const InternalCategory& cat = cand->category;
    if (cat.C0().size > spec.maxObjects || cat.C1().size > spec.maxArrows) continue;
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const CorpusItem& item) { return item.category == cat; });
    if (seen) continue;
    out.push_back(CorpusItem{std::move(cand->name), std::move(cand->category)});
  }
  return out;
}

std::vector<InternalFunctor> sampleFunctors(const std::vector<CorpusItem>& corpus,
                                            std::mt19937_64& rng, std::size_t count,
                                            std::size_t bound) {
  std::vector<InternalFunctor> out;
  if (corpus.empty()) return out;
  const std::size_t attempts = 20 * count;
  for (std::size_t k = 0; k < attempts && out.size() < count; ++k) {
    const InternalCategory& a = corpus[pick(rng, corpus.size())].category;
    const InternalCategory& b = corpus[pick(rng, corpus.size())].category;
    std::vector<InternalFunctor> all;
    try {
      all = allFunctors(a, b, bound);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeBound) throw;
      continue;
    }
    if (all.empty()) continue;
    out.push_back(all[pick(rng, all.size())]);
  }
  return out;
}

}  // namespace icat
