#include "icat/limits2d.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace icat {

namespace {

void requireSame(const InternalCategory& a, const InternalCategory& b, const char* what) {
  if (!(a == b)) fail(ErrorKind::DomainMismatch, what);
}

}  // namespace

InternalCategory terminalCat() { return disc(terminal()); }

// ---------------------------------------------------------------------------
// Products and pullbacks

CatProduct productCat(const InternalCategory& a, const InternalCategory& b) {
  const ChosenLimit p0 = product(a.C0(), b.C0());
  const ChosenLimit p1 = product(a.C1(), b.C1());
  const InternalCategory obj = makeCategory(
      productMap(a.d0(), b.d0()), productMap(a.d1(), b.d1()), productMap(a.i(), b.i()),
      [&](Index u, Index v) {
        return p1.indexOf({a.compose(p1.component(u, 0), p1.component(v, 0)),
                           b.compose(p1.component(u, 1), p1.component(v, 1))});
      });
  return CatProduct{obj, InternalFunctor(obj, a, p0.projection(0), p1.projection(0)),
                    InternalFunctor(obj, b, p0.projection(1), p1.projection(1))};
}

InternalFunctor CatProduct::pair(const InternalFunctor& f, const InternalFunctor& g) const {
  requireSame(f.dom(), g.dom(), "pairing functors with different domains");
  requireSame(f.cod(), proj0.cod(), "first functor does not land in the first factor");
  requireSame(g.cod(), proj1.cod(), "second functor does not land in the second factor");
  const ChosenLimit p0 = product(f.cod().C0(), g.cod().C0());
  const ChosenLimit p1 = product(f.cod().C1(), g.cod().C1());
  return InternalFunctor(f.dom(), object, p0.mediate({f.f0(), g.f0()}),
                         p1.mediate({f.f1(), g.f1()}));
}

CatPullback pullbackCat(const InternalFunctor& f, const InternalFunctor& g) {
  requireSame(f.cod(), g.cod(), "pullback of functors with different codomains");
  const InternalCategory& a = f.dom();
  const InternalCategory& b = g.dom();
  const ChosenLimit l0 = pullback(f.f0(), g.f0());
  const ChosenLimit l1 = pullback(f.f1(), g.f1());
  auto levelMap = [&](const FinMap& ka, const FinMap& kb, const ChosenLimit& from,
                      const ChosenLimit& to) {
    return to.mediate({compose(ka, from.projection(0)), compose(kb, from.projection(1))});
  };
  const InternalCategory obj = makeCategory(
      levelMap(a.d0(), b.d0(), l1, l0), levelMap(a.d1(), b.d1(), l1, l0),
      levelMap(a.i(), b.i(), l0, l1), [&](Index u, Index v) {
        return l1.indexOf({a.compose(l1.component(u, 0), l1.component(v, 0)),
                           b.compose(l1.component(u, 1), l1.component(v, 1))});
      });
  return CatPullback{obj, InternalFunctor(obj, a, l0.projection(0), l1.projection(0)),
                     InternalFunctor(obj, b, l0.projection(1), l1.projection(1)), f, g};
}

InternalFunctor CatPullback::mediate(const InternalFunctor& p, const InternalFunctor& q) const {
  requireSame(p.dom(), q.dom(), "cone legs with different domains");
  const ChosenLimit l0 = pullback(left.f0(), right.f0());
  const ChosenLimit l1 = pullback(left.f1(), right.f1());
  return InternalFunctor(p.dom(), object, l0.mediate({p.f0(), q.f0()}),
                         l1.mediate({p.f1(), q.f1()}));
}

bool isPullbackCone(const InternalFunctor& p0, const InternalFunctor& p1,
                    const InternalFunctor& f, const InternalFunctor& g) {
  return isPullback(p0.f0(), p1.f0(), f.f0(), g.f0()) &&
         isPullback(p0.f1(), p1.f1(), f.f1(), g.f1());
}

// ---------------------------------------------------------------------------
// Coproducts and 2_E

CatCoproduct coproductCat(const InternalCategory& a, const InternalCategory& b) {
  const Coproduct s0 = coproduct(a.C0(), b.C0());
  const Coproduct s1 = coproduct(a.C1(), b.C1());
  const std::size_t split = a.C1().size;
  const InternalCategory obj = makeCategory(
      s1.copair(compose(s0.inj0, a.d0()), compose(s0.inj1, b.d0())),
      s1.copair(compose(s0.inj0, a.d1()), compose(s0.inj1, b.d1())),
      s0.copair(compose(s1.inj0, a.i()), compose(s1.inj1, b.i())), [&](Index u, Index v) {
        if (u < split) return a.compose(u, v);
        return split + b.compose(u - split, v - split);
      });
  return CatCoproduct{obj, InternalFunctor(a, obj, s0.inj0, s1.inj0),
                      InternalFunctor(b, obj, s0.inj1, s1.inj1)};
}

InternalFunctor CatCoproduct::copair(const InternalFunctor& f, const InternalFunctor& g) const {
  requireSame(f.cod(), g.cod(), "copairing functors with different codomains");
  requireSame(f.dom(), inj0.dom(), "first functor does not start at the first summand");
  requireSame(g.dom(), inj1.dom(), "second functor does not start at the second summand");
  const Coproduct s0 = coproduct(f.dom().C0(), g.dom().C0());
  const Coproduct s1 = coproduct(f.dom().C1(), g.dom().C1());
  return InternalFunctor(object, f.cod(), s0.copair(f.f0(), g.f0()), s1.copair(f.f1(), g.f1()));
}

InternalCategory freeArrow() {
  const FinObj objects(2, {"0", "1"});
  const FinObj arrows(3, {"id0", "a", "id1"});
  return makeCategory(FinMap(arrows, objects, {0, 1, 1}), FinMap(arrows, objects, {0, 0, 1}),
                      FinMap(objects, arrows, {0, 2}), [](Index u, Index v) {
                        if (u == 0 || u == 2) return v;
                        return u;  // a . id0
                      });
}

// ---------------------------------------------------------------------------
// Power by 2

PowerByTwo powerByTwo(const InternalCategory& a) {
  const ChosenLimit& a2 = a.composablePairs();
  const ChosenLimit sq = pullback(a.m(), a.m());
  auto bottom = [&](Index k) { return a2.component(sq.component(k, 0), 0); };
  auto from = [&](Index k) { return a2.component(sq.component(k, 0), 1); };
  auto to = [&](Index k) { return a2.component(sq.component(k, 1), 0); };
  auto top = [&](Index k) { return a2.component(sq.component(k, 1), 1); };
  auto square = [&](Index b, Index f, Index g, Index t) {
    return sq.indexOf({a2.indexOf({b, f}), a2.indexOf({g, t})});
  };

  std::vector<Index> d0(sq.apex().size), d1(sq.apex().size), tops(sq.apex().size),
      bottoms(sq.apex().size), ids(a.C1().size);
  for (Index k = 0; k < d0.size(); ++k) {
    d0[k] = to(k);
    d1[k] = from(k);
    tops[k] = top(k);
    bottoms[k] = bottom(k);
  }
  for (Index f = 0; f < ids.size(); ++f) {
    ids[f] = square(a.identity(a.target(f)), f, f, a.identity(a.source(f)));
  }
  const InternalCategory carrier = makeCategory(
      FinMap(sq.apex(), a.C1(), d0), FinMap(sq.apex(), a.C1(), d1), FinMap(a.C1(), sq.apex(), ids),
      [&](Index later, Index earlier) {
        return square(a.compose(bottom(later), bottom(earlier)), from(earlier), to(later),
                      a.compose(top(later), top(earlier)));
      });
  const InternalFunctor sourceProj(carrier, a, a.d1(), FinMap(sq.apex(), a.C1(), tops));
  const InternalFunctor targetProj(carrier, a, a.d0(), FinMap(sq.apex(), a.C1(), bottoms));
  return PowerByTwo{a, carrier, sourceProj, targetProj,
                    InternalNatTrans(sourceProj, targetProj, FinMap::identity(a.C1()))};
}

InternalFunctor PowerByTwo::fromTwoCell(const InternalNatTrans& alpha) const {
  requireSame(alpha.src().cod(), base, "2-cell does not land in the powered category");
  const InternalCategory& x = alpha.src().dom();
  const ChosenLimit& a2 = base.composablePairs();
  const ChosenLimit sq = pullback(base.m(), base.m());
  std::vector<Index> arrows(x.C1().size);
  for (Index b = 0; b < arrows.size(); ++b) {
    const Index p = a2.indexOf({alpha.tgt().f1()(b), alpha.alpha()(x.source(b))});
    const Index q = a2.indexOf({alpha.alpha()(x.target(b)), alpha.src().f1()(b)});
    arrows[b] = sq.indexOf({p, q});
  }
  return InternalFunctor(x, carrier, alpha.alpha(), FinMap(x.C1(), carrier.C1(), arrows));
}

InternalNatTrans PowerByTwo::toTwoCell(const InternalFunctor& f) const {
  return whiskerRight(universalCell, f);
}

// ---------------------------------------------------------------------------
// Copower by 2

CopowerByTwo copowerByTwo(const InternalCategory& a) {
  const CatProduct p = productCat(freeArrow(), a);
  const std::size_t n0 = a.C0().size, n1 = a.C1().size;
  std::vector<Index> o0(n0), o1(n0), a0(n1), a1(n1), cell(n0);
  for (Index x = 0; x < n0; ++x) {
    o0[x] = x;
    o1[x] = n0 + x;
    cell[x] = 1 * n1 + a.identity(x);
  }
  for (Index e = 0; e < n1; ++e) {
    a0[e] = 0 * n1 + e;
    a1[e] = 2 * n1 + e;
  }
  const FinObj& c0 = p.object.C0();
  const FinObj& c1 = p.object.C1();
  const InternalFunctor coproj0(a, p.object, FinMap(a.C0(), c0, o0), FinMap(a.C1(), c1, a0));
  const InternalFunctor coproj1(a, p.object, FinMap(a.C0(), c0, o1), FinMap(a.C1(), c1, a1));
  return CopowerByTwo{a, p.object, coproj0, coproj1,
                      InternalNatTrans(coproj0, coproj1, FinMap(a.C0(), c1, cell))};
}

InternalFunctor CopowerByTwo::fromTwoCell(const InternalNatTrans& alpha) const {
  requireSame(alpha.src().dom(), base, "2-cell does not start at the copowered category");
  const InternalCategory& b = alpha.src().cod();
  const std::size_t n0 = base.C0().size, n1 = base.C1().size;
  std::vector<Index> f0(2 * n0), f1(3 * n1);
  for (Index x = 0; x < n0; ++x) {
    f0[x] = alpha.src().f0()(x);
    f0[n0 + x] = alpha.tgt().f0()(x);
  }
  for (Index e = 0; e < n1; ++e) {
    f1[e] = alpha.src().f1()(e);
    f1[n1 + e] = b.compose(alpha.tgt().f1()(e), alpha.alpha()(base.source(e)));
    f1[2 * n1 + e] = alpha.tgt().f1()(e);
  }
  return InternalFunctor(carrier, b, FinMap(carrier.C0(), b.C0(), f0),
                         FinMap(carrier.C1(), b.C1(), f1));
}

InternalNatTrans CopowerByTwo::toTwoCell(const InternalFunctor& f) const {
  return whiskerLeft(f, universalCell);
}

// ---------------------------------------------------------------------------
// Hom-category by enumeration

namespace {

class Budget {
 public:
  explicit Budget(std::size_t bound) : left_(bound) {}
  void spend(const char* what) {
    if (left_ == 0) fail(ErrorKind::SizeBound, std::string(what) + " exceeded the size bound");
    --left_;
  }

 private:
  std::size_t left_;
};

/// All functors A -> B, lexicographic by (f0, f1).
std::vector<InternalFunctor> enumerateFunctors(const InternalCategory& a, const InternalCategory& b,
                                               Budget& budget) {
  const std::size_t n0 = a.C0().size, n1 = a.C1().size, m0 = b.C0().size;
  std::vector<std::vector<Index>> hom(m0 * m0);
  for (Index e = 0; e < b.C1().size; ++e) hom[b.source(e) * m0 + b.target(e)].push_back(e);

  const ChosenLimit& a2 = a.composablePairs();
  const ChosenLimit& b2 = b.composablePairs();
  std::vector<std::vector<Index>> checksAt(n1);
  for (Index k = 0; k < a2.apex().size; ++k)
    checksAt[std::max({a2.component(k, 0), a2.component(k, 1), a.m()(k)})].push_back(k);

  std::vector<InternalFunctor> out;
  if (m0 == 0 && n0 > 0) return out;
  std::vector<Index> f0(n0, 0), f1(n1, 0);

  std::function<void(Index)> arrows = [&](Index e) {
    if (e == n1) {
      out.emplace_back(a, b, FinMap(a.C0(), b.C0(), f0), FinMap(a.C1(), b.C1(), f1));
      return;
    }
    const Index s = f0[a.source(e)], t = f0[a.target(e)];
    const bool isId = a.identity(a.source(e)) == e;
    for (Index cand : hom[s * m0 + t]) {
      budget.spend("functor enumeration");
      if (isId && cand != b.identity(s)) continue;
      f1[e] = cand;
      bool ok = true;
      for (Index k : checksAt[e]) {
        const auto img = b2.find({f1[a2.component(k, 0)], f1[a2.component(k, 1)]});
        if (!img || b.m()(*img) != f1[a.m()(k)]) {
          ok = false;
          break;
        }
      }
      if (ok) arrows(e + 1);
    }
  };

  // Odometer over object maps, most significant entry first.
  while (true) {
    budget.spend("functor enumeration");
    arrows(0);
    std::size_t j = n0;
    while (j > 0 && ++f0[j - 1] == m0) f0[--j] = 0;
    if (j == 0) break;
  }
  return out;
}

/// All 2-cells f => g, lexicographic by assigner table.
std::vector<FinMap> enumerateCells(const InternalFunctor& f, const InternalFunctor& g,
                                   Budget& budget) {
  const InternalCategory& a = f.dom();
  const InternalCategory& b = f.cod();
  const std::size_t n0 = a.C0().size, m0 = b.C0().size;
  std::vector<std::vector<Index>> hom(m0 * m0);
  for (Index e = 0; e < b.C1().size; ++e) hom[b.source(e) * m0 + b.target(e)].push_back(e);
  std::vector<std::vector<Index>> checksAt(n0);
  for (Index e = 0; e < a.C1().size; ++e)
    checksAt[std::max(a.source(e), a.target(e))].push_back(e);

  std::vector<FinMap> out;
  std::vector<Index> alpha(n0, 0);
  std::function<void(Index)> assign = [&](Index x) {
    if (x == n0) {
      out.emplace_back(a.C0(), b.C1(), alpha);
      return;
    }
    for (Index cand : hom[f.f0()(x) * m0 + g.f0()(x)]) {
      budget.spend("transformation enumeration");
      alpha[x] = cand;
      bool ok = true;
      for (Index e : checksAt[x]) {
        if (b.compose(g.f1()(e), alpha[a.source(e)]) != b.compose(alpha[a.target(e)], f.f1()(e))) {
          ok = false;
          break;
        }
      }
      if (ok) assign(x + 1);
    }
  };
  assign(0);
  return out;
}

}  // namespace

HomCategory::HomCategory(InternalCategory a, InternalCategory b, std::size_t bound)
    : a_(std::move(a)), b_(std::move(b)) {
  Budget budget(bound);
  objects_ = enumerateFunctors(a_, b_, budget);
  identity_.resize(objects_.size());
  for (Index s = 0; s < objects_.size(); ++s) {
    for (Index t = 0; t < objects_.size(); ++t) {
      for (FinMap& alpha : enumerateCells(objects_[s], objects_[t], budget)) {
        if (s == t && alpha == icat::compose(b_.i(), objects_[s].f0())) identity_[s] = arrows_.size();
        arrows_.emplace_back(objects_[s], objects_[t], std::move(alpha));
        source_.push_back(s);
        target_.push_back(t);
      }
    }
  }
}

HomCategory homCategory(const InternalCategory& a, const InternalCategory& b, std::size_t bound) {
  return HomCategory(a, b, bound);
}

std::vector<InternalFunctor> allFunctors(const InternalCategory& a, const InternalCategory& b,
                                         std::size_t bound) {
  Budget budget(bound);
  return enumerateFunctors(a, b, budget);
}

std::vector<InternalNatTrans> allTransformations(const InternalFunctor& f, const InternalFunctor& g,
                                                 std::size_t bound) {
  Budget budget(bound);
  std::vector<InternalNatTrans> out;
  for (FinMap& alpha : enumerateCells(f, g, budget)) out.emplace_back(f, g, std::move(alpha));
  return out;
}

std::optional<Index> HomCategory::indexOfFunctor(const InternalFunctor& f) const {
  const auto it = std::lower_bound(
      objects_.begin(), objects_.end(), f, [](const InternalFunctor& x, const InternalFunctor& y) {
        return std::tie(x.f0().table(), x.f1().table()) < std::tie(y.f0().table(), y.f1().table());
      });
  if (it == objects_.end() || !(*it == f)) return std::nullopt;
  return static_cast<Index>(it - objects_.begin());
}

std::optional<Index> HomCategory::indexOfTransformation(const InternalNatTrans& t) const {
  const auto s = indexOfFunctor(t.src());
  const auto g = indexOfFunctor(t.tgt());
  if (!s || !g) return std::nullopt;
  for (Index k = 0; k < arrows_.size(); ++k)
    if (source_[k] == *s && target_[k] == *g && arrows_[k].alpha() == t.alpha()) return k;
  return std::nullopt;
}

Index HomCategory::compose(Index beta, Index alpha) const {
  const auto k = indexOfTransformation(vcomp(arrows_[beta], arrows_[alpha]));
  if (!k) fail(ErrorKind::ValidationError, "vertical composite is missing from the enumeration");
  return *k;
}

InternalCategory HomCategory::asCategory() const {
  const FinObj c0(objects_.size()), c1(arrows_.size());
  return makeCategory(FinMap(c1, c0, target_), FinMap(c1, c0, source_), FinMap(c0, c1, identity_),
                      [this](Index u, Index v) { return compose(u, v); });
}

// ---------------------------------------------------------------------------
// Internal hom via the end formula

namespace {

/// Lexicographic rank of a monotone map among monotoneMaps(from, to).
Index rankOf(const Monotone& phi) {
  const std::vector<Monotone> all = monotoneMaps(phi.from, phi.to);
  return static_cast<Index>(std::find(all.begin(), all.end(), phi) - all.begin());
}

}  // namespace

InternalHom::InternalHom(InternalCategory x, InternalCategory y, std::size_t bound, EndCheck check)
    : x_(std::move(x)),
      y_(std::move(y)),
      nx_(x_),
      ny_(y_),
      levels_(solveLevels(bound, check)),
      carrier_(buildCarrier()),
      evaluation_(buildEvaluation()) {}

InternalHom internalHom(const InternalCategory& x, const InternalCategory& y, std::size_t bound,
                        EndCheck check) {
  return InternalHom(x, y, bound, check);
}

std::vector<InternalHom::Level> InternalHom::solveLevels(std::size_t bound, EndCheck check) const {
  std::vector<Level> levels;
  levels.push_back(solveLevel(0, bound, check));
  levels.push_back(solveLevel(1, bound, check));
  // Every element of level 2 is reached through its own n <= 1 values, so the
  // search would explore at least this many families.
  const std::size_t pairs = composablePairs(levels[0], levels[1]);
  if (pairs > bound) {
    fail(ErrorKind::SizeBound, "internal hom level 2 has " + std::to_string(pairs) +
                                   " elements, more than " + std::to_string(bound));
  }
  levels.push_back(solveLevel(2, bound, check));
  return levels;
}

std::size_t InternalHom::composablePairs(const Level& objects, const Level& arrows) const {
  // Level-0 keys of the endpoints of every level-1 element.
  auto endpointKeys = [&](const Monotone& psi) {
    std::vector<std::size_t> source(objects.width);
    for (std::size_t n = 0; n <= 1; ++n) {
      const std::vector<Monotone> phis = monotoneMaps(n, 0);
      for (Index p = 0; p < phis.size(); ++p) {
        const Index q = rankOf(composeMonotone(psi, phis[p]));
        for (Index x = 0; x < nx_.level(n).size; ++x) source[offset(0, n, p, x)] = offset(1, n, q, x);
      }
    }
    std::map<std::vector<std::uint32_t>, std::size_t> counts;
    std::vector<std::uint32_t> key(objects.width);
    for (Index t = 0; t < arrows.count; ++t) {
      for (std::size_t c = 0; c < objects.width; ++c) key[c] = arrows.keys[t * arrows.width + source[c]];
      ++counts[key];
    }
    return counts;
  };
  const auto targets = endpointKeys(coface(1, 0));
  const auto sources = endpointKeys(coface(1, 1));
  std::size_t total = 0;
  for (const auto& [key, n] : targets) {
    const auto it = sources.find(key);
    if (it != sources.end()) total += n * it->second;
  }
  return total;
}

std::size_t InternalHom::offset(std::size_t k, std::size_t n, Index phi, Index x) const {
  return n == 0 ? phi * x_.C0().size + x : (k + 1) * x_.C0().size + phi * x_.C1().size + x;
}

Index InternalHom::value(std::size_t k, Index element, std::size_t n, Index phi, Index x) const {
  const Level& l = levels_[k];
  return l.keys[element * l.width + offset(k, n, phi, x)];
}

std::optional<Index> InternalHom::find(std::size_t k, std::span<const std::uint32_t> key) const {
  const Level& l = levels_[k];
  Index lo = 0, hi = l.count;
  while (lo < hi) {
    const Index mid = (lo + hi) / 2;
    const auto* row = l.keys.data() + mid * l.width;
    if (std::lexicographical_compare(row, row + l.width, key.begin(), key.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == l.count || !std::equal(key.begin(), key.end(), l.keys.data() + lo * l.width)) {
    return std::nullopt;
  }
  return lo;
}

InternalHom::Level InternalHom::solveLevel(std::size_t k, std::size_t bound, EndCheck check) const {
  constexpr std::size_t top = TruncatedNerve::kTop;
  std::array<std::vector<Monotone>, top + 1> phis;
  std::array<std::map<std::vector<Index>, Index>, top + 1> phiRank;
  std::array<std::size_t, top + 2> base{};
  for (std::size_t n = 0; n <= top; ++n) {
    phis[n] = monotoneMaps(n, k);
    for (Index p = 0; p < phis[n].size(); ++p) phiRank[n][phis[n][p].values] = p;
    base[n + 1] = base[n] + phis[n].size() * nx_.level(n).size;
  }
  const std::size_t total = base[top + 1];
  auto id = [&](std::size_t n, Index phi, Index x) { return base[n] + phi * nx_.level(n).size + x; };

  struct Coord {
    std::size_t n;
    Index phi;
    Index x;
  };
  std::vector<Coord> coords(total);
  std::vector<Index> maxVertex(total);
  for (std::size_t n = 0; n <= top; ++n) {
    for (Index x = 0; x < nx_.level(n).size; ++x) {
      Index mv = 0;
      for (std::size_t j = 0; j <= n; ++j) mv = std::max(mv, nx_.vertex(n, x, j));
      for (Index p = 0; p < phis[n].size(); ++p) {
        coords[id(n, p, x)] = Coord{n, p, x};
        maxVertex[id(n, p, x)] = mv;
      }
    }
  }
  // Coordinates a candidate is read from: endpoints for n = 1, the spine for n >= 2.
  std::vector<std::vector<Index>> deps(total);
  for (Index c = 0; c < total; ++c) {
    const Coord& cd = coords[c];
    if (cd.n == 0) continue;
    const Monotone& phi = phis[cd.n][cd.phi];
    if (cd.n == 1) {
      deps[c] = {id(0, phiRank[0].at({phi(0)}), nx_.vertex(1, cd.x, 0)),
                 id(0, phiRank[0].at({phi(1)}), nx_.vertex(1, cd.x, 1))};
      continue;
    }
    const std::vector<Index> edges = nx_.spine(cd.n, cd.x);
    for (std::size_t j = 0; j < cd.n; ++j)
      deps[c].push_back(id(1, phiRank[1].at({phi(j), phi(j + 1)}), edges[j]));
  }

  // Objects of X one at a time: everything living on {0..j} is settled before
  // j+1. Within that, arrows of X are filled one at a time across all phi, and
  // a coordinate at n = 2 is placed as soon as its spine is known.
  std::vector<Index> primary;
  for (Index c = 0; c < base[2]; ++c) primary.push_back(c);
  std::stable_sort(primary.begin(), primary.end(), [&](Index a, Index b) {
    const Coord& ca = coords[a];
    const Coord& cb = coords[b];
    return std::tie(maxVertex[a], ca.n, ca.x, ca.phi) < std::tie(maxVertex[b], cb.n, cb.x, cb.phi);
  });
  std::vector<std::size_t> missing(total, 0);
  std::vector<std::vector<Index>> dependents(total);
  for (Index c = base[2]; c < base[3]; ++c) {
    std::vector<Index> d = deps[c];
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    missing[c] = d.size();
    for (Index e : d) dependents[e].push_back(c);
  }
  std::vector<Index> order;
  order.reserve(total);
  for (Index c : primary) {
    order.push_back(c);
    for (Index d : dependents[c])
      if (--missing[d] == 0) order.push_back(d);
  }
  // The n = 3 coordinates are checked once the rest of a family is complete;
  // their equations follow from those at n <= 2, so they never prune earlier.
  for (Index c = base[3]; c < total; ++c) order.push_back(c);
  std::vector<Index> position(total);
  for (Index p = 0; p < total; ++p) position[order[p]] = p;

  // Naturality in [n] only needs checking on cofaces and codegeneracies,
  // since every map of the truncated simplex category is a composite of them.
  std::vector<Monotone> generators;
  for (std::size_t n = 1; n <= top; ++n)
    for (std::size_t i = 0; i <= n; ++i) generators.push_back(coface(n, i));
  for (std::size_t n = 0; n < top; ++n)
    for (std::size_t i = 0; i <= n; ++i) generators.push_back(codegeneracy(n, i));
  std::vector<FinMap> actY;
  struct Check {
    Index other;
    std::uint32_t map;
    bool laterIsLeft;
  };
  std::vector<std::vector<Check>> checks(total);
  for (const Monotone& theta : generators) {
    const FinMap ax = nx_.actMap(theta);
    actY.push_back(ny_.actMap(theta));
    const auto mapIdx = static_cast<std::uint32_t>(actY.size() - 1);
    for (Index p = 0; p < phis[theta.to].size(); ++p) {
      const Index q = phiRank[theta.from].at(composeMonotone(phis[theta.to][p], theta).values);
      for (Index x = 0; x < nx_.level(theta.to).size; ++x) {
        const Index left = id(theta.from, q, ax(x));
        const Index right = id(theta.to, p, x);
        if (position[left] > position[right]) {
          checks[left].push_back(Check{right, mapIdx, true});
        } else {
          checks[right].push_back(Check{left, mapIdx, false});
        }
      }
    }
  }

  const std::size_t y0 = y_.C0().size;
  std::vector<std::vector<Index>> hom(y0 * y0);
  for (Index e = 0; e < y_.C1().size; ++e) hom[y_.source(e) * y0 + y_.target(e)].push_back(e);

  // Dense spine tables for the nerve of Y, when small enough.
  constexpr Index kNoSimplex = static_cast<Index>(-1);
  const std::size_t y1 = y_.C1().size;
  std::array<std::vector<Index>, top + 1> spineTable;
  for (std::size_t n = 2; n <= top; ++n) {
    std::size_t cells = 1;
    for (std::size_t j = 0; j < n; ++j) cells *= y1;
    if (cells > (std::size_t{1} << 22)) continue;
    spineTable[n].assign(cells, kNoSimplex);
    for (Index y = 0; y < ny_.level(n).size; ++y) {
      std::size_t key = 0;
      for (Index e : ny_.spine(n, y)) key = key * y1 + e;
      spineTable[n][key] = y;
    }
  }
  auto fromSpine = [&](std::size_t n, const std::array<Index, top>& edges) -> std::optional<Index> {
    if (spineTable[n].empty()) return ny_.fromSpine(n, std::span<const Index>(edges.data(), n));
    std::size_t key = 0;
    for (std::size_t j = 0; j < n; ++j) key = key * y1 + edges[j];
    const Index y = spineTable[n][key];
    return y == kNoSimplex ? std::nullopt : std::optional<Index>(y);
  };

  Level level;
  level.width = base[2];
  std::vector<Index> val(total, 0);
  std::vector<Index> scratch;
  std::size_t nodes = 0;
  auto consistent = [&](Index c) {
    for (const Check& ch : checks[c]) {
      const bool ok = ch.laterIsLeft ? val[c] == actY[ch.map](val[ch.other])
                                     : actY[ch.map](val[c]) == val[ch.other];
      if (!ok) return false;
    }
    return true;
  };
  // The n = 3 tail is forced by the spine, so it is filled and checked in one pass.
  const bool checkTail = check == EndCheck::Full;
  const Index tailStart = total - (base[top + 1] - base[top]);
  auto tailConsistent = [&]() {
    for (Index p = tailStart; p < total; ++p) {
      const Index c = order[p];
      std::array<Index, top> edges{};
      for (std::size_t j = 0; j < top; ++j) edges[j] = val[deps[c][j]];
      const auto s = fromSpine(top, edges);
      if (!s) return false;
      val[c] = *s;
      if (!consistent(c)) return false;
    }
    return true;
  };
  std::function<void(Index)> descend = [&](Index depth) {
    if (depth == tailStart) {
      if (checkTail && !tailConsistent()) return;
      for (Index c = 0; c < level.width; ++c) level.keys.push_back(static_cast<std::uint32_t>(val[c]));
      ++level.count;
      return;
    }
    const Index c = order[depth];
    const Coord& cd = coords[c];
    auto attempt = [&](Index candidate) {
      if (cd.n <= 1 && ++nodes > bound) {
        fail(ErrorKind::SizeBound, "internal hom level " + std::to_string(k) +
                                       " explored more than " + std::to_string(bound) +
                                       " partial families");
      }
      val[c] = candidate;
      if (consistent(c)) descend(depth + 1);
    };
    // A face of a coordinate already placed has its value forced.
    if (cd.n <= 1) {
      const auto forcing = std::find_if(checks[c].begin(), checks[c].end(),
                                        [](const Check& ch) { return ch.laterIsLeft; });
      if (forcing != checks[c].end()) {
        const Index v = actY[forcing->map](val[forcing->other]);
        if (cd.n == 0 || (y_.source(v) == val[deps[c][0]] && y_.target(v) == val[deps[c][1]])) attempt(v);
        return;
      }
    }
    if (cd.n == 0) {
      for (Index v = 0; v < y0; ++v) attempt(v);
    } else if (cd.n == 1) {
      for (Index e : hom[val[deps[c][0]] * y0 + val[deps[c][1]]]) attempt(e);
    } else {
      std::array<Index, top> edges{};
      for (std::size_t j = 0; j < cd.n; ++j) edges[j] = val[deps[c][j]];
      if (const auto s = fromSpine(cd.n, edges)) attempt(*s);
    }
  };
  descend(0);

  // Canonical order: lexicographic in the coordinates (n, phi, x).
  std::vector<Index> perm(level.count);
  std::iota(perm.begin(), perm.end(), Index{0});
  const std::size_t w = level.width;
  std::sort(perm.begin(), perm.end(), [&](Index a, Index b) {
    return std::lexicographical_compare(level.keys.begin() + a * w, level.keys.begin() + (a + 1) * w,
                                        level.keys.begin() + b * w, level.keys.begin() + (b + 1) * w);
  });
  std::vector<std::uint32_t> sorted;
  sorted.reserve(level.keys.size());
  for (Index p : perm)
    sorted.insert(sorted.end(), level.keys.begin() + p * w, level.keys.begin() + (p + 1) * w);
  level.keys = std::move(sorted);
  return level;
}

FinMap InternalHom::restriction(const Monotone& psi) const {
  const std::size_t from = psi.from, to = psi.to;
  const Level& src = levels_[to];
  const Level& dst = levels_[from];
  // For each coordinate (n, phi', x) at level `from`, the coordinate (n, psi . phi', x) at `to`.
  std::vector<std::size_t> source(dst.width);
  for (std::size_t n = 0; n <= 1; ++n) {
    const std::vector<Monotone> phis = monotoneMaps(n, from);
    for (Index p = 0; p < phis.size(); ++p) {
      const Index q = rankOf(composeMonotone(psi, phis[p]));
      for (Index x = 0; x < nx_.level(n).size; ++x) source[offset(from, n, p, x)] = offset(to, n, q, x);
    }
  }
  std::vector<Index> table(src.count);
  std::vector<std::uint32_t> key(dst.width);
  for (Index t = 0; t < src.count; ++t) {
    for (std::size_t c = 0; c < dst.width; ++c) key[c] = src.keys[t * src.width + source[c]];
    const auto r = find(from, key);
    if (!r) fail(ErrorKind::ValidationError, "restriction left the computed end");
    table[t] = *r;
  }
  return FinMap(FinObj(src.count), FinObj(dst.count), std::move(table));
}

InternalCategory InternalHom::buildCarrier() const {
  const FinMap d0 = restriction(coface(1, 0));
  const FinMap d1 = restriction(coface(1, 1));
  const FinMap i = restriction(codegeneracy(0, 0));
  const FinMap later = restriction(coface(2, 0));
  const FinMap composite = restriction(coface(2, 1));
  const FinMap earlier = restriction(coface(2, 2));
  const ChosenLimit pairs = pullback(d1, d0);
  std::vector<Index> m(pairs.apex().size);
  std::vector<bool> hit(m.size(), false);
  for (Index s = 0; s < levels_[2].count; ++s) {
    const auto k = pairs.find({later(s), earlier(s)});
    if (!k || hit[*k]) fail(ErrorKind::ValidationError, "Segal map of the end is not bijective");
    hit[*k] = true;
    m[*k] = composite(s);
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    fail(ErrorKind::ValidationError, "Segal map of the end is not surjective");
  }
  return InternalCategory(d0, d1, i, FinMap(pairs.apex(), d0.dom(), std::move(m)));
}

InternalFunctor InternalHom::buildEvaluation() const {
  const CatProduct p = productCat(carrier_, x_);
  const std::size_t nx0 = x_.C0().size, nx1 = x_.C1().size;
  std::vector<Index> f0(p.object.C0().size), f1(p.object.C1().size);
  for (Index t = 0; t < carrier_.C0().size; ++t)
    for (Index x = 0; x < nx0; ++x) f0[t * nx0 + x] = value(0, t, 0, 0, x);
  const Index identityPhi = rankOf(identityMonotone(1));
  for (Index s = 0; s < carrier_.C1().size; ++s)
    for (Index a = 0; a < nx1; ++a) f1[s * nx1 + a] = value(1, s, 1, identityPhi, a);
  return InternalFunctor(p.object, y_, FinMap(p.object.C0(), y_.C0(), f0),
                         FinMap(p.object.C1(), y_.C1(), f1));
}

InternalFunctor InternalHom::curry(const InternalCategory& z, const InternalFunctor& f) const {
  const CatProduct p = productCat(z, x_);
  if (!(f.dom() == p.object) || !(f.cod() == y_)) {
    fail(ErrorKind::NotInHomSet, "curry expects a functor Z x X -> Y");
  }
  const std::size_t nx0 = x_.C0().size, nx1 = x_.C1().size;
  std::vector<Index> g0(z.C0().size), g1(z.C1().size);
  {
    std::vector<std::uint32_t> key(levels_[0].width);
    for (Index w = 0; w < z.C0().size; ++w) {
      for (Index x = 0; x < nx0; ++x) key[offset(0, 0, 0, x)] = f.f0()(w * nx0 + x);
      for (Index a = 0; a < nx1; ++a) key[offset(0, 1, 0, a)] = f.f1()(z.identity(w) * nx1 + a);
      const auto r = find(0, key);
      if (!r) fail(ErrorKind::NotInHomSet, "curry: object image is not a functor");
      g0[w] = *r;
    }
  }
  {
    std::vector<std::uint32_t> key(levels_[1].width);
    for (Index g = 0; g < z.C1().size; ++g) {
      const Index ends[2] = {z.source(g), z.target(g)};
      for (Index v = 0; v < 2; ++v)
        for (Index x = 0; x < nx0; ++x) key[offset(1, 0, v, x)] = f.f0()(ends[v] * nx0 + x);
      // Monotone [1] -> [1] in lex order: (0,0), (0,1), (1,1).
      const Index edge[3] = {z.identity(ends[0]), g, z.identity(ends[1])};
      for (Index p1 = 0; p1 < 3; ++p1)
        for (Index a = 0; a < nx1; ++a) key[offset(1, 1, p1, a)] = f.f1()(edge[p1] * nx1 + a);
      const auto r = find(1, key);
      if (!r) fail(ErrorKind::NotInHomSet, "curry: arrow image is not a transformation");
      g1[g] = *r;
    }
  }
  return InternalFunctor(z, carrier_, FinMap(z.C0(), carrier_.C0(), g0),
                         FinMap(z.C1(), carrier_.C1(), g1));
}

InternalFunctor InternalHom::decodeFunctor(Index object) const {
  std::vector<Index> f0(x_.C0().size), f1(x_.C1().size);
  for (Index x = 0; x < f0.size(); ++x) f0[x] = value(0, object, 0, 0, x);
  for (Index a = 0; a < f1.size(); ++a) f1[a] = value(0, object, 1, 0, a);
  return InternalFunctor(x_, y_, FinMap(x_.C0(), y_.C0(), f0), FinMap(x_.C1(), y_.C1(), f1));
}

InternalNatTrans InternalHom::decodeTransformation(Index arrow) const {
  const Index cross = rankOf(identityMonotone(1));
  std::vector<Index> alpha(x_.C0().size);
  for (Index x = 0; x < alpha.size(); ++x) alpha[x] = value(1, arrow, 1, cross, x_.identity(x));
  return InternalNatTrans(decodeFunctor(carrier_.source(arrow)),
                          decodeFunctor(carrier_.target(arrow)),
                          FinMap(x_.C0(), y_.C1(), alpha));
}

std::optional<Index> InternalHom::encodeFunctor(const InternalFunctor& f) const {
  if (!(f.dom() == x_) || !(f.cod() == y_)) return std::nullopt;
  std::vector<std::uint32_t> key(levels_[0].width);
  for (Index x = 0; x < x_.C0().size; ++x) key[offset(0, 0, 0, x)] = f.f0()(x);
  for (Index a = 0; a < x_.C1().size; ++a) key[offset(0, 1, 0, a)] = f.f1()(a);
  return find(0, key);
}

}  // namespace icat
