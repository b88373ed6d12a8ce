#pragma once

// Finite limits and colimits in the 2-category of internal categories:
// terminal object, products, pullbacks, coproducts, the free-living arrow,
// powers and copowers by 2, the external hom-category and the internal hom.

#include <cstdint>
#include <vector>

#include "icat/internal.hpp"
#include "icat/transfer.hpp"

namespace icat {

InternalCategory terminalCat();

struct CatProduct {
  InternalCategory object;
  InternalFunctor proj0;
  InternalFunctor proj1;

  /// The functor (f, g) into the product.
  InternalFunctor pair(const InternalFunctor& f, const InternalFunctor& g) const;
};

CatProduct productCat(const InternalCategory& a, const InternalCategory& b);

struct CatPullback {
  InternalCategory object;
  InternalFunctor proj0;
  InternalFunctor proj1;
  InternalFunctor left;   // the cospan being pulled back
  InternalFunctor right;

  /// The mediating functor for a commuting cone (p, q); NonCommuting otherwise.
  InternalFunctor mediate(const InternalFunctor& p, const InternalFunctor& q) const;
};

CatPullback pullbackCat(const InternalFunctor& f, const InternalFunctor& g);

/// True iff (p0, p1) is a pullback cone of (f, g), tested on both levels.
bool isPullbackCone(const InternalFunctor& p0, const InternalFunctor& p1,
                    const InternalFunctor& f, const InternalFunctor& g);

struct CatCoproduct {
  InternalCategory object;
  InternalFunctor inj0;
  InternalFunctor inj1;

  InternalFunctor copair(const InternalFunctor& f, const InternalFunctor& g) const;
};

CatCoproduct coproductCat(const InternalCategory& a, const InternalCategory& b);

/// 2_E: objects {0, 1}, arrows {id0, a: 0 -> 1, id1}.
InternalCategory freeArrow();

/// The arrow category A^2. Objects are the arrows of A; an arrow from f to g
/// is a commuting square, stored as an element ((u, v), (u', v')) of the
/// pullback of m along m with v = f, u' = g, u the bottom and v' the top edge.
struct PowerByTwo {
  InternalCategory base;
  InternalCategory carrier;
  InternalFunctor sourceProj;
  InternalFunctor targetProj;
  InternalNatTrans universalCell;

  /// The functor X -> A^2 classifying a 2-cell between functors X -> A.
  InternalFunctor fromTwoCell(const InternalNatTrans& alpha) const;
  /// The 2-cell obtained by whiskering the universal cell with F : X -> A^2.
  InternalNatTrans toTwoCell(const InternalFunctor& f) const;
};

PowerByTwo powerByTwo(const InternalCategory& a);

/// The copower 2 . A, realised as 2_E x A.
struct CopowerByTwo {
  InternalCategory base;
  InternalCategory carrier;
  InternalFunctor coproj0;
  InternalFunctor coproj1;
  InternalNatTrans universalCell;

  /// The functor 2_E x A -> B corresponding to alpha : f => g : A -> B.
  InternalFunctor fromTwoCell(const InternalNatTrans& alpha) const;
  InternalNatTrans toTwoCell(const InternalFunctor& f) const;
};

CopowerByTwo copowerByTwo(const InternalCategory& a);

/// The hom-category Cat(E)(A, B) by exhaustive enumeration. Functors are
/// listed lexicographically by (f0, f1); transformations by (source, target, alpha).
class HomCategory {
 public:
  HomCategory(InternalCategory a, InternalCategory b, std::size_t bound = kDefaultSizeBound);

  const std::vector<InternalFunctor>& objects() const { return objects_; }
  const std::vector<InternalNatTrans>& arrows() const { return arrows_; }
  Index arrowSource(Index k) const { return source_[k]; }
  Index arrowTarget(Index k) const { return target_[k]; }
  Index identityArrow(Index obj) const { return identity_[obj]; }
  std::optional<Index> indexOfFunctor(const InternalFunctor& f) const;
  std::optional<Index> indexOfTransformation(const InternalNatTrans& t) const;
  /// beta . alpha, for composable arrow indices.
  Index compose(Index beta, Index alpha) const;

  InternalCategory asCategory() const;

 private:
  InternalCategory a_, b_;
  std::vector<InternalFunctor> objects_;
  std::vector<InternalNatTrans> arrows_;
  std::vector<Index> source_, target_, identity_;
};

HomCategory homCategory(const InternalCategory& a, const InternalCategory& b,
                        std::size_t bound = kDefaultSizeBound);

/// The objects of homCategory(a, b) without the 2-cells.
std::vector<InternalFunctor> allFunctors(const InternalCategory& a, const InternalCategory& b,
                                         std::size_t bound = kDefaultSizeBound);
/// All 2-cells f => g, ordered by assigner table.
std::vector<InternalNatTrans> allTransformations(const InternalFunctor& f, const InternalFunctor& g,
                                                 std::size_t bound = kDefaultSizeBound);

/// Which equations of the end the search imposes. The components at n = 3
/// are determined by their spines, so the equations there follow from those
/// at n <= 2; `Full` imposes them anyway.
enum class EndCheck { Coskeletal, Full };

/// The internal hom [X, Y]. Level k of its nerve is the end over [n] in the
/// simplex category (n <= 3) of the products over monotone phi : [n] -> [k]
/// of Y_n^{X_n}; an element is a compatible family t_n(phi, x) in Y_n.
/// Levels 0, 1, 2 are computed; the category structure is read off the
/// simplicial structure, with composition through the Segal bijection.
class InternalHom {
 public:
  InternalHom(InternalCategory x, InternalCategory y, std::size_t bound = kDefaultSizeBound,
              EndCheck check = EndCheck::Coskeletal);

  const InternalCategory& carrier() const { return carrier_; }
  const InternalCategory& source() const { return x_; }
  const InternalCategory& target() const { return y_; }
  /// Number of elements at level 0, 1, 2.
  std::size_t levelSize(std::size_t k) const { return levels_[k].count; }

  /// ev : [X, Y] x X -> Y.
  const InternalFunctor& evaluation() const { return evaluation_; }
  /// The transpose Z -> [X, Y] of F : Z x X -> Y, with Z x X the chosen product.
  InternalFunctor curry(const InternalCategory& z, const InternalFunctor& f) const;

  InternalFunctor decodeFunctor(Index object) const;
  InternalNatTrans decodeTransformation(Index arrow) const;
  std::optional<Index> encodeFunctor(const InternalFunctor& f) const;

 private:
  struct Level {
    std::size_t count = 0;
    std::size_t width = 0;             // coordinates with n <= 1
    std::vector<std::uint32_t> keys;   // count x width, sorted
  };

  std::vector<Level> solveLevels(std::size_t bound, EndCheck check) const;
  Level solveLevel(std::size_t k, std::size_t bound, EndCheck check) const;
  /// |level 1 x_level0 level 1|, which level 2 matches by the Segal condition.
  std::size_t composablePairs(const Level& objects, const Level& arrows) const;
  std::size_t offset(std::size_t k, std::size_t n, Index phi, Index x) const;
  std::optional<Index> find(std::size_t k, std::span<const std::uint32_t> key) const;
  Index value(std::size_t k, Index element, std::size_t n, Index phi, Index x) const;
  /// The structure map psi^* from level psi.to to level psi.from.
  FinMap restriction(const Monotone& psi) const;
  InternalCategory buildCarrier() const;
  InternalFunctor buildEvaluation() const;

  InternalCategory x_, y_;
  TruncatedNerve nx_, ny_;
  std::vector<Level> levels_;
  InternalCategory carrier_;
  InternalFunctor evaluation_;
};

InternalHom internalHom(const InternalCategory& x, const InternalCategory& y,
                        std::size_t bound = kDefaultSizeBound, EndCheck check = EndCheck::Coskeletal);

}  // namespace icat
