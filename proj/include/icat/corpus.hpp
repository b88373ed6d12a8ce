#pragma once

// Deterministic generation of small internal categories and functors between
// them, for property suites, the audit and the command line.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "icat/internal.hpp"

namespace icat {

enum class Constructor {
  FreeOnDAG,
  MonoidDelooping,
  Preorder,
  Product,
  Coproduct,
  Disc,
  Indisc,
  Opposite,
};

std::string_view constructorName(Constructor c);
const std::vector<Constructor>& allConstructors();

struct CorpusSpec {
  std::uint64_t seed = 7;
  std::size_t maxObjects = 4;
  std::size_t maxArrows = 10;
  std::size_t count = 30;
  std::set<Constructor> enabled{allConstructors().begin(), allConstructors().end()};
};

struct CorpusItem {
  std::string name;
  InternalCategory category;
};

/// Distinct categories within the caps. Free categories are only ever taken
/// on acyclic graphs; product, coproduct and opposite act on earlier items.
std::vector<CorpusItem> generateCorpus(const CorpusSpec& spec);

/// The free category on a graph whose edges (source, target) satisfy source < target.
/// Arrows are paths, listed by (source, target, edge sequence).
InternalCategory freeCategory(std::size_t objects, const std::vector<std::pair<Index, Index>>& edges);
/// One object; element k of the monoid is arrow k and arrow `unit` is the identity.
InternalCategory deloop(std::size_t size, Index unit, const std::vector<std::vector<Index>>& table);
/// The monoid {1, x, ..., x^(index + period - 1)} with x^(index + period) = x^index.
InternalCategory monogenicMonoid(std::size_t index, std::size_t period);
/// The thin category of the reflexive-transitive closure of `related` (s -> t when related[s][t]).
InternalCategory preorder(std::vector<std::vector<bool>> related);
InternalCategory opposite(const InternalCategory& c);

/// The full subcategory on `objects` (distinct, increasing) and its inclusion.
InternalFunctor fullSubcategoryInclusion(const InternalCategory& b, const std::vector<Index>& objects);
/// The fully faithful functor A -> B with A0 = dom(e0) and A(x, y) = B(e0 x, e0 y).
InternalFunctor fullyFaithfulCover(const InternalCategory& b, const FinMap& e0);

/// Uniformly chosen functors between random corpus pairs whose hom-category
/// stays within `bound`; pairs without functors are skipped.
std::vector<InternalFunctor> sampleFunctors(const std::vector<CorpusItem>& corpus,
                                            std::mt19937_64& rng, std::size_t count,
                                            std::size_t bound = kDefaultSizeBound);

}  // namespace icat
