#pragma once

// The base category: finite sets {0..n-1} with chosen, canonical finite limits,
// coproducts, coequalizers, exponentials, a subobject classifier and the
// (epi, mono) factorisation.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "icat/error.hpp"

namespace icat {

using Index = std::size_t;

inline constexpr std::size_t kDefaultSizeBound = 1'000'000;

/// A finite set, identified with {0, ..., size-1}. Labels are display-only.
struct FinObj {
  std::size_t size = 0;
  std::vector<std::string> labels;

  FinObj() = default;
  explicit FinObj(std::size_t n) : size(n) {}
  FinObj(std::size_t n, std::vector<std::string> displayLabels);

  friend bool operator==(const FinObj& a, const FinObj& b) { return a.size == b.size; }
};

/// A function between finite sets, stored as its table of values.
class FinMap {
 public:
  FinMap() = default;
  FinMap(FinObj dom, FinObj cod, std::vector<Index> table);

  static FinMap identity(const FinObj& x);
  static FinMap constant(const FinObj& dom, const FinObj& cod, Index value);
  /// The map 1 -> cod picking `value`.
  static FinMap point(const FinObj& cod, Index value);
  static FinMap toTerminal(const FinObj& dom);

  const FinObj& dom() const { return dom_; }
  const FinObj& cod() const { return cod_; }
  const std::vector<Index>& table() const { return table_; }
  Index operator()(Index x) const { return table_[x]; }

  friend bool operator==(const FinMap& a, const FinMap& b) = default;

 private:
  FinObj dom_;
  FinObj cod_;
  std::vector<Index> table_;
};

/// g after f.
FinMap compose(const FinMap& g, const FinMap& f);

bool isMono(const FinMap& f);
bool isEpi(const FinMap& f);
bool isIso(const FinMap& f);
FinMap inverse(const FinMap& iso);

FinObj terminal();

/// One defining equation of a finite limit: leftMap(x[left]) == rightMap(x[right]).
struct Equation {
  std::size_t left;
  FinMap leftMap;
  std::size_t right;
  FinMap rightMap;
};

/// A chosen limit of a finite diagram presented by components and equations.
///
/// The apex enumerates the solution tuples in lexicographic order, so every
/// derived structure map is determined on the nose.
class ChosenLimit {
 public:
  ChosenLimit(std::vector<FinObj> components, std::vector<Equation> equations,
              std::size_t bound = kDefaultSizeBound);

  const FinObj& apex() const { return apex_; }
  std::size_t arity() const { return components_.size(); }
  const std::vector<FinObj>& components() const { return components_; }
  const std::vector<FinMap>& projections() const { return projections_; }
  const FinMap& projection(std::size_t c) const { return projections_.at(c); }

  std::span<const Index> tuple(Index k) const;
  Index component(Index k, std::size_t c) const { return tuples_[k * arity() + c]; }

  std::optional<Index> find(std::span<const Index> tuple) const;
  std::optional<Index> find(std::initializer_list<Index> tuple) const {
    return find(std::span<const Index>(tuple.begin(), tuple.size()));
  }
  /// Index of a solution tuple; NonCommuting if the tuple violates an equation.
  Index indexOf(std::span<const Index> tuple) const;
  Index indexOf(std::initializer_list<Index> tuple) const {
    return indexOf(std::span<const Index>(tuple.begin(), tuple.size()));
  }

  /// The unique map into the apex commuting with the projections.
  FinMap mediate(std::span<const FinMap> legs) const;
  FinMap mediate(std::initializer_list<FinMap> legs) const {
    return mediate(std::span<const FinMap>(legs.begin(), legs.size()));
  }

  /// True iff (apex', legs) is itself a limit cone, i.e. the mediating map is a bijection.
  bool isLimitCone(std::span<const FinMap> legs) const;

 private:
  std::optional<std::uint64_t> radixKey(std::span<const Index> tuple) const;

  std::vector<FinObj> components_;
  FinObj apex_;
  std::vector<Index> tuples_;
  std::vector<FinMap> projections_;

  bool radixFits_ = false;
  std::vector<std::uint64_t> radix_;
  std::vector<Index> dense_;  // key -> index + 1, 0 = absent
  std::unordered_map<std::uint64_t, Index> sparse_;
  std::map<std::vector<Index>, Index> byTuple_;
};

ChosenLimit product(const FinObj& a, const FinObj& b);
ChosenLimit product(std::vector<FinObj> factors);
ChosenLimit pullback(const FinMap& f, const FinMap& g);
ChosenLimit equalizer(const FinMap& f, const FinMap& g);

/// f x g between the chosen binary products.
FinMap productMap(const FinMap& f, const FinMap& g);

/// True iff the square  p1;g = p0;f  is a pullback of (f, g).
bool isPullback(const FinMap& p0, const FinMap& p1, const FinMap& f, const FinMap& g);
/// True iff e equalizes (f, g) universally.
bool isEqualizer(const FinMap& e, const FinMap& f, const FinMap& g);

struct Coproduct {
  FinObj object;
  FinMap inj0;
  FinMap inj1;

  FinMap copair(const FinMap& f, const FinMap& g) const;
};

Coproduct coproduct(const FinObj& a, const FinObj& b);

/// Quotient by the equivalence closure of f(x) ~ g(x); classes are numbered
/// by their least member.
struct Coequalizer {
  FinObj object;
  FinMap quotient;

  /// The induced map out of the quotient; NonCommuting if h is not constant on classes.
  FinMap descend(const FinMap& h) const;
};

Coequalizer coequalizer(const FinMap& f, const FinMap& g);

/// target^base, with elements the tables base -> target in lexicographic order.
class Exponential {
 public:
  Exponential(FinObj base, FinObj target, std::size_t bound = kDefaultSizeBound);

  const FinObj& object() const { return object_; }
  const FinObj& base() const { return base_; }
  const FinObj& target() const { return target_; }
  const ChosenLimit& evalDomain() const { return evalDomain_; }
  const FinMap& eval() const { return eval_; }

  std::vector<Index> decode(Index k) const;
  Index encode(std::span<const Index> table) const;

  /// Transpose of h: Z x base -> target (Z x base the chosen product).
  FinMap curry(const FinObj& z, const FinMap& h) const;
  /// Inverse of curry.
  FinMap uncurry(const FinMap& k) const;

 private:
  FinObj base_;
  FinObj target_;
  FinObj object_;
  ChosenLimit evalDomain_;
  FinMap eval_;
};

struct SubobjectClassifier {
  FinObj omega;  // index 1 = true
  FinMap top;
};

SubobjectClassifier subobjectClassifier();
FinMap characteristicMap(const FinMap& mono);

/// f = right . left with left epi, right mono; the image is ordered by codomain index.
struct ImageFactorisation {
  FinMap left;
  FinMap right;
};

ImageFactorisation factorEpiMono(const FinMap& f);

/// Section of a surjection choosing the least preimage.
FinMap chooseSection(const FinMap& e);

}  // namespace icat
