#pragma once

// Functors between the base and internal categories: disc, indisc, the
// object and arrow parts, connected components, the truncated nerve, and
// executable witnesses for the adjunctions  Pi0 -| disc -| (-)0 -| indisc.

#include <array>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "icat/internal.hpp"

namespace icat {

InternalCategory disc(const FinObj& x);
/// Arrows are pairs (target, source) in the chosen product X x X.
InternalCategory indisc(const FinObj& x);
InternalFunctor discMap(const FinMap& f);
InternalFunctor indiscMap(const FinMap& f);

const FinObj& objectsPart(const InternalCategory& c);
const FinObj& arrowsPart(const InternalCategory& c);

/// Coequalizer of (d0, d1); its quotient map is the unit A0 -> Pi0(A).
Coequalizer componentsQuotient(const InternalCategory& c);
FinObj pi0(const InternalCategory& c);
FinMap pi0Map(const InternalFunctor& f);

/// True iff every arrow sent to an identity is an identity.
bool reflectsIdentities(const InternalFunctor& f);

// ---------------------------------------------------------------------------
// The simplex category up to dimension 3

/// A monotone map [from] -> [to], stored as its values on 0..from.
struct Monotone {
  std::size_t from = 0;
  std::size_t to = 0;
  std::vector<Index> values;

  Index operator()(Index j) const { return values[j]; }
  friend bool operator==(const Monotone&, const Monotone&) = default;
};

/// All monotone maps [n] -> [k], lexicographic by value sequence.
std::vector<Monotone> monotoneMaps(std::size_t n, std::size_t k);
/// psi after theta.
Monotone composeMonotone(const Monotone& psi, const Monotone& theta);
Monotone identityMonotone(std::size_t n);
/// delta^i : [n-1] -> [n], skipping i.
Monotone coface(std::size_t n, std::size_t i);
/// sigma^i : [n+1] -> [n], hitting i twice.
Monotone codegeneracy(std::size_t n, std::size_t i);

/// Levels 0..3 of the nerve of an internal category. Level n consists of the
/// composable strings of n arrows; level 2 is C2 and level 3 is C3.
class TruncatedNerve {
 public:
  static constexpr std::size_t kTop = 3;

  explicit TruncatedNerve(InternalCategory c);

  const InternalCategory& category() const { return c_; }
  const FinObj& level(std::size_t n) const;

  /// Edges of an n-simplex in vertex order: entry j is the arrow from vertex j to j+1.
  std::vector<Index> spine(std::size_t n, Index x) const;
  Index vertex(std::size_t n, Index x, std::size_t j) const;
  std::optional<Index> fromSpine(std::size_t n, std::span<const Index> spine) const;

  /// The action theta^* : level(theta.to) -> level(theta.from) on one simplex.
  Index act(const Monotone& theta, Index x) const;
  FinMap actMap(const Monotone& theta) const;

  FinMap face(std::size_t n, std::size_t i) const { return actMap(coface(n, i)); }
  FinMap degeneracy(std::size_t n, std::size_t i) const { return actMap(codegeneracy(n, i)); }

  /// Functoriality of the action on every composable pair of maps in the
  /// simplex category up to dimension 3, which is equivalent to the
  /// simplicial identities in that range.
  bool satisfiesSimplicialIdentities() const;

 private:
  InternalCategory c_;
  ChosenLimit c3_;
};

TruncatedNerve nerve(const InternalCategory& c);

// ---------------------------------------------------------------------------
// Adjunction witnesses

using Object = std::variant<FinObj, InternalCategory>;
using Morphism = std::variant<FinMap, InternalFunctor>;

Object domainOf(const Morphism& f);
Object codomainOf(const Morphism& f);
Morphism identityOf(const Object& x);
/// g after f; DomainMismatch across kinds or on mismatched endpoints.
Morphism composeMorphisms(const Morphism& g, const Morphism& f);
bool sameObject(const Object& a, const Object& b);

/// An adjunction L -| R made executable: the transposition bijection
/// hom(L x, y) = hom(x, R y), its inverse, unit and counit.
struct AdjunctionWitness {
  std::string leftName;
  std::string rightName;
  std::function<Object(const Object&)> left;
  std::function<Object(const Object&)> right;
  std::function<Morphism(const Morphism&)> leftMap;
  std::function<Morphism(const Morphism&)> rightMap;
  /// (x, y, f: L x -> y) |-> x -> R y.
  std::function<Morphism(const Object&, const Object&, const Morphism&)> transposeForward;
  /// (x, y, g: x -> R y) |-> L x -> y.
  std::function<Morphism(const Object&, const Object&, const Morphism&)> transposeBackward;
  std::function<Morphism(const Object&)> unit;    // x -> R L x
  std::function<Morphism(const Object&)> counit;  // L R y -> y
};

AdjunctionWitness adjunctionDiscObjects();   // disc -| (-)0
AdjunctionWitness adjunctionObjectsIndisc(); // (-)0 -| indisc
AdjunctionWitness adjunctionPi0Disc();       // Pi0 -| disc

/// f : L x -> y transposes forward and back to itself.
bool checkRoundTrip(const AdjunctionWitness& adj, const Object& x, const Object& y,
                    const Morphism& f);
/// g : x -> R y transposes back and forward to itself.
bool checkRoundTripRight(const AdjunctionWitness& adj, const Object& x, const Object& y,
                         const Morphism& g);
/// forward(b . f . L a) == R b . forward(f) . a  for a : x' -> x, b : y -> y'.
bool checkNaturality(const AdjunctionWitness& adj, const Morphism& a, const Morphism& f,
                     const Morphism& b);
/// Both triangle identities, at x (for the unit side) and y (for the counit side),
/// together with forward(f) == R f . unit_x.
bool checkTriangles(const AdjunctionWitness& adj, const Object& x, const Object& y);

/// The unit square of (-)0 -| indisc at f, checked levelwise for being a pullback.
bool unitSquareIsPullback(const InternalFunctor& f);
/// The counit square of disc -| (-)0 at f, checked levelwise for being a pullback.
bool counitSquareIsPullback(const InternalFunctor& f);

/// Maps X -> A1 correspond to 2-cells between functors disc(X) -> A.
class DiscreteCellBijection {
 public:
  DiscreteCellBijection(FinObj x, InternalCategory a);

  InternalNatTrans toCell(const FinMap& phi) const;
  FinMap toMap(const InternalNatTrans& t) const;

 private:
  FinObj x_;
  InternalCategory a_;
};

}  // namespace icat
