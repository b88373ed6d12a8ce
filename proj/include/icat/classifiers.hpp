#pragma once

// Full subobject classifier indisc(Omega), strict bi-sieves classified by
// disc(Omega), booleanness and two-valuedness, and sections of fully faithful
// functors that are surjective on objects.

#include <optional>
#include <string>
#include <vector>

#include "icat/internal.hpp"

namespace icat {

struct FullSubobjectClassifier {
  InternalCategory omega;  // indisc(Omega); object 1 is true
  InternalFunctor top;     // 1 -> omega at true
};

FullSubobjectClassifier fullSubobjectClassifier();

/// chi_f : B -> indisc(Omega) for a full mono f : A -> B, the adjunct of the
/// characteristic map of f0. NotFullMono otherwise.
InternalFunctor classifyFullMono(const InternalFunctor& f);

/// True iff f and chi form a pullback of (chi, top) on objects and on arrows.
bool isClassifyingSquare(const InternalFunctor& f, const InternalFunctor& chi,
                         const InternalFunctor& top);

/// f0 injective and both squares d_k . f1 = f0 . d_k pullbacks.
bool isStrictBiSieve(const InternalFunctor& f);

struct BiSieveClassification {
  InternalFunctor chi;   // B -> disc(Omega)
  InternalFunctor top;   // 1 -> disc(Omega)
  bool pi0Mono;          // Pi0(f) injective
  bool pullbackVerified; // (f, chi) is a pullback of (chi, top) levelwise
};

/// chi factors through the components of B. NotBiSieve unless isStrictBiSieve(f).
BiSieveClassification classifyStrictBiSieve(const InternalFunctor& f);

/// Both endpoint inclusions 1 -> 2_E classify to functors 2_E -> indisc(Omega)
/// that are bijective on objects.
bool isBoolean();

struct TwoValuedReport {
  std::size_t functorCount;  // functors 1 -> indisc(Omega)
  std::size_t arrowCount;    // 2-cells between them
  bool allInvertible;
  bool freeLivingIsomorphism;  // the hom-category is indisc(2)
  bool twoValued() const { return functorCount == 2 && freeLivingIsomorphism; }
};

TwoValuedReport isTwoValued();

/// e . s = 1 and eta : 1 => s . e with counit the identity.
struct SectionCertificate {
  InternalFunctor section;
  InternalNatTrans unit;
};

/// Problems with a claimed certificate; empty means e . s = 1, eta is an
/// invertible 2-cell and both triangle identities hold.
std::vector<std::string> checkSectionCertificate(const InternalFunctor& e,
                                                 const SectionCertificate& c);

/// s0 is the least-preimage section of e0, s1 is lifted through the
/// fully-faithfulness pullback. NotFFEpi unless e is fully faithful and
/// surjective on objects.
SectionCertificate sectionOfFFEpi(const InternalFunctor& e);

struct ChoiceAuditEntry {
  enum class Status { Certified, Skipped, Counterexample };
  Index item;
  Status status;
  std::string reason;
};

struct ChoiceAuditFragment {
  std::vector<ChoiceAuditEntry> entries;
  std::size_t certified() const;
  std::size_t skipped() const;
  std::size_t counterexamples() const;
};

/// Every acute fully faithful functor gets a verified certificate or a counterexample.
ChoiceAuditFragment categorifiedChoiceAudit(const std::vector<InternalFunctor>& functors);

}  // namespace icat
