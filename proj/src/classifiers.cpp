#include "icat/classifiers.hpp"

#include <algorithm>

#include "icat/factorisation.hpp"
#include "icat/limits2d.hpp"
#include "icat/transfer.hpp"

namespace icat {

FullSubobjectClassifier fullSubobjectClassifier() {
  const SubobjectClassifier base = subobjectClassifier();
  InternalCategory omega = indisc(base.omega);
  const Index truth = base.top(0);
  InternalFunctor top(terminalCat(), omega, base.top, FinMap::point(omega.C1(), omega.identity(truth)));
  return FullSubobjectClassifier{std::move(omega), std::move(top)};
}

InternalFunctor classifyFullMono(const InternalFunctor& f) {
  if (!isFullMono(f)) fail(ErrorKind::NotFullMono, "functor is not a full monomorphism");
  const InternalCategory& b = f.cod();
  const FinMap chi0 = characteristicMap(f.f0());
  const InternalFunctor adjunct = indiscMap(chi0);
  return InternalFunctor(b, adjunct.cod(), chi0, compose(adjunct.f1(), endpoints(b)));
}

bool isClassifyingSquare(const InternalFunctor& f, const InternalFunctor& chi,
                         const InternalFunctor& top) {
  const InternalCategory& a = f.dom();
  return isPullback(f.f0(), FinMap::toTerminal(a.C0()), chi.f0(), top.f0()) &&
         isPullback(f.f1(), FinMap::toTerminal(a.C1()), chi.f1(), top.f1());
}

bool isStrictBiSieve(const InternalFunctor& f) {
  if (!isMono(f.f0())) return false;
  const InternalCategory& a = f.dom();
  const InternalCategory& b = f.cod();
  return isPullback(f.f1(), a.d0(), b.d0(), f.f0()) && isPullback(f.f1(), a.d1(), b.d1(), f.f0());
}

BiSieveClassification classifyStrictBiSieve(const InternalFunctor& f) {
  if (!isStrictBiSieve(f)) fail(ErrorKind::NotBiSieve, "functor is not a strict bi-sieve");
  const InternalCategory& b = f.cod();
  const SubobjectClassifier base = subobjectClassifier();
  const InternalCategory discOmega = disc(base.omega);

  const FinMap components = pi0Map(f);
  const FinMap image = factorEpiMono(components).right;
  const FinMap chi0 = compose(characteristicMap(image), componentsQuotient(b).quotient);
  InternalFunctor chi(b, discOmega, chi0, compose(chi0, b.d0()));
  InternalFunctor top(terminalCat(), discOmega, base.top, base.top);
  const bool verified = isClassifyingSquare(f, chi, top);
  return BiSieveClassification{std::move(chi), std::move(top), isMono(components), verified};
}

bool isBoolean() {
  const InternalCategory two = freeArrow();
  const InternalFunctor first(terminalCat(), two, FinMap::point(two.C0(), 0),
                              FinMap::point(two.C1(), two.identity(0)));
  const InternalFunctor second(terminalCat(), two, FinMap::point(two.C0(), 1),
                               FinMap::point(two.C1(), two.identity(1)));
  return isIsoOnObjects(classifyFullMono(first)) && isIsoOnObjects(classifyFullMono(second));
}

TwoValuedReport isTwoValued() {
  const FullSubobjectClassifier c = fullSubobjectClassifier();
  const HomCategory h = homCategory(terminalCat(), c.omega);
  TwoValuedReport r{};
  r.functorCount = h.objects().size();
  r.arrowCount = h.arrows().size();
  r.allInvertible = std::all_of(h.arrows().begin(), h.arrows().end(),
                                [](const InternalNatTrans& t) { return isInvertible(t); });
  r.freeLivingIsomorphism =
      r.allInvertible && findIsomorphism(h.asCategory(), indisc(FinObj(2))).has_value();
  return r;
}

std::vector<std::string> checkSectionCertificate(const InternalFunctor& e,
                                                 const SectionCertificate& c) {
  std::vector<std::string> problems;
  const InternalFunctor& s = c.section;
  const InternalNatTrans& eta = c.unit;
  if (!validateFunctor(s).ok()) {
    problems.push_back("section is not a functor");
    return problems;
  }
  if (!(composeFunctors(e, s) == idFunctor(e.cod()))) problems.push_back("e . s is not the identity");
  if (!validateNatTrans(eta).ok()) {
    problems.push_back("unit is not a natural transformation");
    return problems;
  }
  if (!(eta.src() == idFunctor(e.dom())) || !(eta.tgt() == composeFunctors(s, e))) {
    problems.push_back("unit has the wrong endpoints");
    return problems;
  }
  if (!isInvertible(eta)) problems.push_back("unit is not invertible");
  if (!(whiskerLeft(e, eta) == identityTrans(e))) problems.push_back("triangle e.eta fails");
  if (!(whiskerRight(eta, s) == identityTrans(s))) problems.push_back("triangle eta.s fails");
  return problems;
}

SectionCertificate sectionOfFFEpi(const InternalFunctor& e) {
  if (!isFullyFaithful(e) || !isEpiOnObjects(e)) {
    fail(ErrorKind::NotFFEpi, "functor is not fully faithful and surjective on objects");
  }
  const InternalCategory& a = e.dom();
  const InternalCategory& b = e.cod();
  const FinMap s0 = chooseSection(e.f0());
  const FullyFaithfulLifter lifter(e);

  std::vector<Index> s1(b.C1().size);
  for (Index x = 0; x < b.C1().size; ++x) s1[x] = lifter.lift(x, s0(b.target(x)), s0(b.source(x)));
  InternalFunctor s(b, a, s0, FinMap(b.C1(), a.C1(), std::move(s1)));

  // eta_x : x -> s(e(x)) is the arrow over the identity of e(x).
  std::vector<Index> eta(a.C0().size);
  for (Index x = 0; x < a.C0().size; ++x) {
    const Index ex = e.f0()(x);
    eta[x] = lifter.lift(b.identity(ex), s0(ex), x);
  }
  const InternalFunctor se = composeFunctors(s, e);
  SectionCertificate cert{s, InternalNatTrans(idFunctor(a), se, FinMap(a.C0(), a.C1(), std::move(eta)))};
  if (const auto problems = checkSectionCertificate(e, cert); !problems.empty()) {
    fail(ErrorKind::FiberNotSingleton, "section certificate failed: " + problems.front());
  }
  return cert;
}

std::size_t ChoiceAuditFragment::certified() const {
  return std::count_if(entries.begin(), entries.end(),
                       [](const auto& e) { return e.status == ChoiceAuditEntry::Status::Certified; });
}

std::size_t ChoiceAuditFragment::skipped() const {
  return std::count_if(entries.begin(), entries.end(),
                       [](const auto& e) { return e.status == ChoiceAuditEntry::Status::Skipped; });
}

std::size_t ChoiceAuditFragment::counterexamples() const {
  return std::count_if(entries.begin(), entries.end(), [](const auto& e) {
    return e.status == ChoiceAuditEntry::Status::Counterexample;
  });
}

ChoiceAuditFragment categorifiedChoiceAudit(const std::vector<InternalFunctor>& functors) {
  using Status = ChoiceAuditEntry::Status;
  ChoiceAuditFragment out;
  for (Index k = 0; k < functors.size(); ++k) {
    const InternalFunctor& e = functors[k];
    if (!validateFunctor(e).ok()) {
      out.entries.push_back({k, Status::Skipped, "not a valid functor"});
    } else if (!isFullyFaithful(e)) {
      out.entries.push_back({k, Status::Skipped, "not fully faithful"});
    } else if (!isAcute(e)) {
      out.entries.push_back({k, Status::Skipped, "not acute"});
    } else {
      try {
        sectionOfFFEpi(e);
        out.entries.push_back({k, Status::Certified, {}});
      } catch (const Error& err) {
        out.entries.push_back({k, Status::Counterexample, err.what()});
      }
    }
  }
  return out;
}

}  // namespace icat
