// Command-line front end: validate documents, run the constructions on them,
// compare with the oracle and run the axiom audit.
//
// Exit codes: 0 success or verified, 1 refuted or counterexample, 2 input error.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "icat/audit.hpp"
#include "icat/classifiers.hpp"
#include "icat/factorisation.hpp"
#include "icat/io.hpp"
#include "icat/limits2d.hpp"
#include "icat/oracle.hpp"

namespace {

using icat::io::Json;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;

struct Options {
  std::string format = "text";
  std::size_t sizeBound = icat::kDefaultSizeBound;
};

void emit(const Options& opt, const std::vector<std::string>& summary, const Json& doc) {
  if (opt.format == "text") {
    for (const std::string& line : summary) std::cout << line << "\n";
  }
  std::cout << icat::io::dump(doc);
}

std::string sizes(const icat::InternalCategory& c) {
  return std::to_string(c.C0().size) + " objects, " + std::to_string(c.C1().size) + " arrows";
}

icat::InternalCategory loadCategory(const std::string& path) {
  const Json j = icat::io::readFile(path);
  return icat::io::categoryFromJson(j, path + ": $");
}

icat::InternalFunctor loadFunctor(const std::string& path) {
  const Json j = icat::io::readFile(path);
  return icat::io::functorFromJson(j, path + ": $");
}

int runValidate(const Options& opt, const std::string& path) {
  const Json j = icat::io::readFile(path);
  const std::string kind = icat::io::documentKind(j);
  Json doc;
  doc["kind"] = "validation";
  doc["document"] = kind;
  try {
    std::string line;
    if (kind == "category") {
      const icat::InternalCategory c = icat::io::categoryFromJson(j, path + ": $");
      line = "valid internal category: " + sizes(c);
    } else if (kind == "functor") {
      const icat::InternalFunctor f = icat::io::functorFromJson(j, path + ": $");
      line = "valid internal functor: " + sizes(f.dom()) + " -> " + sizes(f.cod());
    } else if (kind == "transformation") {
      const icat::InternalNatTrans t = icat::io::natTransFromJson(j, path + ": $");
      line = "valid internal natural transformation over " + sizes(t.src().dom());
    } else {
      icat::fail(icat::ErrorKind::ParseError, path + ": cannot validate a document of kind " + kind);
    }
    doc["valid"] = true;
    emit(opt, {line}, doc);
    return kOk;
  } catch (const icat::Error& e) {
    if (e.kind() != icat::ErrorKind::ValidationError) throw;
    doc["valid"] = false;
    doc["report"] = e.what();
    emit(opt, {std::string("invalid: ") + e.what()}, doc);
    return kRefuted;
  }
}

int runFactor(const Options& opt, const std::string& path, const std::string& system) {
  const icat::InternalFunctor f = loadFunctor(path);
  const icat::BaseOFS ofs = system == "iso-all" ? icat::isoAll() : icat::epiMono();
  const icat::LiftedFactorisation lf = icat::factorInternal(f, ofs);
  Json doc;
  doc["kind"] = "factorisation";
  doc["system"] = ofs.name;
  doc["middle"] = icat::io::toJson(lf.middle);
  doc["left"] = icat::io::toJson(lf.left);
  doc["right"] = icat::io::toJson(lf.right);
  emit(opt, {"factorisation through " + sizes(lf.middle) + " using " + ofs.name}, doc);
  return kOk;
}

int runHom(const Options& opt, const std::string& xPath, const std::string& yPath) {
  const icat::InternalHom h = icat::internalHom(loadCategory(xPath), loadCategory(yPath), opt.sizeBound);
  Json doc;
  doc["kind"] = "internalHom";
  doc["levels"] = {h.levelSize(0), h.levelSize(1), h.levelSize(2)};
  doc["carrier"] = icat::io::toJson(h.carrier());
  emit(opt,
       {"internal hom: " + std::to_string(h.levelSize(0)) + " functors, " + std::to_string(h.levelSize(1)) +
        " transformations, " + std::to_string(h.levelSize(2)) + " composable pairs"},
       doc);
  return kOk;
}

int runPower(const Options& opt, const std::string& path) {
  const icat::PowerByTwo p = icat::powerByTwo(loadCategory(path));
  Json doc;
  doc["kind"] = "powerByTwo";
  doc["carrier"] = icat::io::toJson(p.carrier);
  doc["sourceProj"] = icat::io::toJson(p.sourceProj);
  doc["targetProj"] = icat::io::toJson(p.targetProj);
  emit(opt, {"power by 2: " + sizes(p.carrier)}, doc);
  return kOk;
}

int runCopower(const Options& opt, const std::string& path) {
  const icat::CopowerByTwo p = icat::copowerByTwo(loadCategory(path));
  Json doc;
  doc["kind"] = "copowerByTwo";
  doc["carrier"] = icat::io::toJson(p.carrier);
  doc["coproj0"] = icat::io::toJson(p.coproj0);
  doc["coproj1"] = icat::io::toJson(p.coproj1);
  emit(opt, {"copower by 2: " + sizes(p.carrier)}, doc);
  return kOk;
}

int runClassify(const Options& opt, const std::string& path, bool biSieve) {
  const icat::InternalFunctor f = loadFunctor(path);
  Json doc;
  if (biSieve) {
    doc["kind"] = "biSieveClassification";
    if (!icat::isStrictBiSieve(f)) {
      doc["classified"] = false;
      emit(opt, {"not a strict bi-sieve"}, doc);
      return kRefuted;
    }
    const icat::BiSieveClassification c = icat::classifyStrictBiSieve(f);
    doc["classified"] = c.pullbackVerified;
    doc["pi0Mono"] = c.pi0Mono;
    doc["chi"] = icat::io::toJson(c.chi);
    emit(opt,
         {std::string("classified by disc(Omega); square ") +
          (c.pullbackVerified ? "is" : "is not") + " a pullback"},
         doc);
    return c.pullbackVerified ? kOk : kRefuted;
  }
  doc["kind"] = "fullMonoClassification";
  if (!icat::isFullMono(f)) {
    doc["classified"] = false;
    emit(opt, {"not a full monomorphism"}, doc);
    return kRefuted;
  }
  const icat::FullSubobjectClassifier omega = icat::fullSubobjectClassifier();
  const icat::InternalFunctor chi = icat::classifyFullMono(f);
  const bool square = icat::isClassifyingSquare(f, chi, omega.top);
  doc["classified"] = square;
  doc["chi"] = icat::io::toJson(chi);
  emit(opt, {std::string("classified by indisc(Omega); square ") + (square ? "is" : "is not") + " a pullback"},
       doc);
  return square ? kOk : kRefuted;
}

int runSection(const Options& opt, const std::string& path) {
  const icat::InternalFunctor e = loadFunctor(path);
  Json doc;
  doc["kind"] = "sectionCertificate";
  if (!icat::isFullyFaithful(e) || !icat::isEpiOnObjects(e)) {
    doc["certified"] = false;
    emit(opt, {"not fully faithful and surjective on objects"}, doc);
    return kRefuted;
  }
  const icat::SectionCertificate c = icat::sectionOfFFEpi(e);
  doc["certified"] = true;
  doc["section"] = icat::io::toJson(c.section);
  doc["unit"] = icat::io::toJson(c.unit);
  emit(opt, {"section certified: e.s = 1, invertible unit, triangle identities hold"}, doc);
  return kOk;
}

int runAudit(const Options& opt, const icat::AuditConfig& config) {
  const icat::AuditReport r = icat::runAudit(config);
  std::vector<std::string> summary;
  summary.push_back("corpus of " + std::to_string(r.corpusSize) + " categories (seed " +
                    std::to_string(config.corpus.seed) + ")");
  for (const icat::AuditEntry& e : r.entries) {
    summary.push_back("  " + e.axiom + ": " + std::string(icat::verdictName(e.verdict)) + " (" + e.summary + ")");
  }
  summary.push_back(r.asExpected() ? "all verdicts as expected" : "unexpected verdicts");
  emit(opt, summary, icat::io::toJson(r));
  return r.asExpected() ? kOk : kRefuted;
}

int runOracleCompare(const Options& opt, const std::vector<std::string>& hom, const std::string& power) {
  icat::oracle::Comparison c;
  Json doc;
  doc["kind"] = "oracleComparison";
  if (!hom.empty()) {
    doc["construction"] = "internalHom";
    c = icat::oracle::compareHom(loadCategory(hom[0]), loadCategory(hom[1]), opt.sizeBound);
  } else if (!power.empty()) {
    doc["construction"] = "powerByTwo";
    c = icat::oracle::comparePower(loadCategory(power), opt.sizeBound);
  } else {
    icat::fail(icat::ErrorKind::ParseError, "oracle-compare needs --hom A B or --power A");
  }
  doc["match"] = c.match();
  doc["objects"] = {c.internalObjects, c.oracleObjects};
  doc["arrows"] = {c.internalArrows, c.oracleArrows};
  doc["isomorphic"] = c.isomorphic;
  emit(opt,
       {std::string(c.match() ? "match" : "mismatch") + ": objects " + std::to_string(c.internalObjects) + "/" +
        std::to_string(c.oracleObjects) + ", arrows " + std::to_string(c.internalArrows) + "/" +
        std::to_string(c.oracleArrows)},
       doc);
  return c.match() ? kOk : kRefuted;
}

int exitCodeFor(icat::ErrorKind kind) {
  switch (kind) {
    case icat::ErrorKind::NotFullMono:
    case icat::ErrorKind::NotBiSieve:
    case icat::ErrorKind::NotFFEpi:
    case icat::ErrorKind::NotInClass:
    case icat::ErrorKind::NonCommuting:
    case icat::ErrorKind::FiberNotSingleton:
      return kRefuted;
    default:
      return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Category theory internal to finite sets"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--size-bound", opt.sizeBound, "Limit on enumerated candidates")->capture_default_str();

  std::string file, second, system = "epi-mono";
  bool biSieve = false;

  auto* validate = app.add_subcommand("validate", "Parse and validate a category, functor or transformation");
  validate->add_option("file", file)->required();

  auto* factor = app.add_subcommand("factor", "Factor a functor through the lifted factorisation system");
  factor->add_option("file", file)->required();
  factor->add_option("--system", system, "Base factorisation system")
      ->check(CLI::IsMember({"epi-mono", "iso-all"}))
      ->capture_default_str();

  auto* hom = app.add_subcommand("hom", "Internal hom [X, Y] by the end formula");
  hom->add_option("x", file)->required();
  hom->add_option("y", second)->required();

  auto* power = app.add_subcommand("power", "Power by 2 (arrow category)");
  power->add_option("file", file)->required();

  auto* copower = app.add_subcommand("copower", "Copower by 2");
  copower->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "Classify a full mono (or a strict bi-sieve)");
  classify->add_option("file", file)->required();
  classify->add_flag("--bisieve", biSieve, "Classify as a strict bi-sieve by disc(Omega)");

  auto* section = app.add_subcommand("section", "Section of a fully faithful functor surjective on objects");
  section->add_option("file", file)->required();

  icat::AuditConfig config;
  std::vector<std::string> suites;
  auto* audit = app.add_subcommand("audit", "Check the axioms on a generated corpus");
  audit->add_option("--seed", config.corpus.seed)->capture_default_str();
  audit->add_option("--max-objects", config.corpus.maxObjects)->capture_default_str();
  audit->add_option("--max-arrows", config.corpus.maxArrows)->capture_default_str();
  audit->add_option("--count", config.corpus.count, "Corpus size")->capture_default_str();
  audit->add_option("--suite", suites, "Axiom to run (repeatable); default all")
      ->check(CLI::IsMember(icat::auditAxioms()));
  audit->add_option("--nno-max-size", config.nnoMaxSize)->capture_default_str();

  std::vector<std::string> homPair;
  std::string powerFile;
  auto* compare = app.add_subcommand("oracle-compare", "Compare a construction with the naive oracle");
  compare->add_option("--hom", homPair, "Categories X Y")->expected(2);
  compare->add_option("--power", powerFile, "Category A");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return runValidate(opt, file);
    if (*factor) return runFactor(opt, file, system);
    if (*hom) return runHom(opt, file, second);
    if (*power) return runPower(opt, file);
    if (*copower) return runCopower(opt, file);
    if (*classify) return runClassify(opt, file, biSieve);
    if (*section) return runSection(opt, file);
    if (*audit) {
      config.sizeBound = opt.sizeBound;
      config.suites = {suites.begin(), suites.end()};
      return runAudit(opt, config);
    }
    if (*compare) return runOracleCompare(opt, homPair, powerFile);
  } catch (const icat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitCodeFor(e.kind());
  }
  return kInputError;
}
