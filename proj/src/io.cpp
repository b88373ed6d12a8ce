#include "icat/io.hpp"

#include <fstream>
#include <sstream>

namespace icat::io {

namespace {

[[noreturn]] void parseFail(const std::string& path, const std::string& what) {
  fail(ErrorKind::ParseError, path + ": " + what);
}

const Json& field(const Json& j, const std::string& path, const char* name) {
  if (!j.is_object()) parseFail(path, "expected an object");
  const auto it = j.find(name);
  if (it == j.end()) parseFail(path + "." + name, "missing field");
  return *it;
}

std::size_t natural(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    parseFail(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

void requireValid(const ValidationReport& r, const std::string& path, const char* what) {
  if (!r.ok()) fail(ErrorKind::ValidationError, path + ": not a valid " + what + ": " + r.summary());
}

/// A map given either in full or, inside a category, as a bare table with
/// known domain and codomain.
FinMap mapWithShape(const Json& j, const std::string& path, const FinObj& dom, const FinObj& cod) {
  if (j.is_array()) {
    std::vector<Index> table;
    for (std::size_t k = 0; k < j.size(); ++k) table.push_back(natural(j[k], path + "[" + std::to_string(k) + "]"));
    if (table.size() != dom.size) {
      parseFail(path, "table has length " + std::to_string(table.size()) + ", expected " +
                          std::to_string(dom.size));
    }
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (table[k] >= cod.size) parseFail(path + "[" + std::to_string(k) + "]", "value out of range");
    }
    return FinMap(dom, cod, std::move(table));
  }
  FinMap f = finMapFromJson(j, path);
  if (!(f.dom() == dom)) parseFail(path + ".dom", "expected size " + std::to_string(dom.size));
  if (!(f.cod() == cod)) parseFail(path + ".cod", "expected size " + std::to_string(cod.size));
  return f;
}

}  // namespace

Json toJson(const FinObj& x) {
  Json j;
  j["size"] = x.size;
  j["labels"] = x.labels;
  return j;
}

Json toJson(const FinMap& f) {
  Json j;
  j["dom"] = toJson(f.dom());
  j["cod"] = toJson(f.cod());
  j["table"] = f.table();
  return j;
}

Json toJson(const InternalCategory& c) {
  Json j;
  j["kind"] = "category";
  j["C0"] = toJson(c.C0());
  j["C1"] = toJson(c.C1());
  j["d0"] = toJson(c.d0());
  j["d1"] = toJson(c.d1());
  j["i"] = toJson(c.i());
  j["m"] = toJson(c.m());
  return j;
}

Json toJson(const InternalFunctor& f) {
  Json j;
  j["kind"] = "functor";
  j["dom"] = toJson(f.dom());
  j["cod"] = toJson(f.cod());
  j["f0"] = toJson(f.f0());
  j["f1"] = toJson(f.f1());
  return j;
}

Json toJson(const InternalNatTrans& t) {
  Json j;
  j["kind"] = "transformation";
  j["src"] = toJson(t.src());
  j["tgt"] = toJson(t.tgt());
  j["alpha"] = toJson(t.alpha());
  return j;
}

Json toJson(const AuditReport& r) {
  Json config;
  config["seed"] = r.config.corpus.seed;
  config["maxObjects"] = r.config.corpus.maxObjects;
  config["maxArrows"] = r.config.corpus.maxArrows;
  config["count"] = r.config.corpus.count;
  Json constructors = Json::array();
  for (Constructor c : r.config.corpus.enabled) constructors.push_back(constructorName(c));
  config["constructors"] = constructors;
  config["sizeBound"] = r.config.sizeBound;
  config["functorSamples"] = r.config.functorSamples;
  config["nnoMaxSize"] = r.config.nnoMaxSize;
  config["baseMaxSize"] = r.config.baseMaxSize;
  config["suites"] = r.config.suites;

  Json entries = Json::array();
  for (const AuditEntry& e : r.entries) {
    Json entry;
    entry["axiom"] = e.axiom;
    entry["verdict"] = verdictName(e.verdict);
    entry["summary"] = e.summary;
    entry["witness"] = e.witness;
    entries.push_back(std::move(entry));
  }
  Json j;
  j["kind"] = "auditReport";
  j["config"] = std::move(config);
  j["corpusSize"] = r.corpusSize;
  j["entries"] = std::move(entries);
  j["asExpected"] = r.asExpected();
  return j;
}

FinObj finObjFromJson(const Json& j, const std::string& path) {
  const std::size_t size = natural(field(j, path, "size"), path + ".size");
  std::vector<std::string> labels;
  if (const auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) parseFail(path + ".labels", "expected an array of strings");
    for (std::size_t k = 0; k < it->size(); ++k) {
      if (!(*it)[k].is_string()) parseFail(path + ".labels[" + std::to_string(k) + "]", "expected a string");
      labels.push_back((*it)[k].get<std::string>());
    }
    if (!labels.empty() && labels.size() != size) {
      parseFail(path + ".labels", "has " + std::to_string(labels.size()) + " entries for a set of size " +
                                      std::to_string(size));
    }
  }
  return labels.empty() ? FinObj(size) : FinObj(size, std::move(labels));
}

FinMap finMapFromJson(const Json& j, const std::string& path) {
  const FinObj dom = finObjFromJson(field(j, path, "dom"), path + ".dom");
  const FinObj cod = finObjFromJson(field(j, path, "cod"), path + ".cod");
  const Json& table = field(j, path, "table");
  if (!table.is_array()) parseFail(path + ".table", "expected an array");
  return mapWithShape(table, path + ".table", dom, cod);
}

InternalCategory categoryFromJson(const Json& j, const std::string& path) {
  const FinObj c0 = finObjFromJson(field(j, path, "C0"), path + ".C0");
  const FinObj c1 = finObjFromJson(field(j, path, "C1"), path + ".C1");
  const FinMap d0 = mapWithShape(field(j, path, "d0"), path + ".d0", c1, c0);
  const FinMap d1 = mapWithShape(field(j, path, "d1"), path + ".d1", c1, c0);
  const FinMap i = mapWithShape(field(j, path, "i"), path + ".i", c0, c1);
  const FinObj c2 = pullback(d1, d0).apex();
  const FinMap m = mapWithShape(field(j, path, "m"), path + ".m", c2, c1);
  InternalCategory c(d0, d1, i, m);
  requireValid(validateCategory(c), path, "internal category");
  return c;
}

InternalFunctor functorFromJson(const Json& j, const std::string& path) {
  InternalCategory dom = categoryFromJson(field(j, path, "dom"), path + ".dom");
  InternalCategory cod = categoryFromJson(field(j, path, "cod"), path + ".cod");
  const FinMap f0 = mapWithShape(field(j, path, "f0"), path + ".f0", dom.C0(), cod.C0());
  const FinMap f1 = mapWithShape(field(j, path, "f1"), path + ".f1", dom.C1(), cod.C1());
  InternalFunctor f(std::move(dom), std::move(cod), f0, f1);
  requireValid(validateFunctor(f), path, "internal functor");
  return f;
}

InternalNatTrans natTransFromJson(const Json& j, const std::string& path) {
  InternalFunctor src = functorFromJson(field(j, path, "src"), path + ".src");
  InternalFunctor tgt = functorFromJson(field(j, path, "tgt"), path + ".tgt");
  if (!(src.dom() == tgt.dom()) || !(src.cod() == tgt.cod())) {
    parseFail(path + ".tgt", "not parallel to src");
  }
  const FinMap alpha = mapWithShape(field(j, path, "alpha"), path + ".alpha", src.dom().C0(), src.cod().C1());
  InternalNatTrans t(std::move(src), std::move(tgt), alpha);
  requireValid(validateNatTrans(t), path, "internal natural transformation");
  return t;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

Json readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse(buffer.str());
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string documentKind(const Json& j) {
  if (!j.is_object()) parseFail("$", "expected an object");
  if (const auto it = j.find("kind"); it != j.end() && it->is_string()) return it->get<std::string>();
  if (j.contains("alpha")) return "transformation";
  if (j.contains("f0")) return "functor";
  if (j.contains("C0")) return "category";
  parseFail("$.kind", "cannot tell what the document describes");
}

}  // namespace icat::io
