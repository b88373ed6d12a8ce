#pragma once

// Structured-text (JSON) serialization of sets, maps, internal categories,
// functors, transformations and audit reports. The schema is described in
// docs/format.md.

#include <string>
#include <string_view>

#include "json.hpp"

#include "icat/audit.hpp"
#include "icat/internal.hpp"

namespace icat::io {

using Json = nlohmann::ordered_json;

Json toJson(const FinObj& x);
Json toJson(const FinMap& f);
Json toJson(const InternalCategory& c);
Json toJson(const InternalFunctor& f);
Json toJson(const InternalNatTrans& t);
Json toJson(const AuditReport& r);

/// Parsers take the path of `j` inside the document for error messages.
/// ParseError names the offending field; ValidationError carries the
/// validator report when the tables parse but violate an axiom.
FinObj finObjFromJson(const Json& j, const std::string& path = "$");
FinMap finMapFromJson(const Json& j, const std::string& path = "$");
InternalCategory categoryFromJson(const Json& j, const std::string& path = "$");
InternalFunctor functorFromJson(const Json& j, const std::string& path = "$");
InternalNatTrans natTransFromJson(const Json& j, const std::string& path = "$");

/// Syntax errors become ParseError with line and column.
Json parse(std::string_view text);
Json readFile(const std::string& path);
/// Two-space indented, fields in a fixed order, trailing newline.
std::string dump(const Json& j);

/// "category", "functor" or "transformation", from the kind field or, failing
/// that, from the fields present.
std::string documentKind(const Json& j);

}  // namespace icat::io
