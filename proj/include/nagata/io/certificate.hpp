#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "json.hpp"
#include "nagata/catalog/catalog.hpp"

namespace nagata {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCertificateSchema = "nagata-certificate/1";

/// A JSON number when exactly representable as a double, else a decimal string.
json json_int(std::int64_t v);
json json_int(const mpz_class& v);
json json_poly(const IntPoly& p);

json to_json(const BettiTable& b);
json to_json(const HilbertData& h);
json to_json(const InvariantReport& r);
json to_json(const KoszulVerdict& v);
json to_json(const IdealizationSummary& s);
json to_json(const RangeReport& r);
json to_json(const Check& c);
json to_json(const Limits& l);

/// Skeleton with schema, tool version and command name.
json certificate_header(const std::string& command);

/// FNV-1a of the serialized certificate without its "timings" member.
std::string certificate_hash(const json& cert);

/// Writes <dir>/<id>-<hash>.cert.json and returns the path. Characters of id outside
/// [A-Za-z0-9._-] become '_'.
std::string persist_certificate(const std::string& dir, const std::string& id, const json& cert);

}  // namespace nagata
