#pragma once

#include <json.hpp>

#include "posspan/posbasis.hpp"

namespace posspan {

using Json = nlohmann::json;

Json ratVecToJson(const Vec& v);
Vec ratVecFromJson(const Json& j);

Json matToJson(const Mat& m);
Mat matFromJson(const Json& j);

Json witnessToJson(const EquivWitness& w);
EquivWitness witnessFromJson(const Json& j);

// {"schema": 1, "verdict": ..., "certificate": {"kind": ..., "values": [...]},
//  "witness": ...}; witness omitted when absent.
Json certificateToJson(const std::string& verdict, const std::string& kind, const Vec& values,
                       const std::optional<EquivWitness>& witness = std::nullopt);

struct ParsedCertificate {
    std::string verdict;
    std::string kind;
    Vec values;
    std::optional<EquivWitness> witness;
};

ParsedCertificate certificateFromJson(const Json& j);

Json pssResultToJson(const PssResult& r);

Json decompositionToJson(const Decomposition& d);
Decomposition decompositionFromJson(const Json& j);

Json posBasisReportToJson(const PosBasisReport& r);
PosBasisReport posBasisReportFromJson(const Json& j);

}  // namespace posspan
