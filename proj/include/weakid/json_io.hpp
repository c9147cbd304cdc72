#pragma once

#include <json.hpp>

#include "weakid/bcs.hpp"
#include "weakid/disc.hpp"
#include "weakid/homsearch.hpp"
#include "weakid/subgroup.hpp"
#include "weakid/weakid.hpp"

namespace weakid {

using nlohmann::json;

// All serializers emit objects with sorted keys (nlohmann::json's default
// object ordering), so equal values dump to identical bytes. stats.wall_ms
// is the only field excluded from the determinism contract; strip it with
// stripWallTime before byte comparisons.

json statsToJson(const SearchStats& s);
json verdictToJson(const Verdict& v);
json heightReportToJson(const HeightReport& r);
json chainReportToJson(const ChainReport& r);
json subgroupToJson(const Subgroup& s);
json centralizerChainToJson(const CentralizerChain& c);
json discVerdictToJson(const DiscVerdict& v);
json abelianVerdictToJson(const AbelianVerdict& v, int rank);
json abelianHomToJson(const AbelianHom& h);

const char* statusName(Verdict::Status s);
const char* statusName(DiscVerdict::Status s);

// Removes every "wall_ms" field, recursively.
json stripWallTime(json j);

}  // namespace weakid
