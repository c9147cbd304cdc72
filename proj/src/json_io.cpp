#include "weakid/json_io.hpp"

namespace weakid {

const char* statusName(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Holds:
      return "HOLDS";
    case Verdict::Status::Fails:
      return "FAILS";
    default:
      return "UNKNOWN";
  }
}

const char* statusName(DiscVerdict::Status s) {
  switch (s) {
    case DiscVerdict::Status::Discriminating:
      return "DISCRIMINATING";
    case DiscVerdict::Status::NotDiscriminating:
      return "NOT_DISCRIMINATING";
    default:
      return "UNKNOWN";
  }
}

json statsToJson(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"assignments_tested", s.assignments_tested},
          {"centralizer_prunes", s.centralizer_prunes},
          {"wall_ms", s.wall_ms}};
}

json verdictToJson(const Verdict& v) {
  json j{{"status", statusName(v.status)},
         {"height", v.height},
         {"group", v.group_label},
         {"words", v.words},
         {"selections_tested", v.selections_tested},
         {"stats", statsToJson(v.stats)}};
  if (v.status == Verdict::Status::Fails) {
    j["failing_selection"] = v.failing_selection;
    json witness = json::array();
    for (std::size_t c = 0; c < v.witness.size(); ++c)
      witness.push_back({{"copy", c}, {"assignment", v.witness[c]}});
    j["witness"] = std::move(witness);
  }
  if (v.verbal_subgroup_order) j["verbal_subgroup_order"] = *v.verbal_subgroup_order;
  if (v.quotient_order) j["quotient_order"] = *v.quotient_order;
  return j;
}

json heightReportToJson(const HeightReport& r) {
  json per = json::array();
  for (const auto& v : r.per_height) per.push_back(verdictToJson(v));
  json j{{"unknown", r.unknown}, {"per_height", std::move(per)}};
  if (r.height)
    j["height"] = *r.height;
  else
    j["height"] = nullptr;
  return j;
}

json chainReportToJson(const ChainReport& r) {
  json steps = json::array();
  for (const auto& v : r.steps) steps.push_back(verdictToJson(v));
  return {{"overall", statusName(r.overall)}, {"steps", std::move(steps)}};
}

json subgroupToJson(const Subgroup& s) {
  json names = json::array();
  for (int x : s.members()) names.push_back(s.parent().name(x));
  return {{"order", s.size()}, {"elements", s.members()}, {"element_names", std::move(names)}};
}

json centralizerChainToJson(const CentralizerChain& c) {
  const FiniteGroup& g = c.centralizers.front().parent();
  json steps = json::array();
  // Step 0 is Cen(emptyset) = G with no added element.
  steps.push_back({{"added_element", nullptr},
                   {"centralizer_order", c.centralizers[0].size()}});
  for (std::size_t i = 0; i < c.added_elements.size(); ++i)
    steps.push_back({{"added_element", g.name(c.added_elements[i])},
                     {"centralizer_order", c.centralizers[i + 1].size()}});
  return {{"length", c.length()}, {"complete", c.complete}, {"steps", std::move(steps)}};
}

json discVerdictToJson(const DiscVerdict& v) {
  json j{{"status", statusName(v.status)}, {"group", v.group_label}};
  if (v.status == DiscVerdict::Status::NotDiscriminating) {
    json cert = json::array();
    for (const auto& [a, b] : v.certificate) cert.push_back({a, b});
    j["certificate"] = std::move(cert);
  }
  if (v.witness_pair)
    j["witness_pair"] = {{"phi", v.witness_pair->first}, {"psi", v.witness_pair->second}};
  return j;
}

json abelianVerdictToJson(const AbelianVerdict& v, int rank) {
  json j{{"is_identity", v.is_identity}, {"rank", rank}, {"explanation", v.explanation}};
  json sums = json::object();
  for (const auto& [gen, sum] : v.exponent_sums) sums["g" + std::to_string(gen)] = sum;
  j["exponent_sums"] = std::move(sums);
  if (!v.is_identity) {
    json w = json::object();
    for (const auto& [gen, vec] : v.witness) w["g" + std::to_string(gen)] = vec;
    j["witness"] = std::move(w);
  }
  return j;
}

json abelianHomToJson(const AbelianHom& h) {
  return {{"rank", h.rank}, {"arity", h.n}, {"blocks", h.blocks}};
}

json stripWallTime(json j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    for (auto& [key, value] : j.items()) value = stripWallTime(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = stripWallTime(value);
  }
  return j;
}

}  // namespace weakid
