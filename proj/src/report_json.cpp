#include "cayley/report_json.hpp"

namespace cayley {

using nlohmann::json;

json to_json(const FuzzReport& r) {
  json j{{"group", group_name(r.group)},
         {"trials", r.trials},
         {"samples", r.samples},
         {"pass", r.pass},
         {"coverage", r.coverage}};
  if (r.witness) {
    json word = json::array();
    for (Gen g : r.witness->word) word.push_back(gen_name(g));
    j["witness"] = {{"word", word},
                    {"nf_before", render(r.witness->nf_before)},
                    {"nf_after", render(r.witness->nf_after)},
                    {"check", r.witness->check}};
  }
  return j;
}

json to_json(const LinearityReport& r) {
  json sizes = json::array();
  for (const SizeStat& s : r.sizes)
    sizes.push_back({{"n", s.n}, {"max_steps", s.max_steps}, {"max_ratio", s.max_ratio}});
  return {{"group", group_name(r.group)},
          {"gen", gen_name(r.gen)},
          {"sizes", sizes},
          {"slope", r.slope},
          {"verdict", r.verdict}};
}

LinearityReport linearity_from_json(const json& j) {
  LinearityReport r;
  r.group = parse_group(j.at("group").get<std::string>());
  r.gen = parse_gen(j.at("gen").get<std::string>());
  for (const json& s : j.at("sizes"))
    r.sizes.push_back({s.at("n").get<std::size_t>(), s.at("max_steps").get<std::uint64_t>(),
                       s.at("max_ratio").get<double>()});
  r.slope = j.value("slope", 0.0);
  r.verdict = j.at("verdict").get<bool>();
  return r;
}

json to_json(const std::vector<QuadraticStat>& rows, GroupId g) {
  json out = json::array();
  for (const QuadraticStat& q : rows)
    out.push_back({{"n", q.n}, {"max_steps", q.max_steps}, {"steps_over_n2", q.ratio}});
  return {{"group", group_name(g)}, {"word_to_nf", out}};
}

json to_json(const ProbeReport& r) {
  json pts = json::array();
  for (const ProbePoint& p : r.points) pts.push_back({{"n", p.n}, {"max_ratio", p.max_ratio}});
  return {{"group", group_name(r.group)}, {"points", pts}, {"max_ratio", r.max_ratio}};
}

json to_json(const std::vector<NonQgRow>& rows) {
  json out = json::array();
  for (const NonQgRow& r : rows)
    out.push_back({{"k", r.k}, {"word_len", r.word_len}, {"nf_len", r.nf_len}, {"ratio", r.ratio}});
  return {{"group", "z2wrz2"}, {"family", "lamp at (k,k)"}, {"rows", out}};
}

}  // namespace cayley
