#include "mlcmine/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "mlcmine/errors.hpp"

namespace mlcm {

namespace {

using nlohmann::json;

json itemsets_to_json(const std::vector<FrequentItemset>& sets, int max_level) {
  json out = json::array();
  for (const FrequentItemset& entry : sets) {
    json items = json::array();
    json display = json::array();
    for (const ItemCode& code : entry.itemset.items()) {
      items.push_back(code.dotted());
      display.push_back(code.starred(max_level));
    }
    out.push_back({{"items", std::move(items)},
                   {"display", std::move(display)},
                   {"support", entry.support}});
  }
  return out;
}

std::vector<FrequentItemset> itemsets_from_json(const json& array) {
  std::vector<FrequentItemset> out;
  for (const json& entry : array) {
    std::vector<ItemCode> items;
    for (const json& token : entry.at("items")) {
      items.push_back(ItemCode::parse_dotted(token.get<std::string>()));
    }
    out.push_back({Itemset(std::move(items)), entry.at("support").get<std::uint32_t>()});
  }
  return out;
}

}  // namespace

std::string report_to_json(const MiningResult& result, int indent) {
  json root;
  root["schema_version"] = 1;
  root["algorithm"] = result.algorithm;
  root["incomplete"] = result.incomplete;
  root["max_level"] = result.max_level;
  root["transaction_count"] = result.transaction_count;
  root["minsup"] = result.minsup;
  root["constraint"] = result.constraint_text;
  root["neg"] = result.neg_text;
  root["aff"] = result.aff_text;
  root["counters"] = {{"candidates_generated", result.counters.candidates_generated},
                      {"support_computations", result.counters.support_computations}};
  root["elapsed_ms"] = result.elapsed_ms;

  json levels = json::array();
  for (const LevelResult& lr : result.levels) {
    json passes = json::array();
    for (const MiningPass& p : lr.passes) {
      passes.push_back({{"k", p.k},
                        {"candidates", p.candidates},
                        {"frequent", itemsets_to_json(p.frequent, result.max_level)},
                        {"filtered", itemsets_to_json(p.filtered, result.max_level)}});
    }
    levels.push_back({{"level", lr.level},
                      {"minsup", lr.minsup},
                      {"passes", std::move(passes)},
                      {"union_filtered",
                       itemsets_to_json(lr.union_filtered, result.max_level)}});
  }
  root["levels"] = std::move(levels);
  return root.dump(indent) + "\n";
}

MiningResult report_from_json(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what());
  }
  try {
    if (root.at("schema_version").get<int>() != 1) {
      throw ParseError("unsupported report schema_version");
    }
    MiningResult result;
    result.algorithm = root.at("algorithm").get<std::string>();
    result.incomplete = root.at("incomplete").get<bool>();
    result.max_level = root.at("max_level").get<int>();
    result.transaction_count = root.at("transaction_count").get<std::uint64_t>();
    result.minsup = root.at("minsup").get<std::vector<std::uint32_t>>();
    result.constraint_text = root.at("constraint").get<std::string>();
    result.neg_text = root.at("neg").get<std::string>();
    result.aff_text = root.at("aff").get<std::string>();
    result.counters.candidates_generated =
        root.at("counters").at("candidates_generated").get<std::uint64_t>();
    result.counters.support_computations =
        root.at("counters").at("support_computations").get<std::uint64_t>();
    result.elapsed_ms = root.at("elapsed_ms").get<double>();
    for (const json& level : root.at("levels")) {
      LevelResult lr;
      lr.level = level.at("level").get<int>();
      lr.minsup = level.at("minsup").get<std::uint32_t>();
      for (const json& pass : level.at("passes")) {
        MiningPass p;
        p.k = pass.at("k").get<int>();
        p.candidates = pass.at("candidates").get<std::uint64_t>();
        p.frequent = itemsets_from_json(pass.at("frequent"));
        p.filtered = itemsets_from_json(pass.at("filtered"));
        lr.passes.push_back(std::move(p));
      }
      lr.union_filtered = itemsets_from_json(level.at("union_filtered"));
      result.levels.push_back(std::move(lr));
    }
    return result;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON missing or mistyped field: ") + e.what());
  }
}

std::string report_to_csv(const MiningResult& result) {
  std::ostringstream out;
  out << "level,k,itemset,support,passes_constraint\n";
  for (const LevelResult& lr : result.levels) {
    for (const MiningPass& p : lr.passes) {
      for (const FrequentItemset& entry : p.frequent) {
        const bool passes =
            std::find(p.filtered.begin(), p.filtered.end(), entry) != p.filtered.end();
        out << lr.level << ',' << p.k << ',' << entry.itemset.starred(result.max_level)
            << ',' << entry.support << ',' << (passes ? "true" : "false") << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace mlcm
