#include "cfroots/report.hpp"

#include <sstream>

#include "cfroots/errors.hpp"

namespace cfroots {

nlohmann::ordered_json to_json(const Polynomial& a, const IsolationResult& result,
                               bool include_stats) {
  nlohmann::ordered_json doc;
  doc["degree"] = a.degree();
  doc["bitsize"] = a.bitsize();
  auto roots = nlohmann::ordered_json::array();
  for (const auto& r : result.roots) {
    nlohmann::ordered_json item;
    if (const auto* e = std::get_if<ExactRoot>(&r)) {
      item["type"] = "exact";
      item["value"] = e->value.to_string();
    } else {
      const auto& iv = std::get<RootInterval>(r);
      item["type"] = "interval";
      item["lo"] = iv.lo.to_string();
      item["hi"] = iv.hi.to_string();
    }
    roots.push_back(std::move(item));
  }
  doc["roots"] = std::move(roots);
  if (include_stats) {
    const RunStats& s = result.stats;
    doc["stats"] = {
        {"nodes", s.nodes_visited},
        {"plb_calls", s.plb_calls},
        {"sum_lg_bounds", s.sum_lg_bounds},
        {"max_coeff_bitsize", s.max_coeff_bitsize},
    };
  }
  return doc;
}

std::vector<RootRecord> records_from_json(const nlohmann::json& roots) {
  std::vector<RootRecord> out;
  for (const auto& item : roots) {
    const std::string type = item.at("type").get<std::string>();
    if (type == "exact") {
      out.push_back(ExactRoot{Rational::parse(item.at("value").get<std::string>())});
    } else if (type == "interval") {
      out.push_back(RootInterval{Rational::parse(item.at("lo").get<std::string>()),
                                 Rational::parse(item.at("hi").get<std::string>())});
    } else {
      throw parse_error("unknown record type '" + type + "'", 0);
    }
  }
  return out;
}

std::string to_text(const std::vector<RootRecord>& records) {
  std::ostringstream os;
  for (const auto& r : records) {
    if (const auto* e = std::get_if<ExactRoot>(&r)) {
      os << "= " << e->value.to_string() << '\n';
    } else {
      const auto& iv = std::get<RootInterval>(r);
      os << '(' << iv.lo.to_string() << ", " << iv.hi.to_string() << ")\n";
    }
  }
  return os.str();
}

std::string stats_to_text(const RunStats& s) {
  std::ostringstream os;
  os << "nodes " << s.nodes_visited << '\n'
     << "plb_calls " << s.plb_calls << '\n'
     << "sum_lg_bounds " << s.sum_lg_bounds << '\n'
     << "max_coeff_bitsize " << s.max_coeff_bitsize << '\n'
     << "max_depth " << s.max_depth << '\n'
     << "exact_roots " << s.exact_roots_found << '\n'
     << "intervals " << s.intervals_found << '\n';
  return os.str();
}

}  // namespace cfroots
