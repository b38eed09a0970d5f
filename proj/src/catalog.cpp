#include "extremal/catalog.hpp"

#include "canonical_config.hpp"
#include "extremal/distribution_json.hpp"

namespace extremal {

namespace {

Catalog load() {
  const auto j = nlohmann::json::parse(detail::kCanonicalConfigJson);
  Catalog c;
  c.version = j.at("version").get<int>();
  c.table_n = j.at("table_n").get<std::vector<long>>();
  for (const auto& m : j.at("members")) {
    c.members.push_back(dist::from_json(m));
  }
  for (const auto& m : j.at("mc_members")) {
    c.mc_members.push_back(dist::from_json(m));
  }
  c.mc_n = j.at("mc_n").get<std::vector<long>>();
  c.gev_concavity_xi = j.at("gev_concavity_xi").get<std::vector<double>>();
  return c;
}

}  // namespace

const Catalog& canonical_catalog() {
  static const Catalog catalog = load();
  return catalog;
}

}  // namespace extremal
