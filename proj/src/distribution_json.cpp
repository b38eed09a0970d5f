#include "extremal/distribution_json.hpp"

#include <stdexcept>

namespace extremal::dist {

namespace {

double number_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) {
    throw std::invalid_argument(std::string("field '") + key + "' must be a number");
  }
  return v.get<double>();
}

}  // namespace

DistributionSpec from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("distribution spec must be a JSON object");
  }
  if (!j.contains("family") || !j["family"].is_string()) {
    throw std::invalid_argument("distribution spec needs a string 'family'");
  }
  const Family family = family_from_string(j["family"].get<std::string>());
  const bool takes_nu = family == Family::pareto || family == Family::power_function;
  const bool takes_theta = family != Family::gev;

  for (const auto& [key, value] : j.items()) {
    const bool known = key == "family" || (key == "theta" && takes_theta) ||
                       (key == "nu" && takes_nu) || (key == "xi" && family == Family::gev);
    if (!known) {
      throw std::invalid_argument("field '" + key + "' is not accepted for family '" +
                                  std::string(to_string(family)) + "'");
    }
  }

  const double theta = j.contains("theta") ? number_field(j, "theta") : 1.0;
  if (takes_nu && !j.contains("nu")) {
    throw std::invalid_argument("family '" + std::string(to_string(family)) + "' requires 'nu'");
  }
  switch (family) {
    case Family::uniform:
      return DistributionSpec::uniform(theta);
    case Family::exponential:
      return DistributionSpec::exponential(theta);
    case Family::logistic:
      return DistributionSpec::logistic(theta);
    case Family::pareto:
      return DistributionSpec::pareto(theta, number_field(j, "nu"));
    case Family::power_function:
      return DistributionSpec::power_function(theta, number_field(j, "nu"));
    case Family::gev:
      if (!j.contains("xi")) {
        throw std::invalid_argument("family 'gev' requires 'xi'");
      }
      return DistributionSpec::gev(number_field(j, "xi"));
  }
  throw std::invalid_argument("unhandled family");
}

DistributionSpec parse_distribution(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed distribution JSON: ") + e.what());
  }
  return from_json(j);
}

nlohmann::json to_json(const DistributionSpec& d) {
  nlohmann::json j;
  j["family"] = std::string(to_string(d.family()));
  if (d.has_theta()) {
    j["theta"] = d.theta();
  }
  if (d.has_nu()) {
    j["nu"] = d.nu();
  }
  if (d.family() == Family::gev) {
    j["xi"] = d.xi();
  }
  return j;
}

}  // namespace extremal::dist
