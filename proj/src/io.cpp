#include "histo/io.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace histo {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

nlohmann::json to_json(const SupportSet& set) {
  nlohmann::json supports = nlohmann::json::array();
  for (const Support& s : set.supports()) supports.push_back({s.alpha, s.beta});
  nlohmann::json j{{"supports", supports}, {"class", std::string(to_string(set.support_class()))}};
  if (set.arc()) {
    j["rho"] = set.arc()->rho;
    j["taus"] = set.arc()->taus;
  }
  return j;
}

SupportSet support_set_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("rho") && j.contains("taus")) {
      ArcFamily fam;
      fam.rho = j.at("rho").get<double>();
      fam.taus = j.at("taus").get<std::vector<double>>();
      return arc_to_supports(fam);
    }
    std::vector<Support> supports;
    for (const auto& pair : j.at("supports")) {
      if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("each support must be [alpha, beta]");
      supports.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    SupportClass cls = SupportClass::General;
    if (j.contains("class")) {
      const auto parsed = parse_support_class(j.at("class").get<std::string>());
      if (!parsed) throw std::invalid_argument("unknown support class");
      cls = *parsed;
    }
    return SupportSet(std::move(supports), cls);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed support set: ") + e.what());
  }
}

nlohmann::json to_json(const FeketeResult& result) {
  const OptimizerDiagnostics& d = result.diagnostics;
  nlohmann::json diag{{"starts", d.starts},
                      {"iterations", d.iterations},
                      {"best_gap", d.best_gap},
                      {"stationarity", d.stationarity},
                      {"converged", d.converged},
                      {"non_unique", d.non_unique},
                      {"method", result.method == FeketeMethod::ClosedForm ? "ClosedForm" : "Optimized"},
                      {"symmetric", result.symmetric},
                      {"verified", result.verified},
                      {"det_basis", std::string(to_string(result.det_basis))}};
  return nlohmann::json{{"r", result.set.size()},
                        {"mode", std::string(to_string(result.mode))},
                        {"endpoints", endpoints(result.set)},
                        {"log_abs_det", result.log_abs_det},
                        {"diagnostics", diag},
                        {"set", to_json(result.set)}};
}

std::vector<std::size_t> parse_range(std::string_view text) {
  std::vector<std::size_t> parts;
  std::string_view rest = text;
  while (true) {
    const auto colon = rest.find(':');
    const std::string_view token = rest.substr(0, colon);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed range '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  if (parts.size() > 3) throw std::invalid_argument("range takes at most three fields: '" + std::string(text) + "'");
  if (parts.size() == 1) return parts;
  const std::size_t a = parts[0], b = parts[1], step = parts.size() == 3 ? parts[2] : 1;
  if (step == 0) throw std::invalid_argument("range step must be positive");
  if (a > b) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  std::vector<std::size_t> out;
  for (std::size_t v = a; v <= b; v += step) out.push_back(v);
  return out;
}

std::string lebesgue_csv(std::span<const GrowthRow> rows) {
  std::string out = "r,lebesgue,argmax_x,grid_size\n";
  for (const GrowthRow& row : rows) {
    out += std::to_string(row.r);
    if (row.estimate) {
      out += "," + format_double(row.estimate->value) + "," + format_double(row.estimate->argmax_x) + "," +
             std::to_string(row.estimate->grid_size);
    } else {
      out += ",,,";
    }
    out += "\n";
  }
  return out;
}

}  // namespace histo
