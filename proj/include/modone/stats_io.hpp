#pragma once

#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "modone/haar.hpp"
#include "modone/local_stats.hpp"

namespace modone {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// All floats are printed with 12 significant digits.
inline std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace detail {
inline void csv_config_header(std::ostringstream& os, const KeyValues& config) {
  for (const auto& [k, v] : config) os << "# " << k << " = " << v << "\n";
}
inline nlohmann::json json_config(const KeyValues& config) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : config) j[k] = v;
  return j;
}
}  // namespace detail

// Histogram CSV: bin_lo,bin_hi,mass,reference.  Outliers are carried as
// trailing comment lines, one value each.
inline std::string csv_histogram(const Histogram& h, const std::vector<double>& reference,
                                 const KeyValues& config) {
  std::ostringstream os;
  detail::csv_config_header(os, config);
  os << "bin_lo,bin_hi,mass,reference\n";
  for (int i = 0; i < h.num_bins; ++i) {
    const double lo = h.bin_width * i, hi = h.bin_width * (i + 1);
    const double ref = i < static_cast<int>(reference.size()) ? reference[static_cast<std::size_t>(i)] : 0.0;
    os << format_sig12(lo) << ',' << format_sig12(hi) << ','
       << format_sig12(h.masses[static_cast<std::size_t>(i)]) << ',' << format_sig12(ref) << "\n";
  }
  for (double o : h.outliers) os << "# outlier," << format_sig12(o) << "\n";
  return os.str();
}

inline nlohmann::json json_histogram(const Histogram& h, const std::vector<double>& reference,
                                     const KeyValues& config) {
  nlohmann::json bins = nlohmann::json::array();
  for (int i = 0; i < h.num_bins; ++i) {
    bins.push_back({{"bin_lo", h.bin_width * i},
                    {"bin_hi", h.bin_width * (i + 1)},
                    {"mass", h.masses[static_cast<std::size_t>(i)]},
                    {"reference",
                     i < static_cast<int>(reference.size()) ? reference[static_cast<std::size_t>(i)] : 0.0}});
  }
  return {{"config", detail::json_config(config)},
          {"bins", bins},
          {"outliers", h.outliers},
          {"sample_count", h.sample_count}};
}

// Distribution CSV: k,mass,stderr.
inline std::string csv_distribution(const std::map<std::int64_t, double>& masses,
                                    const std::map<std::int64_t, double>& stderrs,
                                    const KeyValues& config) {
  std::ostringstream os;
  detail::csv_config_header(os, config);
  os << "k,mass,stderr\n";
  for (const auto& [k, m] : masses) {
    const auto it = stderrs.find(k);
    os << k << ',' << format_sig12(m) << ','
       << format_sig12(it == stderrs.end() ? 0.0 : it->second) << "\n";
  }
  return os.str();
}

inline nlohmann::json json_distribution(const std::map<std::int64_t, double>& masses,
                                        const std::map<std::int64_t, double>& stderrs,
                                        const KeyValues& config) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [k, m] : masses) {
    const auto it = stderrs.find(k);
    rows.push_back({{"k", k}, {"mass", m}, {"stderr", it == stderrs.end() ? 0.0 : it->second}});
  }
  return {{"config", detail::json_config(config)}, {"distribution", rows}};
}

using ScalarRows = std::vector<std::tuple<std::string, double, double>>;

// Scalar CSV: name,value,stderr.
inline std::string csv_scalars(const ScalarRows& rows, const KeyValues& config) {
  std::ostringstream os;
  detail::csv_config_header(os, config);
  os << "name,value,stderr\n";
  for (const auto& [name, value, err] : rows)
    os << name << ',' << format_sig12(value) << ',' << format_sig12(err) << "\n";
  return os.str();
}

inline nlohmann::json json_scalars(const ScalarRows& rows, const KeyValues& config) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [name, value, err] : rows)
    out.push_back({{"name", name}, {"value", value}, {"stderr", err}});
  return {{"config", detail::json_config(config)}, {"scalars", out}};
}

}  // namespace modone
