#include "xyq/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace xyq {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_rate_csv(std::ostream& os, const RateSeries& series) {
  os << "t,lambda\n";
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    os << format_double(series.times[i]) << ',' << format_double(series.values[i]) << '\n';
  }
}

void write_zeros_csv(std::ostream& os, const std::vector<FisherZeroLine>& lines) {
  os << "n,k,tau,t,flag\n";
  for (const auto& line : lines) {
    for (const auto& s : line.samples) {
      os << line.n << ',' << format_double(s.k) << ',' << format_double(s.tau) << ','
         << format_double(s.t) << ',' << (s.unbounded ? 1 : 0) << '\n';
    }
  }
}

void write_scan_csv(std::ostream& os, const DeltaMap& map) {
  os << "r,phi,delta\n";
  for (std::size_t i = 0; i < map.r_values.size(); ++i) {
    for (std::size_t j = 0; j < map.phi_values.size(); ++j) {
      os << format_double(map.r_values[i]) << ',' << format_double(map.phi_values[j]) << ','
         << format_double(map.at(i, j)) << '\n';
    }
  }
}

void write_phase_csv(std::ostream& os, const PhaseSeries& phases,
                     const WindingSeries& winding) {
  if (winding.times.size() != phases.times.size()) {
    throw std::invalid_argument("write_phase_csv: phase and winding series disagree");
  }
  os << "t,phi_total,phi_dyn,phi_geo,nu\n";
  for (std::size_t i = 0; i < phases.times.size(); ++i) {
    os << format_double(phases.times[i]) << ',' << format_double(phases.phi_total[i]) << ','
       << format_double(phases.phi_dyn[i]) << ',' << format_double(phases.phi_geo[i]) << ','
       << winding.nu[i] << '\n';
  }
}

void write_entropy_csv(std::ostream& os, const EntropyProfile& profile) {
  os << "k,entropy\n";
  for (std::size_t i = 0; i < profile.momenta.size(); ++i) {
    os << format_double(profile.momenta[i]) << ',' << format_double(profile.entropy[i])
       << '\n';
  }
}

void write_pairing_csv(std::ostream& os, const std::vector<std::pair<int, double>>& table) {
  os << "d,J\n";
  for (const auto& [d, j] : table) {
    os << d << ',' << format_double(j) << '\n';
  }
}

std::vector<std::vector<std::string>> parse_csv(std::istream& is) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace xyq
