#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "xyq/dqpt.hpp"
#include "xyq/observables.hpp"

namespace xyq {

/// Shortest-width formatting that survives a text round trip: 17 significant
/// digits, so strtod(format_double(x)) == x bit-for-bit (also for inf/nan).
std::string format_double(double x);

// CSV emitters.  Header row, comma separator, LF line endings, round-trip
// float formatting throughout.

void write_rate_csv(std::ostream& os, const RateSeries& series);                    // t,lambda
void write_zeros_csv(std::ostream& os, const std::vector<FisherZeroLine>& lines);   // n,k,tau,t,flag
void write_scan_csv(std::ostream& os, const DeltaMap& map);                         // r,phi,delta
void write_phase_csv(std::ostream& os, const PhaseSeries& phases,
                     const WindingSeries& winding);  // t,phi_total,phi_dyn,phi_geo,nu
void write_entropy_csv(std::ostream& os, const EntropyProfile& profile);            // k,entropy
void write_pairing_csv(std::ostream& os,
                       const std::vector<std::pair<int, double>>& table);           // d,J

/// Rows of comma-separated cells; the inverse of the emitters for testing.
std::vector<std::vector<std::string>> parse_csv(std::istream& is);

}  // namespace xyq
