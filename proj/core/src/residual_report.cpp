#include "detproc/residual_report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace detproc {

bool ResidualEntry::pass() const {
  if (!std::isfinite(residual)) return false;
  return bound == Bound::upper ? residual < tolerance : residual > tolerance;
}

void ResidualReport::add(std::string check_id, std::string point, double residual, double tolerance,
                         ResidualEntry::Bound bound) {
  entries_.push_back({std::move(check_id), std::move(point), residual, tolerance, bound});
}

void ResidualReport::append(const ResidualReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool ResidualReport::all_pass() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.pass(); });
}

double ResidualReport::max_residual(const std::string& prefix) const {
  double worst = 0.0;
  for (const auto& e : entries_)
    if (e.check_id.rfind(prefix, 0) == 0) worst = std::max(worst, e.residual);
  return worst;
}

bool ResidualReport::passes(const std::string& prefix) const {
  bool any = false;
  for (const auto& e : entries_) {
    if (e.check_id.rfind(prefix, 0) != 0) continue;
    any = true;
    if (!e.pass()) return false;
  }
  return any;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void ResidualReport::write_csv(std::ostream& os) const {
  os << "check_id,point,residual,tolerance,pass\n";
  for (const auto& e : entries_) {
    os << e.check_id << ',' << '"' << e.point << '"' << ',' << format_double(e.residual) << ','
       << format_double(e.tolerance) << ',' << (e.pass() ? "true" : "false") << '\n';
  }
}

}  // namespace detproc
