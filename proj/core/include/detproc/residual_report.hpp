#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace detproc {

/// One numerical check. An `upper` check passes when residual < tolerance; a
/// `lower` check (a variant that must break an identity) when residual > tolerance.
struct ResidualEntry {
  enum class Bound { upper, lower };

  std::string check_id;
  std::string point;
  double residual = 0.0;
  double tolerance = 0.0;
  Bound bound = Bound::upper;

  bool pass() const;
};

class ResidualReport {
 public:
  void add(std::string check_id, std::string point, double residual, double tolerance,
           ResidualEntry::Bound bound = ResidualEntry::Bound::upper);
  void append(const ResidualReport& other);

  const std::vector<ResidualEntry>& entries() const noexcept { return entries_; }
  bool all_pass() const;
  /// Largest residual among entries whose id starts with `prefix`.
  double max_residual(const std::string& prefix) const;
  /// True if every entry with the prefix passes (and at least one exists).
  bool passes(const std::string& prefix) const;

  /// CSV: check_id,point,residual,tolerance,pass
  void write_csv(std::ostream& os) const;

 private:
  std::vector<ResidualEntry> entries_;
};

/// Decimal form with 17 significant digits.
std::string format_double(double v);

}  // namespace detproc
