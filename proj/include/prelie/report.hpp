#ifndef PRELIE_REPORT_HPP
#define PRELIE_REPORT_HPP

#include <string>
#include <utility>

namespace prelie {

/// Result of a check_* operation: verdict plus a human-readable witness of
/// the first violation found.
struct CheckReport {
  bool ok = true;
  std::string detail;

  explicit operator bool() const { return ok; }

  static CheckReport pass() { return {}; }
  static CheckReport fail(std::string why) { return {false, std::move(why)}; }
};

}  // namespace prelie

#endif  // PRELIE_REPORT_HPP
