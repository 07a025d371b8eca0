#ifndef HOPFCYC_REPORT_HPP
#define HOPFCYC_REPORT_HPP

#include <string>
#include <vector>

namespace hopfcyc {

/// One pass/fail line of a checker report.
struct CheckItem {
  std::string id;
  int degree = -1;  // -1 when the check has no degree
  std::string instance;
  bool passed = true;
  std::string witness;  // empty on success
};

/// Ordered list of checks. Failures are data, never exceptions.
class CheckReport {
 public:
  void add(CheckItem item) { items_.push_back(std::move(item)); }
  void append(const CheckReport& other);

  const std::vector<CheckItem>& items() const { return items_; }
  bool passed() const;
  std::size_t failures() const;
  /// First failing item with the given id, or nullptr.
  const CheckItem* find_failure(const std::string& id) const;

  /// "check <id> [degree=n] [instance]: pass|FAIL" lines, witnesses indented.
  std::string to_text() const;

 private:
  std::vector<CheckItem> items_;
};

}  // namespace hopfcyc

#endif  // HOPFCYC_REPORT_HPP
