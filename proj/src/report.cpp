#include "hopfcyc/report.hpp"

#include <algorithm>

namespace hopfcyc {

void CheckReport::append(const CheckReport& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

bool CheckReport::passed() const {
  return std::all_of(items_.begin(), items_.end(), [](const CheckItem& i) { return i.passed; });
}

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [](const CheckItem& i) { return !i.passed; }));
}

const CheckItem* CheckReport::find_failure(const std::string& id) const {
  for (const auto& item : items_) {
    if (!item.passed && item.id == id) {
      return &item;
    }
  }
  return nullptr;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const auto& item : items_) {
    out += "check " + item.id;
    if (item.degree >= 0) {
      out += " degree=" + std::to_string(item.degree);
    }
    if (!item.instance.empty()) {
      out += " " + item.instance;
    }
    out += item.passed ? ": pass\n" : ": FAIL\n";
    if (!item.passed && !item.witness.empty()) {
      out += "  witness: " + item.witness + "\n";
    }
  }
  out += "summary: " + std::to_string(items_.size() - failures()) + " passed, " +
         std::to_string(failures()) + " failed\n";
  return out;
}

}  // namespace hopfcyc
