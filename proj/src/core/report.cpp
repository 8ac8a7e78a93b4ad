#include "core/error.hpp"
#include "core/report.hpp"

#include <algorithm>

namespace hompois {

CheckReport::CheckReport(std::string name, std::size_t max_witnesses)
    : name_(std::move(name)), max_witnesses_(std::max<std::size_t>(1, max_witnesses)) {}

void CheckReport::push_witness(Witness w) {
  ++failures_;
  if (witnesses_.size() < max_witnesses_) witnesses_.push_back(std::move(w));
}

void CheckReport::record(const std::string& identity, std::vector<std::size_t> tuple, Vec residual) {
  ++evaluated_;
  if (is_zero(residual)) return;
  push_witness(Witness{identity, std::move(tuple), std::move(residual)});
}

bool CheckReport::flag(const std::string& key) const {
  auto it = flags_.find(key);
  return it != flags_.end() && it->second;
}

void CheckReport::absorb(CheckReport sub) {
  evaluated_ += sub.evaluated_;
  for (const auto& w : sub.witnesses_) {
    if (witnesses_.size() >= max_witnesses_) break;
    witnesses_.push_back(Witness{sub.name_ + "/" + w.identity, w.tuple, w.residual});
  }
  failures_ += sub.failures_;
  subs_.push_back(std::move(sub));
}

const CheckReport* CheckReport::find(const std::string& name) const {
  for (const auto& s : subs_) {
    if (s.name_ == name) return &s;
  }
  return nullptr;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Dimension: return "dimension mismatch";
    case ErrorKind::Missing: return "missing component";
    case ErrorKind::Unbound: return "unbound parameter";
    case ErrorKind::Argument: return "invalid argument";
    case ErrorKind::Precondition: return "precondition failed";
    case ErrorKind::Postcondition: return "postcondition failed";
  }
  return "error";
}

void require(const CheckReport& report, const std::string& what) {
  if (!report.passed()) throw Error(ErrorKind::Precondition, what, report);
}

void ensure(const CheckReport& report, const std::string& what) {
  if (!report.passed()) throw Error(ErrorKind::Postcondition, what, report);
}

}  // namespace hompois
