#pragma once

#include "core/linalg.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace hompois {

inline constexpr std::size_t kDefaultMaxWitnesses = 32;

/// One failing instance of an identity: which identity, at which basis
/// tuple (0-based indices, in the identity's argument order), and the nonzero
/// residual LHS - RHS in the target space.
struct Witness {
  std::string identity;
  std::vector<std::size_t> tuple;
  Vec residual;
};

/// Result of a check. The verdict is derived, never stored: a report passes
/// iff it carries no witness. Child reports push their witnesses up when they
/// are absorbed, so a composite fails whenever any child fails.
class CheckReport {
 public:
  explicit CheckReport(std::string name = {}, std::size_t max_witnesses = kDefaultMaxWitnesses);

  const std::string& name() const { return name_; }
  bool passed() const { return witnesses_.empty(); }
  std::size_t max_witnesses() const { return max_witnesses_; }

  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::vector<CheckReport>& sub_reports() const { return subs_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::map<std::string, bool>& flags() const { return flags_; }
  std::size_t evaluated() const { return evaluated_; }
  std::size_t failures() const { return failures_; }

  // Records one evaluated identity instance; a nonzero residual becomes a
  // witness (subject to the cap; the failure count is never capped).
  void record(const std::string& identity, std::vector<std::size_t> tuple, Vec residual);
  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  void set_flag(const std::string& key, bool value) { flags_[key] = value; }
  bool flag(const std::string& key) const;

  // Appends a child; its witnesses (prefixed with the child name) and counts
  // are merged into this report.
  void absorb(CheckReport sub);
  // Appends a child for information only; its witnesses are not merged.
  void attach(CheckReport sub) { subs_.push_back(std::move(sub)); }
  const CheckReport* find(const std::string& name) const;

 private:
  void push_witness(Witness w);

  std::string name_;
  std::size_t max_witnesses_;
  std::vector<Witness> witnesses_;
  std::vector<CheckReport> subs_;
  std::vector<std::string> notes_;
  std::map<std::string, bool> flags_;
  std::size_t evaluated_ = 0;
  std::size_t failures_ = 0;
};

}  // namespace hompois
