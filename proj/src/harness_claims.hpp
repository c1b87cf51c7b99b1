#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coronalab/harness.hpp"

namespace coronalab::detail {

// Collects the claims evaluated on one instance.
class Claims {
 public:
  Claims(std::vector<Detail>& out, std::string instance)
      : out_(out), instance_(std::move(instance)) {}

  void equal(const std::string& claim, long expected, long actual, std::string note = {}) {
    add(claim, expected == actual ? Outcome::Pass : Outcome::Fail, expected, actual,
        std::move(note));
  }

  // lo <= actual <= hi; a missing side is not checked.
  void bound(const std::string& claim, std::optional<long> lo, std::optional<long> hi,
             long actual, std::string note = {}) {
    const bool ok = (!lo || *lo <= actual) && (!hi || actual <= *hi);
    add(claim, ok ? Outcome::Pass : Outcome::Fail, Json::array({lo ? Json(*lo) : Json(),
                                                                hi ? Json(*hi) : Json()}),
        actual, std::move(note));
  }

  void holds(const std::string& claim, bool ok, Json expected, Json actual,
             std::string note = {}, Json witness = {}) {
    add(claim, ok ? Outcome::Pass : Outcome::Fail, std::move(expected), std::move(actual),
        std::move(note));
    if (!ok) out_.back().witness = std::move(witness);
  }

  void report(const std::string& claim, bool agrees, Json expected, Json actual,
              std::string note = {}) {
    add(claim, Outcome::Reported, std::move(expected), std::move(actual), std::move(note));
    out_.back().agrees = agrees;
  }

  void skip(const std::string& claim, std::string reason) {
    add(claim, Outcome::Skip, {}, {}, std::move(reason));
  }

  const std::string& instance() const { return instance_; }

 private:
  void add(const std::string& claim, Outcome o, Json expected, Json actual, std::string note) {
    Detail d;
    d.instance = instance_;
    d.claim = claim;
    d.outcome = o;
    d.expected = std::move(expected);
    d.actual = std::move(actual);
    d.note = std::move(note);
    out_.push_back(std::move(d));
  }

  std::vector<Detail>& out_;
  std::string instance_;
};

using CheckBody = void (*)(Claims&, const Instance&, const Caps&);

// Defined in harness_checks.cpp, indexed like check_catalog().
CheckBody check_body(const std::string& id);

}  // namespace coronalab::detail
