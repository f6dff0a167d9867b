// Copyright 2026 The tourlink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOURLINK_REPORT_HPP_
#define TOURLINK_REPORT_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace tourlink {

using Json = nlohmann::ordered_json;

/// Thrown when an operation is called outside its contract. Construction
/// failures that are legitimate outcomes use Certificate instead.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One checked clause of a structure, with a human-readable witness for
/// failures.
struct Clause {
  std::string name;
  bool passed = true;
  std::string detail;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  void add(std::string name, bool passed, std::string detail = {}) {
    clauses_.push_back({std::move(name), passed, std::move(detail)});
  }
  /// Adds every clause of `other`, prefixing names with `prefix`.
  void merge(const VerificationReport& other, const std::string& prefix);

  bool passed() const;
  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::string& subject() const { return subject_; }

  /// First failing clause, if any.
  std::optional<Clause> first_failure() const;
  /// True iff a clause with this name exists and failed.
  bool failed(const std::string& name) const;

  Json to_json() const;
  std::string summary() const;

 private:
  std::string subject_;
  std::vector<Clause> clauses_;
};

/// Machine-readable explanation of a construction failure.
struct Certificate {
  std::string stage;
  std::string reason;
  Json witness = Json::object();

  Json to_json() const;
  std::string str() const { return stage + ": " + reason; }
};

/// Either a constructed value or the certificate explaining why the
/// construction failed.
template <class T>
class Built {
 public:
  Built(T value) : value_(std::move(value)) {}  // NOLINT(runtime/explicit)
  Built(Certificate cert) : cert_(std::move(cert)) {}  // NOLINT(runtime/explicit)

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  T& value() {
    if (!value_) throw std::logic_error("Built::value on failure: " + cert_.str());
    return *value_;
  }
  const T& value() const {
    if (!value_) throw std::logic_error("Built::value on failure: " + cert_.str());
    return *value_;
  }
  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }
  T& operator*() { return value(); }
  const T& operator*() const { return value(); }

  const Certificate& certificate() const { return cert_; }

 private:
  std::optional<T> value_;
  Certificate cert_;
};

}  // namespace tourlink

#endif  // TOURLINK_REPORT_HPP_
