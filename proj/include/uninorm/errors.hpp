/*
 * Copyright 2026 The uninorm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uninorm {

/// Raised when an argument falls outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an operator or specification cannot be built.
///
/// Carries the individual violated conditions so callers (the DSL in
/// particular) can attach source positions to each of them.
class ConstructionError : public std::invalid_argument {
 public:
  struct Item {
    std::string code;
    std::string message;
    std::vector<std::size_t> summands;
  };

  explicit ConstructionError(const std::string& what)
      : std::invalid_argument(what), items_{{"construction", what, {}}} {}

  ConstructionError(const std::string& what, std::vector<Item> items)
      : std::invalid_argument(what), items_(std::move(items)) {}

  const std::vector<Item>& items() const { return items_; }

 private:
  std::vector<Item> items_;
};

/// Raised by the decomposition engine for precondition failures that are not
/// reported as diagnostics (closure violations, pairing failures).
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uninorm
