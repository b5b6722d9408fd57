// Copyright 2026 The Landscope Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace landscope {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (CSV, metadata, schema mismatch).
class DataError : public Error {
 public:
  using Error::Error;
};

// A metric whose defining formula degenerates on the given input
// (zero variance, empty optimum set, ...).
class UndefinedMetric : public Error {
 public:
  using Error::Error;
};

// Invalid arguments to an algorithm (bad probabilities, budget too small).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The evaluator ran out of measurement budget.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted() : Error("budget exhausted") {}
};

}  // namespace landscope
