// Copyright 2026 The hemine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEMINE_ERROR_H_
#define HEMINE_ERROR_H_

#include <stdexcept>
#include <string>

namespace hemine {

// Base of every error the library throws. The CLI maps UsageError to exit
// code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class InvalidDateRange : public UsageError {
 public:
  using UsageError::UsageError;
};

class NotARepository : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class SpanOutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyEventList : public Error {
 public:
  using Error::Error;
};

class KeyMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace hemine

#endif  // HEMINE_ERROR_H_
