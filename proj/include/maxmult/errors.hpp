/*
   Copyright 2026 The maxmult Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAXMULT_ERRORS_HPP
#define MAXMULT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxmult {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ideal file, polynomial text or ring header.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
  using Error::Error;
};

/// A Groebner computation exceeded its pair or degree budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on inputs that violate its stated hypotheses.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string name, const std::string& detail)
      : Error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Random choices landed on the degenerate locus; retrying with another seed
/// is expected to succeed.
class RetriableError : public Error {
 public:
  using Error::Error;
};

/// Seed replicas produced different answers for a quantity that must be
/// generic. Never resolved silently.
class SeedDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace maxmult

#endif  // MAXMULT_ERRORS_HPP
