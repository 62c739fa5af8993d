/*
   Copyright 2026 the gsss authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace gsss {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// prime generation
class InvalidBitLength : public Error {
 public:
  using Error::Error;
};
class InsufficientPrimes : public Error {
 public:
  using Error::Error;
};

// access structures
class StructureInvalid : public Error {
 public:
  using Error::Error;
};
class ClosureTooLarge : public Error {
 public:
  using Error::Error;
};

// dealing / reconstruction
class EmptySubset : public Error {
 public:
  using Error::Error;
};
class UnknownParticipant : public Error {
 public:
  using Error::Error;
};
class EmptyCoalition : public Error {
 public:
  using Error::Error;
};
class DuplicateShare : public Error {
 public:
  using Error::Error;
};

// threshold scheme
class InvalidParams : public Error {
 public:
  using Error::Error;
};
class NotEnoughShares : public Error {
 public:
  using Error::Error;
};
class DuplicateX : public Error {
 public:
  using Error::Error;
};

// root counting / attack analysis
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};
class DegreeZero : public Error {
 public:
  using Error::Error;
};

// serialization
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsss
