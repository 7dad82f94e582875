/* Copyright (C) 2026 The idlat Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef IDLAT_ERRORS_HPP
#define IDLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idlat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. The CLI maps these to exit code 2.
class ParseError : public Error
{
public:
  using Error::Error;
};

/// A mathematical precondition failed. The CLI maps these to exit code 1.
class DomainError : public Error
{
public:
  using Error::Error;
};

class ContextMismatch : public DomainError
{
public:
  ContextMismatch() : DomainError("ring elements live in different quotient rings") {}
};

class DimensionMismatch : public DomainError
{
public:
  using DomainError::DomainError;
};

class NotSquarefree : public DomainError
{
public:
  using DomainError::DomainError;
};

class ZeroConstantTerm : public DomainError
{
public:
  using DomainError::DomainError;
};

/// gcd(f, phi) != 1. Carries the gcd, rendered as a polynomial string.
class NotCoprime : public DomainError
{
public:
  NotCoprime(const std::string& what, std::string gcd)
      : DomainError(what), gcd_(std::move(gcd))
  {}
  const std::string& gcd() const noexcept { return gcd_; }

private:
  std::string gcd_;
};

class NotPrimeSpot : public NotCoprime
{
public:
  using NotCoprime::NotCoprime;
};

class NotMember : public DomainError
{
public:
  using DomainError::DomainError;
};

class NotSublattice : public DomainError
{
public:
  using DomainError::DomainError;
};

class RankDeficient : public DomainError
{
public:
  using DomainError::DomainError;
};

class IrrationalInput : public DomainError
{
public:
  using DomainError::DomainError;
};

class UnsupportedModulus : public DomainError
{
public:
  using DomainError::DomainError;
};

class UnsupportedDimension : public DomainError
{
public:
  using DomainError::DomainError;
};

class ZeroInput : public DomainError
{
public:
  using DomainError::DomainError;
};

/// Lattice enumeration visited more nodes than its budget allows.
class BudgetExceeded : public DomainError
{
public:
  using DomainError::DomainError;
};

class BracketFailure : public DomainError
{
public:
  using DomainError::DomainError;
};

class IterationFailure : public DomainError
{
public:
  using DomainError::DomainError;
};

} // namespace idlat

#endif // IDLAT_ERRORS_HPP
