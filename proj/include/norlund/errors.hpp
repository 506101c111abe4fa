/*
   Copyright 2026 The norlund authors

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

namespace norlund {

/// A quantity was requested outside the validity range of the chosen formula.
class DomainError : public std::domain_error {
   public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Series inversion was attempted on a series with vanishing constant term.
class ZeroConstantTerm : public DomainError {
   public:
    explicit ZeroConstantTerm(const std::string& what) : DomainError(what) {}
};

/// A coefficient appeared on the wrong parity slot of an even/odd polynomial.
class ParityViolation : public std::logic_error {
   public:
    explicit ParityViolation(const std::string& what) : std::logic_error(what) {}
};

/// Two routes that must agree produced different values.
class InternalInconsistency : public std::logic_error {
   public:
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace norlund
