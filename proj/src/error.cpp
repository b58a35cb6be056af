/* Copyright 2026 The coalg Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "coalg/error.hpp"

namespace coalg {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::NotAnAlgebra: return "NotAnAlgebra";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotGrouplike: return "NotGrouplike";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::NotCommutativeFamily: return "NotCommutativeFamily";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::MonoidMismatch: return "MonoidMismatch";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::NotGradedFamily: return "NotGradedFamily";
    case ErrorKind::NotInAugmentationIdeal: return "NotInAugmentationIdeal";
    case ErrorKind::NotIntegralDomain: return "NotIntegralDomain";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace coalg
