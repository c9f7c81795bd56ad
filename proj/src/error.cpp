/* Copyright 2026 The qrep Authors. All Rights Reserved.
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
 */

#include "qrep/error.hpp"

namespace qrep {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::DuplicateArtifactId: return "DuplicateArtifactId";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::InvalidPipeline: return "InvalidPipeline";
    case ErrorCode::UnboundPlaceholder: return "UnboundPlaceholder";
    case ErrorCode::TemplateSyntax: return "TemplateSyntax";
    case ErrorCode::UnsupportedBackendKind: return "UnsupportedBackendKind";
    case ErrorCode::TranscriptSealed: return "TranscriptSealed";
    case ErrorCode::UnmatchedRequest: return "UnmatchedRequest";
    case ErrorCode::DigestExhausted: return "DigestExhausted";
    case ErrorCode::BindFailure: return "BindFailure";
    case ErrorCode::PathTooLong: return "PathTooLong";
    case ErrorCode::CorruptArchive: return "CorruptArchive";
    case ErrorCode::UnparsableRecipe: return "UnparsableRecipe";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::BadEnumValue: return "BadEnumValue";
    case ErrorCode::InconsistentRecord: return "InconsistentRecord";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace qrep
