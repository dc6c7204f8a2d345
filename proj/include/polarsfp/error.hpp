// Copyright 2026 The polarsfp Authors
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

namespace polarsfp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched image dimensions, channel counts or map shapes.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An argument outside its documented domain (even blur kernel, bits > 16, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Bad or unknown configuration key/value, or an unusable asset catalog.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Metric evaluation impossible (empty mask, empty report list).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// File-level failures. Subclasses distinguish the failure mode.
class FormatError : public Error {
 public:
  using Error::Error;
};

class MalformedHeaderError : public FormatError {
 public:
  using FormatError::FormatError;
};

class TruncatedPayloadError : public FormatError {
 public:
  using FormatError::FormatError;
};

class DimensionOverflowError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// A file that should exist could not be opened or written.
class IoError : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace polarsfp
