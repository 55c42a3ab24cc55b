// Copyright 2026 The radixmul Authors.
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

#ifndef RADIXMUL_ERRORS_H_
#define RADIXMUL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace radixmul {

// Root of every error thrown by the library. Datapath errors (overflow,
// sizing, selection, control) indicate a modeling bug, not bad user input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value does not fit the declared width.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A shift or add result does not fit the requested output width.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Operand widths that must agree do not.
class WidthError : public Error {
 public:
  using Error::Error;
};

// The multiplexer was asked for an input it does not have.
class SelectionError : public Error {
 public:
  using Error::Error;
};

// Barrel shifter control out of range.
class ControlError : public Error {
 public:
  using Error::Error;
};

// An adder or output register is too narrow for the value it must hold.
class SizingError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Two multipliers disagreed on a product.
class CorrectnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace radixmul

#endif  // RADIXMUL_ERRORS_H_
