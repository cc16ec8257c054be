// Copyright 2026 The lddqec Authors
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

#ifndef LDDQEC_CODE_IO_H
#define LDDQEC_CODE_IO_H

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "lddqec/code.h"

namespace lddqec {

/// Input could not be opened.
struct FileMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input or an invariant violation. The message names the source and line
/// where applicable.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text formats. '#' starts a comment; blank lines are ignored.
//
//   code:    n <int> / k <int> / (n-k) x "stabilizer P" / k x "logical_x P" / k x "logical_z P"
//   decoder: one "<syndrome bits> <P>" line per syndrome, all 2^(n-k) present
//   dd:      one "generator P" line per generator

StabilizerCode read_code(std::istream &in, const std::string &source = "<stream>");
DecoderMap read_decoder(std::istream &in, const StabilizerCode &code, const std::string &source = "<stream>");
DecouplingGroup read_dd(std::istream &in, const std::string &source = "<stream>");

StabilizerCode load_code(const std::filesystem::path &path);
DecoderMap load_decoder(const std::filesystem::path &path, const StabilizerCode &code);
DecouplingGroup load_dd(const std::filesystem::path &path);

void write_code(std::ostream &out, const StabilizerCode &code);
void write_decoder(std::ostream &out, const StabilizerCode &code, const DecoderMap &decoder);
void write_dd(std::ostream &out, const DecouplingGroup &dd);

void store_code(const std::filesystem::path &path, const StabilizerCode &code);

}  // namespace lddqec

#endif  // LDDQEC_CODE_IO_H
