// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License.  You
// may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied.  See the License for the specific language governing
// permissions and limitations under the License.

#ifndef ADKIT_TAPE_IO_HPP
#define ADKIT_TAPE_IO_HPP

#include "adkit/tape.hpp"

#include <iosfwd>
#include <string>

namespace adkit {

// Tape file format, bit-exact and endian-fixed:
//   magic "ADTAPE01"
//   little-endian u64 counts: n_independents, m_dependents, n_slots,
//                             n_records, n_recorded_values
//   independents, dependents as u64 slot indices
//   records as (opcode u8, result u64, arg1 u64, arg2 u64, constant f64),
//   unused fields zero
//   recorded values as f64

void save_tape(const Tape& tape, std::ostream& out);
void save_tape(const Tape& tape, const std::string& path);

/// The file carries no tag; the caller assigns one (default 0).
Tape load_tape(std::istream& in, std::uint64_t tag = 0);
Tape load_tape(const std::string& path, std::uint64_t tag = 0);

} // namespace adkit

#endif // ADKIT_TAPE_IO_HPP
