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

#include "adkit/tape_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace adkit {

namespace {

constexpr char magic[8] = { 'A', 'D', 'T', 'A', 'P', 'E', '0', '1' };

void write_u64(std::ostream& out, std::uint64_t v)
{
    std::array<unsigned char, 8> bytes;
    for (int i = 0; i < 8; ++i) {
        bytes[static_cast<std::size_t>(i)] = static_cast<unsigned char>(v >> (8 * i));
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), 8);
}

void write_f64(std::ostream& out, double v)
{
    write_u64(out, std::bit_cast<std::uint64_t>(v));
}

std::uint64_t read_u64(std::istream& in)
{
    std::array<unsigned char, 8> bytes;
    in.read(reinterpret_cast<char*>(bytes.data()), 8);
    if (in.gcount() != 8) {
        throw FormatError("truncated tape file");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(bytes[static_cast<std::size_t>(i)]) << (8 * i);
    }
    return v;
}

double read_f64(std::istream& in)
{
    return std::bit_cast<double>(read_u64(in));
}

} // namespace

void save_tape(const Tape& tape, std::ostream& out)
{
    out.write(magic, sizeof(magic));
    write_u64(out, tape.num_independents());
    write_u64(out, tape.num_dependents());
    write_u64(out, tape.num_slots());
    write_u64(out, tape.records().size());
    write_u64(out, tape.recorded_values().size());
    for (std::uint64_t slot : tape.independents()) {
        write_u64(out, slot);
    }
    for (std::uint64_t slot : tape.dependents()) {
        write_u64(out, slot);
    }
    for (const TapeRecord& record : tape.records()) {
        const unsigned char opcode = static_cast<unsigned char>(record.op.kind);
        out.write(reinterpret_cast<const char*>(&opcode), 1);
        write_u64(out, record.result);
        write_u64(out, record.args[0]);
        write_u64(out, record.args[1]);
        write_f64(out, record.op.constant);
    }
    for (double v : tape.recorded_values()) {
        write_f64(out, v);
    }
    if (!out) {
        throw IoError("failed to write tape stream");
    }
}

void save_tape(const Tape& tape, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open tape file for writing: " + path);
    }
    save_tape(tape, out);
    out.flush();
    if (!out) {
        throw IoError("failed to write tape file: " + path);
    }
}

Tape load_tape(std::istream& in, std::uint64_t tag)
{
    char head[sizeof(magic)];
    in.read(head, sizeof(magic));
    if (in.gcount() != sizeof(magic) || std::memcmp(head, magic, sizeof(magic)) != 0) {
        throw FormatError("bad tape magic");
    }
    const std::uint64_t n_independents = read_u64(in);
    const std::uint64_t m_dependents = read_u64(in);
    const std::uint64_t n_slots = read_u64(in);
    const std::uint64_t n_records = read_u64(in);
    const std::uint64_t n_values = read_u64(in);

    // reservations are capped so a corrupt header fails at read time as
    // FormatError instead of triggering a huge allocation
    constexpr std::uint64_t reserve_cap = std::uint64_t { 1 } << 20;

    std::vector<std::uint64_t> independents;
    independents.reserve(std::min(n_independents, reserve_cap));
    for (std::uint64_t i = 0; i < n_independents; ++i) {
        independents.push_back(read_u64(in));
    }
    std::vector<std::uint64_t> dependents;
    dependents.reserve(std::min(m_dependents, reserve_cap));
    for (std::uint64_t i = 0; i < m_dependents; ++i) {
        dependents.push_back(read_u64(in));
    }
    std::vector<TapeRecord> records;
    records.reserve(std::min(n_records, reserve_cap));
    for (std::uint64_t i = 0; i < n_records; ++i) {
        unsigned char opcode = 0;
        in.read(reinterpret_cast<char*>(&opcode), 1);
        if (in.gcount() != 1) {
            throw FormatError("truncated tape file");
        }
        if (opcode >= num_op_kinds) {
            throw FormatError("unknown opcode in tape file");
        }
        TapeRecord record;
        record.op.kind = static_cast<OpKind>(opcode);
        record.result = read_u64(in);
        record.args[0] = read_u64(in);
        record.args[1] = read_u64(in);
        record.op.constant = read_f64(in);
        records.push_back(record);
    }
    std::vector<double> values;
    values.reserve(std::min(n_values, reserve_cap));
    for (std::uint64_t i = 0; i < n_values; ++i) {
        values.push_back(read_f64(in));
    }
    // the Tape constructor enforces the structural invariants
    return Tape(tag, n_slots, std::move(records), std::move(independents), std::move(dependents),
                std::move(values));
}

Tape load_tape(const std::string& path, std::uint64_t tag)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open tape file: " + path);
    }
    return load_tape(in, tag);
}

} // namespace adkit
