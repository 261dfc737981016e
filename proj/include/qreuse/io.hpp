// Copyright 2026 The qreuse Authors
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


#pragma once

#include <string>
#include <string_view>

#include "qreuse/circuit.hpp"
#include "qreuse/graph.hpp"
#include "qreuse/simulator.hpp"

namespace qreuse {

inline constexpr std::string_view kFormatVersion = "1";
inline constexpr std::string_view kCircuitExtension = ".qrc.json";

/// Parses a circuit document. Syntax errors throw ParseError with the line and
/// column; structural problems throw ParseError naming the op index, and
/// circuits that parse but fail validate() throw InvalidCircuit.
Circuit parse_json(std::string_view text);

/// Canonical document: fixed key order, one op per line, floats with 17
/// significant digits, matrices as row-major [re, im] pairs.
std::string emit_json(const Circuit &circuit);

/// OpenQASM 2 subset: qreg/creg, h, x, z, rx, rz, cx, cz, rzz, barrier,
/// measure, reset, and `include "qelib1.inc"`. Every declared qubit gets a
/// Prepare at the start. Other statements throw ParseError naming the line.
Circuit import_qasm2_subset(std::string_view text);

/// JSON object of bitstring -> probability, keys sorted.
std::string emit_distribution(const Distribution &d);

/// "p N M" header, then one "u v" line per edge. Lines starting with 'c' or
/// '#' are comments.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph &graph);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// %.17g formatting used by every emitter.
std::string format_double(double x);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

}  // namespace qreuse
