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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qreuse/circuit.hpp"
#include "qreuse/graph.hpp"

namespace qreuse {

/// Where generated circuits get their gate unitaries.
///
/// NamedFixed uses a DFT matrix of matching dimension (label "dft").
/// SeededHaar draws a Haar-random unitary per gate (label "haar"), keyed by
/// (seed, site) where site is the gate's position in generation order, so the
/// same source always yields the same matrices.
struct GateSource {
    enum class Mode { NamedFixed, SeededHaar };
    Mode mode = Mode::NamedFixed;
    uint64_t seed = 0;

    static GateSource named_fixed() { return {}; }
    static GateSource haar(uint64_t seed) { return {Mode::SeededHaar, seed}; }

    Operation make(std::vector<QubitId> qubits, uint64_t site) const;
};

enum class Family { Brick1d, Brick2d, Mps, Ttn, Mera, Qcnn, Bv, Qaoa };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilyParams {
    Family family = Family::Brick1d;
    uint32_t N = 0;
    uint32_t Nx = 0;
    uint32_t Ny = 0;
    uint32_t k = 1;
    uint32_t D = 2;
    uint32_t chi = 2;
    uint32_t p = 1;
    bool periodic = true;
    std::vector<double> betas;
    std::vector<double> gammas;
    std::string s;
    uint64_t seed = 0;  // graph seed for qaoa
    GateSource gate_source;
};

constexpr double kDefaultBeta = 0.3;
constexpr double kDefaultGamma = 0.7;

/// k layers of an even row (2i, 2i+1) followed by an odd row (2i+1, 2i+2),
/// wrapping around when periodic. All qubits are prepared first and measured
/// last into clbit = qubit.
Circuit brickwork_1d(uint32_t N, uint32_t k, bool periodic, const GateSource &source = {});

/// Nx x Ny grid, qubit x + Nx*y. Each layer is four rows of gates:
/// horizontal even, horizontal odd, vertical even, vertical odd.
Circuit brickwork_2d(uint32_t Nx, uint32_t Ny, uint32_t k, bool periodic, const GateSource &source = {});

/// Sequential MPS preparation with bond dimension chi (a power of two).
/// Physical qubits are 0..N-1 and are measured; the log2(chi) bond qubits
/// follow and are traced out.
Circuit mps_prep(uint32_t N, uint32_t chi, const GateSource &source = {});

/// Binary tree tensor network of depth D on 2^D qubits, bond dimension 2.
Circuit ttn(uint32_t D, const GateSource &source = {});

/// Open-boundary binary MERA of depth D on 2^D qubits.
Circuit mera(uint32_t D, const GateSource &source = {});

/// dual(mera(D)).
Circuit qcnn(uint32_t D, const GateSource &source = {});

/// N register qubits and one ancilla (qubit N, left unmeasured). Register i
/// is measured into clbit i and reads s[i] with certainty.
Circuit bernstein_vazirani(uint32_t N, std::string_view s);

/// Uniform-ish random 3-regular graph: configuration-model pairing, rejecting
/// and redrawing whole pairings that contain self-loops or multi-edges.
Graph random_u3r_graph(uint32_t N, uint64_t seed);

/// MaxCut QAOA: H on all, then for each round rzz(2*gamma) on every edge in
/// stored order and rx(2*beta) on every qubit; qubit v measured into clbit v.
Circuit qaoa_maxcut(const Graph &graph, const std::vector<double> &betas, const std::vector<double> &gammas);

/// Random circuit of Haar two-qubit gates on uniformly chosen pairs. Each
/// qubit is prepared just before its first gate and measured right after its
/// last; untouched qubits are prepared and measured up front.
Circuit random_circuit(uint32_t N, uint32_t num_gates, uint64_t seed);

/// Builds the circuit described by `params` (qaoa uses random_u3r_graph(N,
/// seed) and the default angles when none are given).
Circuit generate(const FamilyParams &params);

/// Closed-form compiled width. Throws std::invalid_argument for qaoa.
size_t predicted_width(const FamilyParams &params);

}  // namespace qreuse
