#pragma once

// JSON documents. Qubits are numbered from 1 in files; complex numbers are
// [re, im] pairs; amplitudes follow the qubit-1-most-significant ordering.
//
//   instance: {"n": 3, "flags": {"is_h_psi": true},
//              "constraints": [{"qubits": [1, 2], "range": [[[re, im] x 4], ...]}]}
//   state:    {"n": 3, "amps": [[re, im] x 8]}
//   blocks:   {"n": 3, "blocks": [{"qubits": [1, 2], "state": [[re, im] x 4]}, ...]}

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "q2sat/blocks.hpp"
#include "q2sat/instance.hpp"

namespace q2sat::io {

using nlohmann::json;

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& doc);

json state_to_json(const PureState& state);
PureState state_from_json(const json& doc);

json blocks_to_json(int n, const std::vector<Block>& blocks);
std::vector<Block> blocks_from_json(const json& doc, int& n);

std::string write_instance(const Instance& inst);
Instance read_instance(std::string_view text);
std::string write_state(const PureState& state);
PureState read_state(std::string_view text);

/// Whole file as text; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace q2sat::io
