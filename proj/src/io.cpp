#include "q2sat/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace q2sat::io {
namespace {

constexpr double kOrthonormalTolerance = 1e-10;

[[noreturn]] void fail(const std::string& field, const std::string& what) { throw ParseError(field + ": " + what); }

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(field, "expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

VecX vector_from_json(const json& j, Eigen::Index expected, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of [re, im] pairs");
  if (static_cast<Eigen::Index>(j.size()) != expected)
    fail(field, "expected " + std::to_string(expected) + " entries, got " + std::to_string(j.size()));
  VecX v(expected);
  for (Eigen::Index k = 0; k < expected; ++k)
    v[k] = complex_from_json(j[static_cast<std::size_t>(k)], field + "[" + std::to_string(k) + "]");
  return v;
}

json vector_to_json(const VecX& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v[k]));
  return out;
}

int qubit_count(const json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) fail("n", "missing or not an integer");
  const int n = doc["n"].get<int>();
  if (n < 0 || n > 62) fail("n", "out of range");
  return n;
}

std::vector<int> qubits_from_json(const json& j, int n, std::size_t min_count, std::size_t max_count,
                                  const std::string& field) {
  if (!j.is_array() || j.size() < min_count || j.size() > max_count) fail(field, "wrong number of qubit indices");
  std::vector<int> out;
  for (const auto& q : j) {
    if (!q.is_number_integer()) fail(field, "qubit index must be an integer");
    const int v = q.get<int>();
    if (v < 1 || v > n) fail(field, "qubit index " + std::to_string(v) + " outside 1.." + std::to_string(n));
    for (int prev : out)
      if (prev == v - 1) fail(field, "repeated qubit index " + std::to_string(v));
    out.push_back(v - 1);
  }
  return out;
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("document: malformed JSON (") + e.what() + ")");
  }
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json constraints = json::array();
  for (const auto& [pair, c] : inst.constraints()) {
    json range = json::array();
    for (const auto& v : c.range) range.push_back(vector_to_json(v));
    constraints.push_back({{"qubits", {pair.first + 1, pair.second + 1}}, {"range", range}});
  }
  json doc{{"n", inst.num_qubits()}, {"constraints", constraints}};
  if (inst.flags.is_h_psi) doc["flags"] = {{"is_h_psi", true}};
  return doc;
}

Instance instance_from_json(const json& doc) {
  const int n = qubit_count(doc);
  Instance inst(n);
  if (!doc.contains("constraints") || !doc["constraints"].is_array()) fail("constraints", "missing or not an array");
  const auto& list = doc["constraints"];
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string field = "constraints[" + std::to_string(k) + "]";
    const auto& entry = list[k];
    if (!entry.is_object() || !entry.contains("qubits") || !entry.contains("range"))
      fail(field, "expected an object with \"qubits\" and \"range\"");
    const auto qubits = qubits_from_json(entry["qubits"], n, 2, 2, field + ".qubits");
    const auto& range_json = entry["range"];
    if (!range_json.is_array() || range_json.size() > 4) fail(field + ".range", "expected at most 4 vectors");
    std::vector<Vec4> range;
    for (std::size_t r = 0; r < range_json.size(); ++r)
      range.emplace_back(vector_from_json(range_json[r], 4, field + ".range[" + std::to_string(r) + "]"));
    for (std::size_t a = 0; a < range.size(); ++a)
      for (std::size_t b = 0; b <= a; ++b) {
        const Complex g = range[b].dot(range[a]);
        if (std::abs(g - (a == b ? 1.0 : 0.0)) > kOrthonormalTolerance)
          fail(field + ".range", "vectors are not orthonormal");
      }
    const QubitPair pair(qubits[0], qubits[1]);
    if (qubits[0] > qubits[1])
      for (auto& v : range) v = swap_factors(v);
    if (const Constraint* existing = inst.find(pair)) {
      range.insert(range.end(), existing->range.begin(), existing->range.end());
      range = span_basis(range);
    }
    inst.set({pair, std::move(range)});
  }
  if (doc.contains("flags")) {
    const auto& flags = doc["flags"];
    if (!flags.is_object()) fail("flags", "expected an object");
    if (flags.contains("is_h_psi")) {
      if (!flags["is_h_psi"].is_boolean()) fail("flags.is_h_psi", "expected a boolean");
      inst.flags.is_h_psi = flags["is_h_psi"].get<bool>();
    }
  }
  return inst;
}

json state_to_json(const PureState& state) {
  return {{"n", state.num_qubits()}, {"amps", vector_to_json(state.amplitudes())}};
}

PureState state_from_json(const json& doc) {
  const int n = qubit_count(doc);
  if (n > 30) fail("n", "too many qubits for a dense state");
  if (!doc.contains("amps")) fail("amps", "missing");
  VecX amps = vector_from_json(doc["amps"], Eigen::Index{1} << n, "amps");
  if (!(amps.norm() > 0.0)) fail("amps", "zero vector");
  return PureState(n, std::move(amps));
}

json blocks_to_json(int n, const std::vector<Block>& blocks) {
  json list = json::array();
  for (const auto& b : blocks) {
    json qubits = json::array();
    for (int q : b.qubits) qubits.push_back(q + 1);
    list.push_back({{"qubits", qubits}, {"state", vector_to_json(b.state)}});
  }
  return {{"n", n}, {"blocks", list}};
}

std::vector<Block> blocks_from_json(const json& doc, int& n) {
  n = qubit_count(doc);
  if (!doc.contains("blocks") || !doc["blocks"].is_array()) fail("blocks", "missing or not an array");
  std::vector<Block> out;
  const auto& list = doc["blocks"];
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string field = "blocks[" + std::to_string(k) + "]";
    const auto& entry = list[k];
    if (!entry.is_object() || !entry.contains("qubits") || !entry.contains("state"))
      fail(field, "expected an object with \"qubits\" and \"state\"");
    Block b;
    b.qubits = qubits_from_json(entry["qubits"], n, 1, 2, field + ".qubits");
    b.state = vector_from_json(entry["state"], Eigen::Index{1} << b.qubits.size(), field + ".state");
    if (!(b.state.norm() > 0.0)) fail(field + ".state", "zero vector");
    b.state.normalize();
    out.push_back(std::move(b));
  }
  try {
    check_partition(out, n);
  } catch (const std::invalid_argument& e) {
    fail("blocks", e.what());
  }
  return out;
}

std::string write_instance(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }
Instance read_instance(std::string_view text) { return instance_from_json(parse_text(text)); }
std::string write_state(const PureState& state) { return state_to_json(state).dump(2) + "\n"; }
PureState read_state(std::string_view text) { return state_from_json(parse_text(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace q2sat::io
