#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bqc/angle.hpp"
#include "bqc/rng.hpp"
#include "bqc/statevector.hpp"
#include "bqc/transcript.hpp"
#include "bqc/types.hpp"

namespace bqc {

enum class ServerModel { honest, eavesdrop, trojan };

std::string to_string(ServerModel m);
std::optional<ServerModel> server_model_from_string(const std::string& s);

struct ProtocolConfig {
  int m = 2;
  std::uint64_t seed = 0;
  ServerModel server_model = ServerModel::honest;
  bool alice_filter = false;  // Trojan-defense device on Alice's receiver
};

void validate(const ProtocolConfig& config);  // throws std::invalid_argument

// Alice's selected resend positions: s sorted in [1,2m], t sorted in
// (2m,4m], each of length m with distinct entries.
struct Positions {
  std::vector<int> s;
  std::vector<int> t;
  bool operator==(const Positions&) const = default;
};

Positions alice_select_positions(int m, RandomStream& rng);

// Everything Alice must keep private for blindness to hold.
struct AliceSecrets {
  Positions positions;
  std::vector<Angle> thetas;        // theta_k, k = 1..2m (index k-1)
  std::vector<PadKey> pads;         // (z_k, x_k), k = 1..2m
  std::vector<MeasuredBit> kept_bits;       // b_{s_i}, i = 1..m
  std::vector<BellOutcome> swap_outcomes;   // (z_i', x_i') as reported
};

// Photon in transit; the id is hidden from Bob's protocol view. The tag
// is an opaque Trojan marker that never touches the qubit state.
struct Photon {
  int id = 0;
  std::optional<int> tag;
};

// Per-slot photon presence on the A->B quantum edge (the timing side
// channel).
struct PresenceTrace {
  std::vector<bool> present;  // index k-1, k = 1..4m
};

// Original ids recovered from surviving Trojan tags, in arrival order.
struct TrojanTagLog {
  std::vector<int> recovered_ids;
};

// Bob's view of a completed run: the legitimate protocol view plus an
// optional side channel. Contains no s-indices unless the side channel is
// present.
struct BobView {
  int m = 0;
  std::vector<int> arrival_order;           // opaque handles 1..2m
  std::vector<BellOutcome> swap_outcomes;   // his own reported outcomes
  std::vector<Angle> angle_list;            // theta_tilde_k, k = 1..2m
  std::vector<MeasuredBit> result_bits;     // b_k, k = 1..2m
  std::vector<int> t_list;
  std::variant<std::monostate, PresenceTrace, TrojanTagLog> side_channel;
};

struct ResourceEntry {
  std::string qubit_label;   // Bob's relabeled B_i (originally B_{t_i})
  Angle alice_expected;      // delta_i = (theta_{s_i} + b_{s_i} pi) as eighths
};

struct RunResult {
  ProtocolConfig config;
  Transcript transcript;
  AliceSecrets secrets;
  std::vector<ResourceEntry> resource;
  std::vector<StateVector> registers;   // surviving registers (Bob's qubits)
  BobView view;
  std::vector<int> arrival_hidden_ids;  // ground truth, verification only
};

// Executes Steps 1-7 under the configured server model. Deterministic:
// identical config (including seed) gives a bit-identical transcript.
RunResult run_protocol(const ProtocolConfig& config);

// Fidelity of each of Bob's resource qubits against Alice's predicted
// |delta_i>; all >= 1 - 1e-9 in an honest run.
std::vector<double> verify_resource(const RunResult& run);

}  // namespace bqc
