#pragma once

#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "bqc/protocol.hpp"

namespace bqc {

struct MalformedViewError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full secret recovery from the attacker's view. success is filled in by
// the harness against ground truth, never by the attacker itself.
struct AttackReport {
  ServerModel model = ServerModel::honest;
  int m = 0;
  std::uint64_t seed = 0;
  Positions recovered_positions;
  std::vector<Angle> recovered_thetas;       // theta_{s_i}
  std::vector<MeasuredBit> recovered_bits;   // b_{s_i}
  std::vector<Angle> recovered_resource;     // delta_i
  bool success = false;
  long long candidate_count = 0;

  nlohmann::json to_json() const;
};

// Timing attack: read the positions straight off the per-slot presence
// pattern. Throws MalformedTraceError unless exactly 2m slots are present.
Positions eavesdrop_infer_positions(const PresenceTrace& trace, int m);

PresenceTrace presence_from_transcript(const Transcript& transcript, int m);

// Trojan marking on the C->A edge and readout on the A->B edge. The tag
// never alters the qubit state; Alice's filter strips it on receipt.
Photon trojan_tag(Photon photon, int k);
std::optional<int> trojan_read(const Photon& photon);

// Derives Alice's positions from surviving tags; nullopt when the filter
// stripped them all.
std::optional<Positions> positions_from_tags(const TrojanTagLog& log, int m);

// Computes theta_{s_i}, b_{s_i} and delta_i from the view once the side
// channel has yielded the positions. Throws MalformedViewError when the
// positions are inconsistent with m.
AttackReport reconstruct_secrets(const BobView& view, const Positions& positions);

// Rebuilds Bob's classical protocol view (no side channel) from a trace.
// Throws MalformedTraceError on schema violations.
BobView view_from_transcript(const Transcript& transcript);

// Number of candidate s-sets consistent with the view: C(2m, m) without a
// side channel, 1 with one. Refuses m > 4 (desk-scale enumeration bound).
long long blindness_candidates(const BobView& view, int m);

long long binomial(int n, int k);

// One full run plus, for attacking server models, the attack pipeline and
// the ground-truth success judgement.
struct Simulation {
  RunResult run;
  std::optional<AttackReport> attack;
};

Simulation simulate(const ProtocolConfig& config);

}  // namespace bqc
