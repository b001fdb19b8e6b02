#include "bqc/protocol.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bqc/adversary.hpp"
#include "bqc/encoding.hpp"

namespace bqc {

std::string to_string(ServerModel m) {
  switch (m) {
    case ServerModel::honest: return "honest";
    case ServerModel::eavesdrop: return "eavesdrop";
    case ServerModel::trojan: return "trojan";
  }
  throw std::logic_error("bad server model");
}

std::optional<ServerModel> server_model_from_string(const std::string& s) {
  if (s == "honest") return ServerModel::honest;
  if (s == "eavesdrop") return ServerModel::eavesdrop;
  if (s == "trojan") return ServerModel::trojan;
  return std::nullopt;
}

void validate(const ProtocolConfig& config) {
  if (config.m < 1 || config.m > 8)
    throw std::invalid_argument("m must be in 1..8");
}

namespace {

std::string a_label(int k) { return "A_" + std::to_string(k); }
std::string b_label(int k) { return "B_" + std::to_string(k); }

// Uniform m-subset of [lo, hi] by partial shuffle, returned sorted.
std::vector<int> uniform_subset(int lo, int hi, int m, RandomStream& rng) {
  std::vector<int> pool;
  for (int v = lo; v <= hi; ++v) pool.push_back(v);
  for (int i = 0; i < m; ++i) {
    const int j = rng.uniform_int(i, static_cast<int>(pool.size()) - 1);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

Positions alice_select_positions(int m, RandomStream& rng) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  Positions p;
  p.s = uniform_subset(1, 2 * m, m, rng);
  p.t = uniform_subset(2 * m + 1, 4 * m, m, rng);
  return p;
}

RunResult run_protocol(const ProtocolConfig& config) {
  validate(config);
  const int m = config.m;
  const bool trojan = config.server_model == ServerModel::trojan;

  RandomStream alice_select(derive_seed(config.seed, "alice/select"));
  RandomStream alice_theta(derive_seed(config.seed, "alice/theta"));
  RandomStream alice_dummy(derive_seed(config.seed, "alice/dummy"));
  RandomStream alice_discard(derive_seed(config.seed, "alice/discard"));
  RandomStream bob_measure(derive_seed(config.seed, "bob/measure"));

  RunResult out;
  out.config = config;
  out.secrets.positions = alice_select_positions(m, alice_select);
  const auto& pos = out.secrets.positions;

  auto in_sorted = [](const std::vector<int>& v, int k) {
    return std::binary_search(v.begin(), v.end(), k);
  };

  // One 2-qubit register {B_k, A_k} per pair; entanglement swapping merges
  // two of them, measurements shrink them back.
  std::map<int, StateVector> registers;

  TrojanTagLog tag_log;

  // Steps 1-2: slot-by-slot distribution and forward/discard.
  int arrivals = 0;
  for (int k = 1; k <= 4 * m; ++k) {
    registers.emplace(k, StateVector::bell_pair(0, 0, b_label(k), a_label(k)));
    Photon photon{k, std::nullopt};
    if (trojan) photon = trojan_tag(photon, k);
    out.transcript.log(k, Edge::c_to_a_quantum, EventKind::photon,
                       {{"id", k}});
    if (config.alice_filter) photon.tag.reset();

    if (in_sorted(pos.s, k) || in_sorted(pos.t, k)) {
      ++arrivals;
      out.transcript.log(k, Edge::a_to_b_quantum, EventKind::photon,
                         {{"handle", arrivals}, {"hidden_id", k}});
      out.arrival_hidden_ids.push_back(k);
      if (auto tag = trojan_read(photon)) tag_log.recovered_ids.push_back(*tag);
    } else {
      out.transcript.log(k, Edge::a_to_b_quantum, EventKind::absence);
      // Discard is a trace-out: computational measurement, result dropped.
      registers.at(k).measure_computational(a_label(k), alice_discard);
    }
  }

  // Step 3: Bob pairs arrival j with arrival m+j and Bell-measures.
  // Forward order makes those A_{s_j} and A_{t_j}.
  for (int i = 1; i <= m; ++i) {
    const int ks = out.arrival_hidden_ids[i - 1];
    const int kt = out.arrival_hidden_ids[m + i - 1];
    StateVector merged = StateVector::tensor(registers.at(ks), registers.at(kt));
    const BellOutcome outcome =
        merged.bell_measure(a_label(ks), a_label(kt), bob_measure);
    registers.at(ks) = std::move(merged);  // now holds {B_ks, B_kt}
    registers.erase(kt);
    out.secrets.swap_outcomes.push_back(outcome);
    out.transcript.log(4 * m + i, Edge::b_to_a_classical, EventKind::bell_outcome,
                       {{"i", i}, {"z", outcome.z}, {"x", outcome.x}});
  }

  // Steps 4-5: pads at s-positions absorb the swapping byproducts, all
  // other angles and pads are uniform dummies.
  out.secrets.thetas.resize(2 * m);
  out.secrets.pads.resize(2 * m);
  std::vector<Angle> theta_tildes(2 * m);
  for (int k = 1; k <= 2 * m; ++k) {
    auto it = std::find(pos.s.begin(), pos.s.end(), k);
    if (it != pos.s.end()) {
      const int i = static_cast<int>(it - pos.s.begin());
      out.secrets.thetas[k - 1] = Angle::of(alice_theta.uniform_int(0, 7));
      out.secrets.pads[k - 1] = byproduct_params(out.secrets.swap_outcomes[i]);
    } else {
      out.secrets.thetas[k - 1] = Angle::of(alice_dummy.uniform_int(0, 7));
      out.secrets.pads[k - 1] = PadKey{alice_dummy.bit(), alice_dummy.bit()};
    }
    theta_tildes[k - 1] =
        encode_angle(out.secrets.thetas[k - 1], out.secrets.pads[k - 1]);
  }
  nlohmann::json tilde_json = nlohmann::json::array();
  for (const auto& a : theta_tildes) tilde_json.push_back(a.eighths);
  out.transcript.log(5 * m + 1, Edge::a_to_b_classical, EventKind::angle_list,
                     {{"theta_tilde_eighths", tilde_json}});

  // Step 6: Bob measures B_1..B_2m in the announced rotated bases.
  std::vector<MeasuredBit> bits(2 * m);
  for (int k = 1; k <= 2 * m; ++k) {
    // The register holding B_k is keyed by the pair id whose swap merged
    // it in, which is k itself for every k <= 2m.
    bits[k - 1] =
        registers.at(k).measure_rotated(b_label(k), theta_tildes[k - 1], bob_measure);
  }
  nlohmann::json bits_json = nlohmann::json::array();
  for (const auto& b : bits) bits_json.push_back(b.b);
  out.transcript.log(5 * m + 2, Edge::b_to_a_classical, EventKind::result_bits,
                     {{"bits", bits_json}});

  // Step 7: Alice keeps b_{s_i} and reveals the t-list; Bob relabels the
  // surviving B_{t_i} as his resource qubits.
  for (int i = 0; i < m; ++i)
    out.secrets.kept_bits.push_back(bits[pos.s[i] - 1]);
  out.transcript.log(5 * m + 3, Edge::a_to_b_classical, EventKind::t_list,
                     {{"t", pos.t}});
  for (int i = 0; i < m; ++i) {
    const int delta =
        (out.secrets.thetas[pos.s[i] - 1].eighths + 4 * out.secrets.kept_bits[i].b) % 8;
    out.resource.push_back(ResourceEntry{b_label(pos.t[i]), Angle::of(delta)});
  }
  for (auto& [k, reg] : registers)
    if (reg.qubit_count() > 0) out.registers.push_back(std::move(reg));

  // Bob's protocol view.
  out.view.m = m;
  for (int j = 1; j <= 2 * m; ++j) out.view.arrival_order.push_back(j);
  out.view.swap_outcomes = out.secrets.swap_outcomes;
  out.view.angle_list = std::move(theta_tildes);
  out.view.result_bits = std::move(bits);
  out.view.t_list = pos.t;
  if (config.server_model == ServerModel::eavesdrop)
    out.view.side_channel = presence_from_transcript(out.transcript, m);
  else if (trojan)
    out.view.side_channel = std::move(tag_log);
  return out;
}

std::vector<double> verify_resource(const RunResult& run) {
  std::vector<double> fidelities;
  for (const auto& entry : run.resource) {
    const StateVector* holder = nullptr;
    for (const auto& reg : run.registers)
      if (reg.qubit_count() == 1 && reg.has(entry.qubit_label)) holder = &reg;
    if (holder == nullptr)
      throw std::logic_error("resource qubit not found: " + entry.qubit_label);
    fidelities.push_back(
        fidelity(*holder, StateVector::plus_angle(entry.alice_expected,
                                                  entry.qubit_label)));
  }
  return fidelities;
}

}  // namespace bqc
