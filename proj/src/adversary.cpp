#include "bqc/adversary.hpp"

#include <algorithm>

#include "bqc/encoding.hpp"

namespace bqc {

nlohmann::json AttackReport::to_json() const {
  nlohmann::json j;
  j["model"] = to_string(model);
  j["m"] = m;
  j["seed"] = seed;
  j["recovered_positions"] = {{"s", recovered_positions.s},
                              {"t", recovered_positions.t}};
  auto eighths = [](const std::vector<Angle>& v) {
    std::vector<int> out;
    for (const auto& a : v) out.push_back(a.eighths);
    return out;
  };
  j["recovered_thetas_eighths"] = eighths(recovered_thetas);
  std::vector<int> bits;
  for (const auto& b : recovered_bits) bits.push_back(b.b);
  j["recovered_bits"] = bits;
  j["recovered_resource_eighths"] = eighths(recovered_resource);
  j["success"] = success;
  j["candidate_count"] = candidate_count;
  return j;
}

PresenceTrace presence_from_transcript(const Transcript& transcript, int m) {
  PresenceTrace trace;
  trace.present.assign(4 * m, false);
  int seen = 0;
  for (const auto& e : transcript.events()) {
    if (e.edge != Edge::a_to_b_quantum) continue;
    if (e.kind != EventKind::photon && e.kind != EventKind::absence) continue;
    if (e.slot < 1 || e.slot > 4 * m)
      throw MalformedTraceError("quantum slot out of range");
    trace.present[e.slot - 1] = (e.kind == EventKind::photon);
    ++seen;
  }
  if (seen != 4 * m)
    throw MalformedTraceError("expected one quantum event per slot");
  return trace;
}

Positions eavesdrop_infer_positions(const PresenceTrace& trace, int m) {
  if (static_cast<int>(trace.present.size()) != 4 * m)
    throw MalformedTraceError("presence trace must cover 4m slots");
  Positions p;
  for (int k = 1; k <= 4 * m; ++k) {
    if (!trace.present[k - 1]) continue;
    (k <= 2 * m ? p.s : p.t).push_back(k);
  }
  if (static_cast<int>(p.s.size() + p.t.size()) != 2 * m)
    throw MalformedTraceError("presence count differs from 2m");
  return p;
}

Photon trojan_tag(Photon photon, int k) {
  photon.tag = k;
  return photon;
}

std::optional<int> trojan_read(const Photon& photon) { return photon.tag; }

std::optional<Positions> positions_from_tags(const TrojanTagLog& log, int m) {
  if (static_cast<int>(log.recovered_ids.size()) != 2 * m) return std::nullopt;
  Positions p;
  for (int k : log.recovered_ids) (k <= 2 * m ? p.s : p.t).push_back(k);
  std::sort(p.s.begin(), p.s.end());
  std::sort(p.t.begin(), p.t.end());
  if (static_cast<int>(p.s.size()) != m) return std::nullopt;
  return p;
}

namespace {

void check_positions(const Positions& pos, const BobView& view) {
  const int m = view.m;
  auto valid = [](const std::vector<int>& v, int lo, int hi, int m_) {
    if (static_cast<int>(v.size()) != m_) return false;
    if (!std::is_sorted(v.begin(), v.end())) return false;
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
    return v.front() >= lo && v.back() <= hi;
  };
  if (!valid(pos.s, 1, 2 * m, m) || !valid(pos.t, 2 * m + 1, 4 * m, m))
    throw MalformedViewError("positions inconsistent with m");
  if (static_cast<int>(view.angle_list.size()) != 2 * m ||
      static_cast<int>(view.result_bits.size()) != 2 * m ||
      static_cast<int>(view.swap_outcomes.size()) != m)
    throw MalformedViewError("view lists inconsistent with m");
}

}  // namespace

AttackReport reconstruct_secrets(const BobView& view, const Positions& positions) {
  check_positions(positions, view);
  AttackReport report;
  report.m = view.m;
  report.recovered_positions = positions;
  for (int i = 0; i < view.m; ++i) {
    const int s = positions.s[i];
    const PadKey pad = byproduct_params(view.swap_outcomes[i]);
    const Angle theta = decode_angle(view.angle_list[s - 1], pad);
    const MeasuredBit b = view.result_bits[s - 1];
    report.recovered_thetas.push_back(theta);
    report.recovered_bits.push_back(b);
    report.recovered_resource.push_back(Angle::of(theta.eighths + 4 * b.b));
  }
  return report;
}

BobView view_from_transcript(const Transcript& transcript) {
  BobView view;
  int arrivals = 0;
  try {
    for (const auto& e : transcript.events()) {
      switch (e.kind) {
        case EventKind::photon:
          if (e.edge == Edge::a_to_b_quantum) view.arrival_order.push_back(++arrivals);
          break;
        case EventKind::absence:
          break;
        case EventKind::bell_outcome:
          view.swap_outcomes.push_back(
              BellOutcome{e.payload.at("z").get<int>(), e.payload.at("x").get<int>()});
          break;
        case EventKind::angle_list:
          for (int v : e.payload.at("theta_tilde_eighths"))
            view.angle_list.push_back(Angle::of(v));
          break;
        case EventKind::result_bits:
          for (int v : e.payload.at("bits")) view.result_bits.push_back(MeasuredBit{v});
          break;
        case EventKind::t_list:
          view.t_list = e.payload.at("t").get<std::vector<int>>();
          break;
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw MalformedTraceError(std::string("bad event payload: ") + ex.what());
  }
  view.m = static_cast<int>(view.t_list.size());
  if (view.m < 1 || static_cast<int>(view.swap_outcomes.size()) != view.m ||
      static_cast<int>(view.angle_list.size()) != 2 * view.m ||
      static_cast<int>(view.result_bits.size()) != 2 * view.m ||
      arrivals != 2 * view.m)
    throw MalformedTraceError("trace does not describe a completed run");
  return view;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

// A candidate s-set is consistent iff some secret assignment reproduces
// the classical view with nonzero probability: each candidate pad is fixed
// by the reported swap outcome, and some theta must encode to the
// announced angle.
bool candidate_consistent(const BobView& view, const std::vector<int>& s_set) {
  for (int i = 0; i < static_cast<int>(s_set.size()); ++i) {
    const PadKey pad = byproduct_params(view.swap_outcomes[i]);
    const Angle announced = view.angle_list[s_set[i] - 1];
    bool reachable = false;
    for (int a = 0; a < 8 && !reachable; ++a)
      reachable = encode_angle(Angle::of(a), pad) == announced;
    if (!reachable) return false;
  }
  return true;
}

bool side_channel_determines_positions(const BobView& view) {
  if (std::holds_alternative<PresenceTrace>(view.side_channel)) return true;
  if (const auto* log = std::get_if<TrojanTagLog>(&view.side_channel))
    return positions_from_tags(*log, view.m).has_value();
  return false;
}

}  // namespace

long long blindness_candidates(const BobView& view, int m) {
  if (m > 4)
    throw std::invalid_argument("candidate enumeration limited to m <= 4");
  if (static_cast<int>(view.angle_list.size()) != 2 * m ||
      static_cast<int>(view.swap_outcomes.size()) != m)
    throw MalformedViewError("view lists inconsistent with m");
  if (side_channel_determines_positions(view)) return 1;

  std::vector<int> candidate(m);
  long long count = 0;
  // Enumerates all C(2m, m) sorted m-subsets of [1, 2m].
  auto recurse = [&](auto&& self, int depth, int next) -> void {
    if (depth == m) {
      if (candidate_consistent(view, candidate)) ++count;
      return;
    }
    for (int k = next; k <= 2 * m; ++k) {
      candidate[depth] = k;
      self(self, depth + 1, k + 1);
    }
  };
  recurse(recurse, 0, 1);
  return count;
}

namespace {

// Uniform fallback guess over candidate s-sets when the side channel
// yielded nothing (Trojan attack against the filter).
Positions guess_positions(const BobView& view, RandomStream& rng) {
  const int m = view.m;
  std::vector<std::vector<int>> candidates;
  std::vector<int> cur(m);
  auto recurse = [&](auto&& self, int depth, int next) -> void {
    if (depth == m) {
      candidates.push_back(cur);
      return;
    }
    for (int k = next; k <= 2 * m; ++k) {
      cur[depth] = k;
      self(self, depth + 1, k + 1);
    }
  };
  recurse(recurse, 0, 1);
  Positions p;
  p.s = candidates[rng.uniform_int(0, static_cast<int>(candidates.size()) - 1)];
  p.t = view.t_list;
  return p;
}

}  // namespace

Simulation simulate(const ProtocolConfig& config) {
  Simulation sim;
  sim.run = run_protocol(config);
  if (config.server_model == ServerModel::honest) return sim;

  const BobView& view = sim.run.view;
  Positions recovered;
  if (const auto* trace = std::get_if<PresenceTrace>(&view.side_channel)) {
    recovered = eavesdrop_infer_positions(*trace, config.m);
  } else if (const auto* log = std::get_if<TrojanTagLog>(&view.side_channel)) {
    if (auto p = positions_from_tags(*log, config.m)) {
      recovered = *p;
    } else {
      RandomStream guess_rng(derive_seed(config.seed, "attacker/guess"));
      recovered = guess_positions(view, guess_rng);
    }
  } else {
    throw std::logic_error("attacking model without side channel");
  }

  AttackReport report = reconstruct_secrets(view, recovered);
  report.model = config.server_model;
  report.seed = config.seed;
  report.candidate_count = blindness_candidates(view, config.m);

  // Harness-side success judgement against Alice's ground truth.
  const AliceSecrets& truth = sim.run.secrets;
  bool ok = recovered == truth.positions &&
            report.recovered_bits == truth.kept_bits;
  for (int i = 0; ok && i < config.m; ++i) {
    ok = report.recovered_thetas[i] == truth.thetas[truth.positions.s[i] - 1] &&
         report.recovered_resource[i] == sim.run.resource[i].alice_expected;
  }
  report.success = ok;
  sim.attack = std::move(report);
  return sim;
}

}  // namespace bqc
