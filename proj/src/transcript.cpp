#include "bqc/transcript.hpp"

#include <istream>
#include <sstream>

namespace bqc {

std::string to_string(Edge e) {
  switch (e) {
    case Edge::c_to_a_quantum: return "C->A quantum";
    case Edge::a_to_b_quantum: return "A->B quantum";
    case Edge::a_to_b_classical: return "A->B classical";
    case Edge::b_to_a_classical: return "B->A classical";
  }
  throw std::logic_error("bad edge");
}

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::photon: return "photon";
    case EventKind::absence: return "absence";
    case EventKind::bell_outcome: return "bell_outcome";
    case EventKind::angle_list: return "angle_list";
    case EventKind::result_bits: return "result_bits";
    case EventKind::t_list: return "t_list";
  }
  throw std::logic_error("bad event kind");
}

Edge edge_from_string(const std::string& s) {
  if (s == "C->A quantum") return Edge::c_to_a_quantum;
  if (s == "A->B quantum") return Edge::a_to_b_quantum;
  if (s == "A->B classical") return Edge::a_to_b_classical;
  if (s == "B->A classical") return Edge::b_to_a_classical;
  throw MalformedTraceError("unknown edge: " + s);
}

EventKind kind_from_string(const std::string& s) {
  if (s == "photon") return EventKind::photon;
  if (s == "absence") return EventKind::absence;
  if (s == "bell_outcome") return EventKind::bell_outcome;
  if (s == "angle_list") return EventKind::angle_list;
  if (s == "result_bits") return EventKind::result_bits;
  if (s == "t_list") return EventKind::t_list;
  throw MalformedTraceError("unknown event kind: " + s);
}

void Transcript::log(int slot, Edge edge, EventKind kind, nlohmann::json payload) {
  if (!events_.empty() && slot < events_.back().slot)
    throw std::logic_error("transcript slots must be nondecreasing");
  events_.push_back(Event{slot, edge, kind, std::move(payload)});
}

std::string Transcript::to_jsonl(bool include_hidden) const {
  std::ostringstream out;
  for (const auto& e : events_) {
    nlohmann::json payload = e.payload;
    if (!include_hidden && payload.is_object()) {
      for (auto it = payload.begin(); it != payload.end();) {
        if (it.key().starts_with("hidden_"))
          it = payload.erase(it);
        else
          ++it;
      }
    }
    nlohmann::json line = {{"slot", e.slot},
                           {"edge", to_string(e.edge)},
                           {"kind", to_string(e.kind)},
                           {"payload", std::move(payload)}};
    out << line.dump() << '\n';
  }
  return out.str();
}

namespace {

Event parse_event_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("slot") ||
      !j.contains("edge") || !j.contains("kind") || !j.contains("payload") ||
      !j["slot"].is_number_integer())
    throw MalformedTraceError("bad trace line: " + line);
  Event e;
  e.slot = j["slot"].get<int>();
  e.edge = edge_from_string(j["edge"].get<std::string>());
  e.kind = kind_from_string(j["kind"].get<std::string>());
  e.payload = j["payload"];
  return e;
}

}  // namespace

Transcript Transcript::parse_jsonl(std::istream& in) {
  Transcript t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Event e = parse_event_line(line);
    if (!t.events_.empty() && e.slot < t.events_.back().slot)
      throw MalformedTraceError("trace slots decrease within a run");
    t.events_.push_back(std::move(e));
  }
  return t;
}

std::vector<Transcript> Transcript::parse_jsonl_runs(std::istream& in) {
  std::vector<Transcript> runs;
  Transcript current;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Event e = parse_event_line(line);
    if (!current.events_.empty() && e.slot < current.events_.back().slot) {
      runs.push_back(std::move(current));
      current = Transcript{};
    }
    current.events_.push_back(std::move(e));
  }
  if (!current.events_.empty()) runs.push_back(std::move(current));
  return runs;
}

}  // namespace bqc
