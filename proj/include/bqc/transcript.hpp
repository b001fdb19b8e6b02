#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace bqc {

enum class Edge { c_to_a_quantum, a_to_b_quantum, a_to_b_classical, b_to_a_classical };
enum class EventKind { photon, absence, bell_outcome, angle_list, result_bits, t_list };

std::string to_string(Edge e);
std::string to_string(EventKind k);
Edge edge_from_string(const std::string& s);
EventKind kind_from_string(const std::string& s);

// One protocol event. Payload keys starting with "hidden_" carry ground
// truth for the debug trace only and are stripped from the attacker-visible
// serialization.
struct Event {
  int slot = 0;
  Edge edge = Edge::c_to_a_quantum;
  EventKind kind = EventKind::photon;
  nlohmann::json payload;
};

struct MalformedTraceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered event log of a run; slots are nondecreasing.
class Transcript {
 public:
  void log(int slot, Edge edge, EventKind kind, nlohmann::json payload = {});

  const std::vector<Event>& events() const { return events_; }

  // One JSON object per line, fields slot/edge/kind/payload. With
  // include_hidden the debug keys are kept.
  std::string to_jsonl(bool include_hidden = false) const;

  static Transcript parse_jsonl(std::istream& in);  // throws MalformedTraceError

  // A trace file may concatenate several runs; a slot decrease starts a
  // new run.
  static std::vector<Transcript> parse_jsonl_runs(std::istream& in);

 private:
  std::vector<Event> events_;
};

}  // namespace bqc
