#include "qbc/transcript_io.hpp"

#include <sstream>
#include <stdexcept>

#include "json_util.hpp"

namespace qbc {

namespace {

using detail::json;

const char* phase_name(Phase p) { return p == Phase::Commit ? "commit" : "open"; }
const char* sender_name(Sender s) { return s == Sender::Alice ? "alice" : "bob"; }

Phase phase_from_name(const std::string& s) {
  if (s == "commit") return Phase::Commit;
  if (s == "open") return Phase::Open;
  throw std::invalid_argument("unknown phase tag: " + s);
}

Sender sender_from_name(const std::string& s) {
  if (s == "alice") return Sender::Alice;
  if (s == "bob") return Sender::Bob;
  throw std::invalid_argument("unknown sender tag: " + s);
}

json states_to_json(const std::vector<StateVector>& states) {
  json arr = json::array();
  for (const auto& s : states) arr.push_back(detail::state_to_json(s));
  return arr;
}

std::vector<StateVector> states_from_json(const json& j) {
  std::vector<StateVector> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(detail::state_from_json(e));
  return out;
}

json message_to_json(const Message& m) {
  json obj;
  if (const auto* offer = std::get_if<CommitOffer>(&m)) {
    obj["type"] = "commit-offer";
    obj["payload"] = json{{"states", states_to_json(offer->states)}};
  } else if (const auto* commit = std::get_if<CommitState>(&m)) {
    obj["type"] = "commit-state";
    obj["payload"] = json{{"states", states_to_json(commit->states)}};
  } else if (const auto* reveal = std::get_if<Reveal>(&m)) {
    json transforms = json::array();
    for (const auto& t : reveal->transforms) transforms.push_back(detail::cmatrix_to_json(t));
    obj["type"] = "reveal";
    obj["payload"] = json{{"announced_bit", reveal->announced_bit},
                          {"transforms", transforms}};
  } else {
    const auto& verdict = std::get<Verdict>(m);
    obj["type"] = "verdict";
    obj["payload"] = json{{"accepted", verdict.accepted},
                          {"opened_bit", verdict.opened_bit},
                          {"reason", verdict.reason}};
  }
  return obj;
}

Message message_from_json(const json& obj) {
  const std::string type = obj.at("type").get<std::string>();
  const json& payload = obj.at("payload");
  if (type == "commit-offer") {
    return CommitOffer{states_from_json(payload.at("states"))};
  }
  if (type == "commit-state") {
    return CommitState{states_from_json(payload.at("states"))};
  }
  if (type == "reveal") {
    Reveal r;
    r.announced_bit = payload.at("announced_bit").get<int>();
    for (const auto& t : payload.at("transforms")) {
      r.transforms.push_back(detail::cmatrix_from_json(t, 2, 2));
    }
    return r;
  }
  if (type == "verdict") {
    Verdict v;
    v.accepted = payload.at("accepted").get<bool>();
    v.opened_bit = payload.at("opened_bit").get<int>();
    v.reason = payload.at("reason").get<std::string>();
    return v;
  }
  throw std::invalid_argument("unknown message type: " + type);
}

}  // namespace

std::string transcript_to_jsonl(const Transcript& t) {
  std::string out;
  for (const auto& e : t.entries) {
    json obj = message_to_json(e.message);
    obj["phase"] = phase_name(e.phase);
    obj["sender"] = sender_name(e.sender);
    out += obj.dump();
    out += '\n';
  }
  return out;
}

Transcript transcript_from_jsonl(const std::string& doc) {
  Transcript t;
  std::istringstream in(doc);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json obj = json::parse(line);
    TranscriptEntry e{phase_from_name(obj.at("phase").get<std::string>()),
                      sender_from_name(obj.at("sender").get<std::string>()),
                      message_from_json(obj)};
    if (const auto* v = std::get_if<Verdict>(&e.message)) t.outcome = *v;
    t.entries.push_back(std::move(e));
  }
  return t;
}

}  // namespace qbc
