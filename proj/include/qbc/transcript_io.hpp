#pragma once

#include <string>

#include "qbc/protocol.hpp"

namespace qbc {

// Transcript wire format: one JSON object per message, one per line, with
// fields {phase, sender, type, payload}. Complex numbers are [re, im] pairs
// at full double precision; Reveal transforms are row-major 2x2 entries.
std::string transcript_to_jsonl(const Transcript& t);

// Inverse of transcript_to_jsonl; the outcome is taken from the last
// verdict message. Round-trips losslessly.
Transcript transcript_from_jsonl(const std::string& doc);

}  // namespace qbc
