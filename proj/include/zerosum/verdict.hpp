#pragma once

#include <zerosum/error.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>

namespace zerosum {

using json = nlohmann::ordered_json;

enum class Status { Holds, Fails, HypothesisNotMet, UndecidedCapped };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::HypothesisNotMet: return "hypothesis_not_met";
        case Status::UndecidedCapped: return "undecided_capped";
    }
    return "?";
}

inline Status status_from_string(const std::string& s) {
    if (s == "holds") return Status::Holds;
    if (s == "fails") return Status::Fails;
    if (s == "hypothesis_not_met") return Status::HypothesisNotMet;
    if (s == "undecided_capped") return Status::UndecidedCapped;
    fail(ErrorCode::ParseError, "unknown status '" + s + "'");
}

/// Outcome of one statement on one instance. elapsed_ms is wall time and is
/// left out of serialized reports so they stay reproducible.
struct Verdict {
    Status status = Status::Holds;
    json witness = json::object();
    std::int64_t elapsed_ms = 0;

    json to_json() const {
        json j;
        j["status"] = to_string(status);
        j["witness"] = witness;
        return j;
    }
};

inline Verdict verdict(Status s, json witness = json::object()) { return Verdict{s, std::move(witness), 0}; }

}  // namespace zerosum
