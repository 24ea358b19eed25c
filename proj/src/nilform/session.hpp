#pragma once

#include "io.hpp"

namespace nilform {

// One request/response cycle. The request carries the command, the input
// objects inline (the CLI reads files into it), parameter substitutions and
// command options. The response is deterministic for a fixed request.
//
// Commands: validate | classify | metric-check | integrability | bc |
// bc-class | harmonic | obstruct | theorem-check | jet-check | pullback.
Json run_request(const Json& request);

// Status codes shared with the C API and the CLI exit codes.
enum class Status : int { Ok = 0, ParseFailure = 2, MathDomain = 3, Refused = 4 };

// run_request wrapped with the error-to-report mapping; never throws.
std::pair<Status, Json> run_request_caught(const Json& request);

}  // namespace nilform
