// Copyright 2026 The gge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include "gge/error.hpp"
#include "gge/state.hpp"
#include "json.hpp"

namespace gge {

using json = nlohmann::ordered_json;

PureState read_state_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidArgument(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidArgument("state file must be a JSON object");
    for (const char *key : {"version", "num_sites", "local_dim", "amplitudes"}) {
        if (!doc.contains(key)) throw InvalidArgument(std::string("state file is missing '") + key + "'");
    }
    if (!doc["version"].is_number_integer() || doc["version"].get<int>() != 1) {
        throw InvalidArgument("unsupported state file version");
    }
    if (!doc["num_sites"].is_number_unsigned() || !doc["local_dim"].is_number_unsigned()) {
        throw InvalidArgument("num_sites and local_dim must be non-negative integers");
    }
    const auto num_sites = doc["num_sites"].get<std::size_t>();
    const auto local_dim = doc["local_dim"].get<std::size_t>();
    const json &list = doc["amplitudes"];
    if (!list.is_array()) throw InvalidArgument("'amplitudes' must be an array");

    std::vector<Amplitude> amps;
    amps.reserve(list.size());
    for (const auto &pair : list) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw InvalidArgument("each amplitude must be a [real, imag] pair of numbers");
        }
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return PureState(num_sites, local_dim, std::move(amps), kStateFileNormTolerance);
}

std::string write_state_file(const PureState &state) {
    // One amplitude pair per line; json::dump gives shortest round-trip doubles.
    std::string out = "{\n \"version\": 1,\n \"num_sites\": " + std::to_string(state.num_sites()) +
                      ",\n \"local_dim\": " + std::to_string(state.local_dim()) + ",\n \"amplitudes\": [";
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out += i == 0 ? "\n  " : ",\n  ";
        out += json::array({amps[i].real(), amps[i].imag()}).dump();
    }
    out += "\n ]\n}\n";
    return out;
}

}  // namespace gge
