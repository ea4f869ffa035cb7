#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace partpoly {

using Json = nlohmann::ordered_json;

/// Outcome of a grid scan or certificate check.
///
/// `exceptions` holds every violation the scan observed, as tuples of
/// decimal/rational strings. Some checks are defined with a nonempty
/// expected-exception set (the CFT scan expects exactly {(2,6,4)}); the
/// verdict is pass iff the observed set equals the expected set, so for the
/// common expected-empty case this reduces to "pass iff no exceptions".
struct ScanReport {
    std::string check;
    Json params = Json::object();
    std::vector<std::vector<std::string>> exceptions;
    std::vector<std::vector<std::string>> expected;
    std::vector<Json> certificates;
    std::string notes;

    bool pass() const;
    Json to_json() const;
};

}  // namespace partpoly
