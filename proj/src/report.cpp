#include "partpoly/report.hpp"

#include <algorithm>

namespace partpoly {

bool ScanReport::pass() const {
    auto observed = exceptions;
    auto wanted = expected;
    std::sort(observed.begin(), observed.end());
    std::sort(wanted.begin(), wanted.end());
    return observed == wanted;
}

Json ScanReport::to_json() const {
    Json j;
    j["check"] = check;
    j["params"] = params;
    j["verdict"] = pass() ? "pass" : "fail";
    j["exceptions"] = Json::array();
    for (const auto& e : exceptions) j["exceptions"].push_back(e);
    if (!expected.empty()) {
        j["expected_exceptions"] = Json::array();
        for (const auto& e : expected) j["expected_exceptions"].push_back(e);
    }
    j["certificates"] = Json::array();
    for (const auto& c : certificates) j["certificates"].push_back(c);
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

}  // namespace partpoly
