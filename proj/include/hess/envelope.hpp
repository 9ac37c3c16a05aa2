#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hess/numeric.hpp"

namespace hess {

using OJson = nlohmann::ordered_json;

// Exact integers are emitted as JSON numbers while they fit the double-safe
// range, as decimal strings beyond it; rationals always as "p/q" strings.
inline OJson json_int(const Int& v) {
    static const Int kSafe = Int(1) << 53;
    if (v <= kSafe && v >= -kSafe) return OJson((long long)v.convert_to<long long>());
    return OJson(v.str());
}

inline OJson json_rat(const Rat& r) { return OJson(rat_str(r)); }

struct Envelope {
    std::string command;
    OJson inputs = OJson::object();
    OJson result = OJson::object();
    std::vector<std::string> citations;
    std::string status = "ok";  // ok | theorem-violation | unresolved | conjecture-report
};

inline OJson envelope_json(const Envelope& e) {
    OJson j = OJson::object();
    j["command"] = e.command;
    j["inputs"] = e.inputs;
    j["result"] = e.result;
    j["citations"] = e.citations;
    j["status"] = e.status;
    return j;
}

inline std::string render_json(const OJson& j) { return j.dump(2) + "\n"; }

inline int exit_code_for_status(const std::string& status) {
    if (status == "ok" || status == "conjecture-report") return 0;
    if (status == "theorem-violation") return 2;
    if (status == "unresolved") return 1;
    return 1;
}

}  // namespace hess
