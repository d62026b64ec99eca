#include "chered/report.hpp"

#include <sstream>

namespace chered {

bool VerificationReport::verdict() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const CheckRecord* VerificationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

static std::string params_str(const std::map<std::string, std::string>& m) {
    std::string out;
    for (const auto& [k, v] : m) {
        if (!out.empty()) out += " ";
        out += k + "=" + v;
    }
    return out;
}

std::string render_text(const VerificationReport& r, bool timings) {
    std::ostringstream os;
    os << "session: " << params_str(r.session) << "\n";
    for (const auto& c : r.checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.params.empty()) os << " (" << params_str(c.params) << ")";
        if (timings) os << " [" << c.millis << " ms]";
        if (!c.pass && !c.witness.empty()) os << "\n       witness: " << c.witness;
        os << "\n";
    }
    os << "verdict: " << (r.verdict() ? "pass" : "fail") << "\n";
    return os.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

std::string render_csv(const VerificationReport& r, bool timings) {
    std::ostringstream os;
    os << (timings ? "check,params,status,witness,millis" : "check,params,status,witness") << "\n";
    for (const auto& c : r.checks) {
        os << csv_escape(c.name) << "," << csv_escape(params_str(c.params)) << ","
           << (c.pass ? "pass" : "fail") << "," << csv_escape(c.witness);
        if (timings) os << "," << c.millis;
        os << "\n";
    }
    return os.str();
}

}  // namespace chered
