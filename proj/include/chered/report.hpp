#ifndef CHERED_REPORT_HPP
#define CHERED_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace chered {

struct CheckRecord {
    std::string name;
    std::map<std::string, std::string> params;
    bool pass = false;
    std::string witness;  // populated on failure
    double millis = 0.0;
};

// per-check records plus the session parameters they were produced under;
// the overall verdict is the conjunction of the records
struct VerificationReport {
    std::map<std::string, std::string> session;
    std::vector<CheckRecord> checks;

    bool verdict() const;
    const CheckRecord* first_failure() const;
};

// timings are opt-in so that default output is byte-stable across runs
std::string render_text(const VerificationReport& r, bool timings = false);
std::string render_csv(const VerificationReport& r, bool timings = false);

std::string csv_escape(const std::string& s);

}  // namespace chered

#endif
