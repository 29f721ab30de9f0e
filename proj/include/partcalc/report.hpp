#pragma once

#include "partcalc/partition.hpp"

#include "json.hpp"

#include <string>

namespace partcalc {

// Outcome of one identity check.  pass holds exactly when lhs = rhs (and
// every swept instance agreed); a failing sweep names its first
// counterexample.  Failures are data for the caller, never exceptions.
struct VerificationReport {
    std::string identity;
    std::string params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string counterexample;

    std::string to_json() const {
        nlohmann::json j;
        j["identity"] = identity;
        j["params"] = params;
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        j["pass"] = pass;
        j["counterexample"] = counterexample;
        return j.dump();
    }

    static std::string tsv_header() { return "identity\tparams\tlhs\trhs\tpass\tcounterexample"; }

    std::string to_tsv() const {
        return identity + "\t" + params + "\t" + lhs + "\t" + rhs + "\t" +
               (pass ? "true" : "false") + "\t" + counterexample;
    }
};

// Partition rendering used inside params/counterexample strings.
inline std::string render_partition(const Partition& p) { return "(" + p.to_string() + ")"; }

}  // namespace partcalc
