// The release gate: runs every theorem suite at the pinned parameters
// (seed 7, q = 3/2, r = 5/2, σ_A = diag(2,2), σ_B = diag(3,3)) and prints one
// verdict line per criterion, with wall-clock limits where they are part of
// the criterion. Exit 0 only if every line reads PASS.
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "engine/error.hpp"
#include "engine/scenarios.hpp"

using namespace conic;

namespace {

std::string failing_checks(const ScenarioReport& rep) {
    std::string s;
    for (const auto& c : rep.checks) {
        if (c.pass) continue;
        if (!s.empty()) s += "; ";
        s += rep.name + "/" + c.label;
        if (!c.detail.empty()) s += " [" + c.detail + "]";
    }
    return s;
}

bool check_passed(const ScenarioReport& rep, const std::string& label) {
    for (const auto& c : rep.checks)
        if (c.label == label) return c.pass;
    return false;
}

struct Verdict {
    int number;
    std::string what;
    bool pass;
    std::string detail;
};

}  // namespace

int main() {
    ScenarioParams params;
    std::map<std::string, ScenarioReport> reports;
    for (const auto& name : suite_names()) reports.emplace(name, run_theorem_suite(name, params));

    auto gate = [&](int number, const std::string& what, const std::string& suite,
                    double limit = 0.0) -> Verdict {
        const ScenarioReport& rep = reports.at(suite);
        bool ok = rep.passed();
        std::string detail = failing_checks(rep);
        if (ok && limit > 0.0 && rep.runtime_seconds >= limit) {
            ok = false;
            detail = "runtime " + std::to_string(rep.runtime_seconds) + "s exceeds " +
                     std::to_string(limit) + "s";
        }
        return Verdict{number, what, ok, detail};
    };

    std::vector<Verdict> verdicts;
    verdicts.push_back(gate(1, "cosimplicial identities, 20 random cochains, under 10s",
                            "cosimplicial", 10.0));
    verdicts.push_back(gate(2, "coboundary squares to the identity", "coboundary"));
    verdicts.push_back(
        gate(3, "q-plane twist: relation, invariant hilbert series, superplane, under 5s",
             "plane", 5.0));
    verdicts.push_back(gate(4, "primitive round trip and non-uniqueness", "primitive"));

    verdicts.push_back(gate(5, "twisted ideal equals the kernel of normal-form after theta",
                            "T11"));

    {
        // The duality criterion needs the theorem actually exercised, not the
        // unmet-precondition escape hatch.
        Verdict v = gate(6, "dual of twist equals twist of dual by the coadjoint", "T14");
        v.pass = v.pass && check_passed(reports.at("T14"), "dual-of-twist");
        if (!v.pass && v.detail.empty()) v.detail = "dual-of-twist was skipped";
        verdicts.push_back(v);
    }

    {
        const ScenarioReport& t15 = reports.at("T15");
        const ScenarioReport& t16 = reports.at("T16");
        bool ok = t15.passed() && t16.passed();
        std::string detail = failing_checks(t15);
        if (!failing_checks(t16).empty())
            detail += (detail.empty() ? "" : "; ") + failing_checks(t16);
        double total = t15.runtime_seconds + t16.runtime_seconds;
        if (ok && total >= 60.0) {
            ok = false;
            detail = "runtime " + std::to_string(total) + "s exceeds 60s";
        }
        verdicts.push_back(
            Verdict{7, "all six products commute with twisting, under 60s", ok, detail});
    }

    verdicts.push_back(gate(8, "hom relations from sigma-transport equal the varsigma twist",
                            "hom_upsilon"));
    verdicts.push_back(
        gate(9, "braid-violating seed is classified non-cocycle and twist refuses it",
             "ybe_negative"));
    verdicts.push_back(
        gate(10, "form transport is a convolution anti-homomorphism intertwining faces",
             "bridge"));
    verdicts.push_back(gate(11, "star groupoid: iterated twists, inverses, gauge witnesses",
                            "star_gauge"));
    verdicts.push_back(
        gate(12, "twisted tensor products: q-plane reproduction and ideal oracle", "sttp"));

    bool all = true;
    for (const auto& v : verdicts) {
        std::cout << "criterion " << v.number << " (" << v.what
                  << "): " << (v.pass ? "PASS" : "FAIL");
        if (!v.detail.empty()) std::cout << " [" << v.detail << "]";
        std::cout << "\n";
        all = all && v.pass;
    }
    std::cout << (all ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
    return all ? 0 : 1;
}
