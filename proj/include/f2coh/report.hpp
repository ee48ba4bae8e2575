#ifndef F2COH_REPORT_HPP
#define F2COH_REPORT_HPP

#include <json.hpp>

#include "f2coh/chain.hpp"
#include "f2coh/cochain.hpp"
#include "f2coh/extension.hpp"
#include "f2coh/homotopy.hpp"

namespace f2coh {

// nlohmann::json objects keep keys sorted, so a dump of these reports is
// byte-stable for a fixed configuration (timings aside).

inline nlohmann::json to_json(const FiniteGroup& G, const ChainKey& k) {
    nlohmann::json tuple = nlohmann::json::array();
    for (Element g : k.tuple)
        tuple.push_back(to_cycle_string(G.perm(g)));
    return {{"tuple", tuple}, {"trailing", to_cycle_string(G.perm(k.trailing))}};
}

inline nlohmann::json to_json(const FiniteGroup& G, const HomotopyReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const ChainKey& k : r.failures)
        failures.push_back(to_json(G, k));
    return {{"identity", r.identity},
            {"dim", r.dim},
            {"tested", r.tested},
            {"failures", failures},
            {"pass", r.ok()}};
}

inline nlohmann::json to_json(const FiniteGroup& G, const CocycleCert& c) {
    nlohmann::json j{{"pass", c.ok}, {"checked", c.checked}};
    if (c.counterexample) {
        nlohmann::json t = nlohmann::json::array();
        for (Element g : *c.counterexample)
            t.push_back(to_cycle_string(G.perm(g)));
        j["counterexample"] = t;
    }
    return j;
}

inline nlohmann::json to_json(const ClassCertificate& c) {
    nlohmann::json j{{"rep", c.rep},
                     {"size", c.size},
                     {"method", c.method},
                     {"solvable", c.solvable},
                     {"cross_checked", c.cross_checked}};
    j["blocker"] = c.solvable ? nlohmann::json() : nlohmann::json(c.blocker);
    if (c.solvable)
        j["lifts_log2"] = c.solution_log2;
    return j;
}

inline nlohmann::json to_json(const CoverReport& r) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : r.classes)
        classes.push_back(to_json(c));
    nlohmann::json j{{"group", r.group},
                     {"order", r.order},
                     {"index", r.index},
                     {"t_dim", r.t_dim},
                     {"e_order", r.e_order},
                     {"involutions_in_t", r.involutions_in_t},
                     {"involutions_outside_t", r.involutions_outside_t},
                     {"classes", classes},
                     {"method", r.method},
                     {"unique_involution_class", r.unique_involution_class},
                     {"alpha_cocycle",
                      {{"pass", r.alpha_cocycle_ok},
                       {"mode", r.alpha_cocycle_mode},
                       {"checked", r.alpha_cocycle_checked}}},
                     {"nonsplit_basis", r.nonsplit_basis},
                     {"seed", r.seed}};
    j["nonsplit"] = r.nonsplit ? nlohmann::json(*r.nonsplit) : nlohmann::json();
    nlohmann::json t;
    for (const auto& [k, v] : r.timings_ms)
        t[k] = v;
    j["timings_ms"] = t;
    if (!r.unique_involution_class)
        j["hypothesis_note"] = "outside paper hypothesis: more than one involution class";
    return j;
}

} // namespace f2coh

#endif
