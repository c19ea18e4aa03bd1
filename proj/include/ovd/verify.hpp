#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ovd/construction.hpp"
#include "ovd/graphcore.hpp"
#include "ovd/ovcore.hpp"

namespace ovd {

struct LemmaResult {
    std::string lemma;
    bool pass = false;
    std::string detail;
};

struct CertificationReport {
    std::uint64_t pairs_certified = 0;
    std::uint64_t failures = 0;
    std::uint32_t max_length = 0;  // largest certified walk length (weighted)
    std::string first_failure;     // case name and offending step, when any
};

struct ObservationReport {
    bool unique_length2_pass = true;   // at most one 2-step connection per sampled P x T pair
    bool constant_fields_pass = true;  // walks inside the triple/couple layers keep (a,b)
    std::uint64_t pairs_checked = 0;
    std::uint64_t walks_checked = 0;
    bool exhaustive = false;
    std::string detail;
};

struct FlavorReport {
    Flavor flavor = Flavor::Weighted;
    std::optional<std::uint32_t> diameter;
    std::optional<std::pair<int, int>> diameter_witness;
    std::optional<std::pair<int, int>> witness_pair;        // the far-apart triple vertices
    std::optional<std::uint32_t> witness_distance;
    std::vector<LemmaResult> lemmas;
    std::optional<CertificationReport> certification;
    bool pass = false;
    std::string note;
};

struct DichotomyReport {
    InstanceClass cls;
    std::vector<FlavorReport> flavors;
    bool verdict_pass() const;
};

struct VerifyOptions {
    bool run_lemmas = true;
    bool run_certification = true;
    int threads = 0;
    BuildLimits limits{};
};

/// NONE: exact diameter of each requested flavor must be at most 4.
/// DISTINCT with witness (a,b,c,d): d((a,b,c),(d,c,b)) must be at least 7.
/// DEGENERATE: advisory only, no graph assertion.
DichotomyReport check_dichotomy(const OvInstance& inst, bool weighted, bool unweighted,
                                const VerifyOptions& options = {});

/// Orthogonal-tuple decision through the gadget: small tuples by brute
/// force, then diameter > 4 on the built graph. Agrees with the k=4
/// repetition-allowed brute-force search by construction.
bool decide_4ov_via_reduction(const OvInstance& inst, Flavor flavor,
                              const VerifyOptions& options = {});

/// Builds, for every ordered vertex pair, the explicit walk of length at
/// most 4 dictated by the case analysis (min common-one indices throughout)
/// and validates each hop against the graph. Requires a NONE instance.
CertificationReport certify_completeness_paths(const GadgetGraph& g, const OvInstance& inst,
                                               int threads = 0);

/// Ball-inclusion checks from I (weighted; radius-1 balls honor edge
/// weights) and from I', I (unweighted), via multi-source shortest paths.
std::vector<LemmaResult> check_neighborhood_lemmas(const GadgetGraph& g, const OvInstance& inst);

/// Weighted-flavor structural spot checks; exhaustive when the pair count
/// fits the budget, sampled otherwise.
ObservationReport check_structural_observations(const GadgetGraph& g,
                                                std::uint64_t sample_budget = 100000,
                                                std::uint64_t seed = 1);

/// Asserts d((a,b,c),(d,c,b)) >= 7 for a pairwise-distinct orthogonal
/// witness quadruple; throws PreconditionError otherwise.
bool check_hardness_witness(const GadgetGraph& g, const OvInstance& inst,
                            const std::array<int, 4>& witness);

nlohmann::ordered_json report_to_json(const DichotomyReport& report);

}  // namespace ovd
