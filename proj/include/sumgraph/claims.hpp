#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sumgraph {

// Radius cap used for the corpus count rows (n <= 7). Chosen above the
// largest minimum radius occurring for graphs of these orders (the n = 6
// maximum is 29, attained once; see tests), with margin.
constexpr long kCorpusRadiusCap = 32;

struct ClaimRecord {
    enum class Expected { Pass, Report };
    enum class Actual { Pass, Fail, ReportOnly };

    std::string id;
    std::string section;   // paper section the claim re-checks
    std::string command;   // how to reproduce from the CLI
    Expected expected = Expected::Pass;
    Actual actual = Actual::Fail;
    std::string detail;
    nlohmann::json witness;

    bool gating_failure() const {
        return expected == Expected::Pass && actual != Actual::Pass;
    }
};

struct ClaimOptions {
    std::string filter;      // substring match on claim ids; empty = all
    std::string corpus_dir;  // where graphs<n>.g6 / cubic<n>.g6 live; may be empty
    int jobs = 1;
};

// Executes the claim ledger (deterministically, ordered by id). Errors:
// UnknownClaimId when a nonempty filter matches nothing.
std::vector<ClaimRecord> run_claims(const ClaimOptions& opts = {});

// Ledger ids (and their sections) without running anything.
std::vector<std::pair<std::string, std::string>> claim_index();
std::vector<std::string> claim_ids();

// nonzero iff any expected-PASS claim failed
int claims_exit_code(const std::vector<ClaimRecord>& records);

std::string render_claim_table(const std::vector<ClaimRecord>& records);

}  // namespace sumgraph
