#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chv/identities.hpp"

namespace chv {

enum class CheckKind { Equality, Derivation, Shift };
enum class RecordStatus { Pass, Skip, Mismatch };
enum class OutputFormat { JsonLines, Csv, Table };

std::string_view to_string(CheckKind kind);
std::string_view to_string(RecordStatus status);
/// Throws std::invalid_argument for unknown names.
CheckKind check_kind_from_name(std::string_view name);
OutputFormat output_format_from_name(std::string_view name);

struct RunConfig {
    /// Identity ids to verify; empty or containing "all" selects the whole
    /// catalog. Unknown ids are rejected before any evaluation.
    std::vector<std::string> identities;
    long n_max = 25;
    long p_max = 8;
    long q_max = 8;
    std::set<CheckKind> checks{CheckKind::Equality};
    OutputFormat format = OutputFormat::JsonLines;
    bool fail_fast = false;
    /// Self-test hook: adds 1 to the named identity's closed form at every
    /// evaluated point, so the harness's mismatch path can be exercised
    /// deliberately. Empty disables.
    std::string corrupt_id;
};

/// One grid-point outcome. Equality records carry the identity id; jet
/// derivation records are "<seed>@<component>" and shift records
/// "<target>@shift-lhs" / "<target>@shift-rhs". MISMATCH and PASS records
/// carry both side values verbatim; SKIP records carry none.
struct VerificationRecord {
    std::string id;
    long n = 0;
    long p = 0;
    long q = 0;
    CaseTag tag = CaseTag::None;
    RecordStatus status = RecordStatus::Pass;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const VerificationRecord&,
                           const VerificationRecord&) = default;
};

struct RunSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t skipped = 0;
    std::size_t mismatched = 0;
};

/// Exhaustive sweep of grid x domain for the selected identities and checks.
/// Records come back in deterministic order: id lexicographic, then n, p, q
/// ascending. Throws std::invalid_argument for unknown identity ids before
/// evaluating anything.
RunSummary run_verification(const RunConfig& config,
                            std::vector<VerificationRecord>& records);

/// {"id":...,"n":...,"p":...,"q":...,"case":...,"status":...,"lhs":...,"rhs":...}
std::string to_json_line(const VerificationRecord& record);
/// Inverse of to_json_line. Throws std::invalid_argument on malformed input.
VerificationRecord record_from_json_line(const std::string& line);

extern const char* const kCsvHeader;
std::string to_csv_line(const VerificationRecord& record);

/// Writes records in the chosen format. Table output appends the summary;
/// json-lines and csv keep the stream machine-parseable (callers print the
/// summary elsewhere).
void write_records(std::ostream& os, OutputFormat format,
                   const std::vector<VerificationRecord>& records,
                   const RunSummary& summary);

}  // namespace chv
