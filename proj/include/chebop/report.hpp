#pragma once

// Reproduction of the published results: every printed fixed vector,
// spectrum, operator and structural claim is recomputed exactly and compared
// with the value as printed.

#include <json.hpp>

#include <string>
#include <vector>

namespace chebop {

enum class ReportStatus { Match, MismatchPaperSuspect, NotPrinted };

/// Wire names: "MATCH", "MISMATCH-PAPER-SUSPECT", "NOT-PRINTED".
std::string_view status_name(ReportStatus s);

struct ReportEntry {
  std::string id;        // stable key, e.g. "c2.fixed.n4a"
  std::string citation;  // where the printed value appears
  std::string expected;  // as printed, transcribed to ASCII
  std::string computed;
  ReportStatus status;
  /// Exact evidence for a mismatch; may be empty for matches.
  std::string witness;
};

struct ReproductionReport {
  std::vector<ReportEntry> entries;
  /// Conventions the printed text mixes that are not result discrepancies.
  std::vector<std::string> notes;

  const ReportEntry* find(const std::string& id) const&;
  const ReportEntry* find(const std::string& id) const&& = delete;
  std::size_t count(ReportStatus s) const;
};

ReproductionReport reproduce_results();

nlohmann::json report_json(const ReproductionReport& r);
std::string report_text(const ReproductionReport& r);

}  // namespace chebop
