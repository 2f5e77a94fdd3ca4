#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "pscore/chain.hpp"
#include "pscore/scoring.hpp"

namespace pscore {

enum class OutputFormat { tsv, json };

/// "%.12g"; the precision venue-score files round-trip at.
std::string format_sig12(double value);
/// "%.6f".
std::string format_fixed6(double value);

/// Lines starting with '#' before the header (for self-describing reports).
using ReportPreamble = std::vector<std::string>;

/// TSV: preamble comments, header "rank\tname\tscore", scores to 6
/// decimals. JSON: array of {rank, name, score} with scores rounded to 6
/// decimals.
void write_ranking(std::ostream& out, const Ranking& ranking,
                   OutputFormat format, const ReportPreamble& preamble = {});

/// Venue P-scores in both forms. TSV: preamble, header
/// "venue\traw_score\tnormalized_score", 12 significant digits, rows in
/// ranking order. JSON: array of {rank, name, score, raw_score}.
void write_venue_scores(std::ostream& out, const ScoreVector& raw,
                        const ScoreVector& normalized, OutputFormat format,
                        const ReportPreamble& preamble = {});

/// Reads either format written by write_venue_scores and returns the raw
/// vector (venue kind, raw normalization) in file order.
ScoreVector read_venue_scores(std::istream& in);

/// TSV dump: header row "label" + column labels, then one row per matrix
/// row, entries to 12 significant digits.
void write_matrix_tsv(std::ostream& out, const Matrix& m,
                      const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels);

/// Author publication lists from JSONL. Each line is either an aggregated
/// entry {"author", "venue", "count"} or a per-paper record with "authors"
/// and "venue" (optionally "id"/"title"); per-paper records add one
/// publication per listed author, deduplicated per (paper key, author).
std::map<std::string, std::vector<VenueCount>> parse_author_pubs(
    std::istream& in);

}  // namespace pscore
