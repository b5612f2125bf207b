#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fintext/dates.hpp"
#include "fintext/prices.hpp"

namespace fintext {

struct FilingRecord {
  std::string filing_id;
  std::string cik;
  std::string ticker;
  std::string firm_name;
  Timestamp filed_at;
  std::string text;
  std::uint64_t word_count = 0;  // whitespace tokens of the raw text
};

std::uint64_t whitespace_token_count(std::string_view text);

struct CorpusFilterConfig {
  std::uint64_t min_words = 150;
  double min_price = 5.0;
  std::optional<std::set<std::string>> allowed_tickers;
  std::optional<std::pair<Day, Day>> date_range;  // inclusive
};

struct FilterRemoval {
  std::string filter;
  std::uint64_t removed = 0;
};

/// Filings in (filed_at, filing_id) order plus the log of applied filters.
struct Corpus {
  std::vector<FilingRecord> filings;
  std::vector<FilterRemoval> provenance;

  std::size_t size() const { return filings.size(); }
};

/// Loads the metadata CSV (filing_id,cik,ticker,firm_name,filed_at,text_path)
/// and one UTF-8 text file per row. Throws DataError naming the offending
/// row on missing files, malformed timestamps, or duplicate filing ids.
Corpus load_filings(const std::filesystem::path& metadata_path,
                    const std::filesystem::path& text_root);

/// Keeps a filing iff it passes every predicate: word count, allowed-ticker
/// set, matchable price, penny-stock threshold (last close on or before the
/// filing date), and date range. Never fails; removals are counted per
/// filter in the provenance log.
Corpus filter_corpus(const Corpus& corpus, const CorpusFilterConfig& config,
                     const PriceStore& prices);

struct YearDescriptivesRow {
  int year = 0;
  std::uint64_t total_filings = 0;
  std::uint64_t covered_firms = 0;
  double mean_stemmed_length = 0.0;
};

struct CorpusDescriptives {
  std::vector<YearDescriptivesRow> years;
  std::uint64_t firm_count = 0;
  // per-firm filing counts
  double filings_per_firm_mean = 0.0;
  double filings_per_firm_median = 0.0;
  double filings_per_firm_std = 0.0;
  std::uint64_t filings_per_firm_min = 0;
  std::uint64_t filings_per_firm_max = 0;
};

/// Per-year totals plus per-firm activity statistics. `stemmed_lengths`
/// must be aligned with the corpus ordering.
CorpusDescriptives corpus_descriptives(
    const Corpus& corpus, std::span<const std::uint32_t> stemmed_lengths);

}  // namespace fintext
