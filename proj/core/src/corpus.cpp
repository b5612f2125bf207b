#include "fintext/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "fintext/csv.hpp"
#include "fintext/error.hpp"

namespace fintext {

std::uint64_t whitespace_token_count(std::string_view text) {
  std::uint64_t count = 0;
  bool in_token = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++count;
    }
  }
  return count;
}

Corpus load_filings(const std::filesystem::path& metadata_path,
                    const std::filesystem::path& text_root) {
  CsvReader reader(metadata_path);
  std::vector<std::string> fields;
  if (!reader.next(fields)) {
    throw DataError("metadata file '" + metadata_path.string() + "' is empty");
  }
  const std::vector<std::string> expected = {"filing_id", "cik",      "ticker",
                                             "firm_name", "filed_at", "text_path"};
  if (fields != expected) {
    throw DataError("metadata file '" + metadata_path.string() +
                    "' must start with header "
                    "filing_id,cik,ticker,firm_name,filed_at,text_path");
  }

  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  while (reader.next(fields)) {
    const std::string row = "metadata row " + std::to_string(reader.line_number());
    if (fields.size() != 6) {
      throw DataError(row + ": expected 6 fields, got " +
                      std::to_string(fields.size()));
    }
    FilingRecord rec;
    rec.filing_id = fields[0];
    rec.cik = fields[1];
    rec.ticker = fields[2];
    rec.firm_name = fields[3];
    if (rec.filing_id.empty()) throw DataError(row + ": empty filing_id");
    if (!seen_ids.insert(rec.filing_id).second) {
      throw DataError(row + ": duplicate filing_id '" + rec.filing_id + "'");
    }
    try {
      rec.filed_at = parse_timestamp(fields[4]);
    } catch (const DataError& e) {
      throw DataError(row + " (filing '" + rec.filing_id + "'): " + e.what());
    }
    const auto text_path = text_root / fields[5];
    std::ifstream text_in(text_path, std::ios::binary);
    if (!text_in) {
      throw DataError(row + ": filing '" + rec.filing_id +
                      "' references missing text file '" + text_path.string() +
                      "'");
    }
    std::ostringstream buffer;
    buffer << text_in.rdbuf();
    rec.text = std::move(buffer).str();
    rec.word_count = whitespace_token_count(rec.text);
    corpus.filings.push_back(std::move(rec));
  }

  std::sort(corpus.filings.begin(), corpus.filings.end(),
            [](const FilingRecord& a, const FilingRecord& b) {
              if (a.filed_at != b.filed_at) return a.filed_at < b.filed_at;
              return a.filing_id < b.filing_id;
            });
  return corpus;
}

Corpus filter_corpus(const Corpus& corpus, const CorpusFilterConfig& config,
                     const PriceStore& prices) {
  Corpus out;
  FilterRemoval min_words{"min_words", 0};
  FilterRemoval ticker_not_allowed{"ticker_not_allowed", 0};
  FilterRemoval price_unmatched{"price_unmatched", 0};
  FilterRemoval penny_stock{"penny_stock", 0};
  FilterRemoval date_range{"date_range", 0};

  for (const FilingRecord& rec : corpus.filings) {
    if (rec.word_count < config.min_words) {
      min_words.removed++;
      continue;
    }
    if (config.allowed_tickers &&
        config.allowed_tickers->count(rec.ticker) == 0) {
      ticker_not_allowed.removed++;
      continue;
    }
    auto close = prices.close_on_or_before(rec.ticker, rec.filed_at.local_date());
    if (!close) {
      price_unmatched.removed++;
      continue;
    }
    if (*close < config.min_price) {
      penny_stock.removed++;
      continue;
    }
    if (config.date_range) {
      Day d = rec.filed_at.local_date();
      if (d < config.date_range->first || d > config.date_range->second) {
        date_range.removed++;
        continue;
      }
    }
    out.filings.push_back(rec);
  }

  out.provenance = corpus.provenance;
  for (auto& removal :
       {min_words, ticker_not_allowed, price_unmatched, penny_stock, date_range}) {
    out.provenance.push_back(removal);
  }
  return out;
}

CorpusDescriptives corpus_descriptives(
    const Corpus& corpus, std::span<const std::uint32_t> stemmed_lengths) {
  if (!stemmed_lengths.empty() && stemmed_lengths.size() != corpus.size()) {
    throw InternalError("corpus_descriptives: stemmed_lengths misaligned");
  }

  struct YearAccumulator {
    std::uint64_t filings = 0;
    std::set<std::string> firms;
    std::uint64_t stemmed_total = 0;
  };
  std::map<int, YearAccumulator> by_year;
  std::map<std::string, std::uint64_t> per_firm;

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const FilingRecord& rec = corpus.filings[i];
    auto& acc = by_year[year_of(rec.filed_at.local_date())];
    acc.filings++;
    acc.firms.insert(rec.ticker);
    if (!stemmed_lengths.empty()) acc.stemmed_total += stemmed_lengths[i];
    per_firm[rec.ticker]++;
  }

  CorpusDescriptives out;
  for (const auto& [year, acc] : by_year) {
    YearDescriptivesRow row;
    row.year = year;
    row.total_filings = acc.filings;
    row.covered_firms = acc.firms.size();
    row.mean_stemmed_length =
        acc.filings == 0 ? 0.0 : double(acc.stemmed_total) / double(acc.filings);
    out.years.push_back(row);
  }

  out.firm_count = per_firm.size();
  if (!per_firm.empty()) {
    std::vector<double> counts;
    counts.reserve(per_firm.size());
    for (const auto& [ticker, n] : per_firm) counts.push_back(double(n));
    std::sort(counts.begin(), counts.end());
    const std::size_t n = counts.size();
    double sum = 0.0;
    for (double c : counts) sum += c;
    out.filings_per_firm_mean = sum / double(n);
    out.filings_per_firm_median =
        n % 2 == 1 ? counts[n / 2] : 0.5 * (counts[n / 2 - 1] + counts[n / 2]);
    double ss = 0.0;
    for (double c : counts) ss += (c - out.filings_per_firm_mean) *
                                  (c - out.filings_per_firm_mean);
    out.filings_per_firm_std = n > 1 ? std::sqrt(ss / double(n - 1)) : 0.0;
    out.filings_per_firm_min = std::uint64_t(counts.front());
    out.filings_per_firm_max = std::uint64_t(counts.back());
  }
  return out;
}

}  // namespace fintext
