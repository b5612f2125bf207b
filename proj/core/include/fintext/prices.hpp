#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fintext/dates.hpp"

namespace fintext {

/// Adjusted-close history for one symbol; dates strictly increasing,
/// prices strictly positive.
struct PriceSeries {
  std::string ticker;
  std::vector<Day> dates;
  std::vector<double> close;

  std::size_t size() const { return dates.size(); }
  /// Index of the last observation on or before d, if any.
  std::optional<std::size_t> index_on_or_before(Day d) const;
  std::optional<double> close_on_or_before(Day d) const;
  void validate() const;
};

/// Per-ticker price series loaded from a "date,ticker,adj_close" CSV.
class PriceStore {
 public:
  static PriceStore load(const std::filesystem::path& csv_path);

  const PriceSeries* series(const std::string& ticker) const;
  std::optional<double> close_on_or_before(const std::string& ticker,
                                           Day d) const;
  std::size_t ticker_count() const { return series_.size(); }
  const std::map<std::string, PriceSeries>& all() const { return series_; }

  void add(PriceSeries series);

 private:
  std::map<std::string, PriceSeries> series_;
};

/// Loads a "date,adj_close" CSV (the market index file).
PriceSeries load_market_series(const std::filesystem::path& csv_path);

}  // namespace fintext
