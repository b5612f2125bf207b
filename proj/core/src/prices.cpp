#include "fintext/prices.hpp"

#include <algorithm>

#include "fintext/csv.hpp"
#include "fintext/error.hpp"

namespace fintext {

std::optional<std::size_t> PriceSeries::index_on_or_before(Day d) const {
  auto it = std::upper_bound(dates.begin(), dates.end(), d);
  if (it == dates.begin()) return std::nullopt;
  return std::size_t(std::distance(dates.begin(), it)) - 1;
}

std::optional<double> PriceSeries::close_on_or_before(Day d) const {
  auto idx = index_on_or_before(d);
  if (!idx) return std::nullopt;
  return close[*idx];
}

void PriceSeries::validate() const {
  if (dates.size() != close.size()) {
    throw InternalError("price series: date/price size mismatch");
  }
  for (std::size_t i = 0; i < dates.size(); ++i) {
    if (i > 0 && !(dates[i - 1] < dates[i])) {
      throw DataError("price series for '" + ticker +
                      "' has non-increasing dates");
    }
    if (!(close[i] > 0.0)) {
      throw DataError("price series for '" + ticker +
                      "' has a non-positive price");
    }
  }
}

PriceStore PriceStore::load(const std::filesystem::path& csv_path) {
  CsvReader reader(csv_path);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields.size() != 3 || fields[0] != "date" ||
      fields[1] != "ticker" || fields[2] != "adj_close") {
    throw DataError("price file '" + csv_path.string() +
                    "' must start with header date,ticker,adj_close");
  }
  std::map<std::string, PriceSeries> by_ticker;
  while (reader.next(fields)) {
    if (fields.size() != 3) {
      throw DataError("price file '" + csv_path.string() + "' line " +
                      std::to_string(reader.line_number()) +
                      ": expected 3 fields");
    }
    auto& series = by_ticker[fields[1]];
    series.ticker = fields[1];
    series.dates.push_back(parse_date(fields[0]));
    series.close.push_back(parse_double(
        fields[2], "price file line " + std::to_string(reader.line_number())));
  }
  PriceStore store;
  for (auto& [ticker, series] : by_ticker) {
    // rows may arrive grouped by date rather than ticker
    std::vector<std::size_t> order(series.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return series.dates[a] < series.dates[b];
    });
    PriceSeries sorted;
    sorted.ticker = ticker;
    for (auto i : order) {
      sorted.dates.push_back(series.dates[i]);
      sorted.close.push_back(series.close[i]);
    }
    sorted.validate();
    store.add(std::move(sorted));
  }
  return store;
}

const PriceSeries* PriceStore::series(const std::string& ticker) const {
  auto it = series_.find(ticker);
  return it == series_.end() ? nullptr : &it->second;
}

std::optional<double> PriceStore::close_on_or_before(const std::string& ticker,
                                                     Day d) const {
  const PriceSeries* s = series(ticker);
  if (s == nullptr) return std::nullopt;
  return s->close_on_or_before(d);
}

void PriceStore::add(PriceSeries series) {
  series.validate();
  series_[series.ticker] = std::move(series);
}

PriceSeries load_market_series(const std::filesystem::path& csv_path) {
  CsvReader reader(csv_path);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields.size() != 2 || fields[0] != "date" ||
      fields[1] != "adj_close") {
    throw DataError("market file '" + csv_path.string() +
                    "' must start with header date,adj_close");
  }
  PriceSeries series;
  series.ticker = "_market";
  while (reader.next(fields)) {
    if (fields.size() != 2) {
      throw DataError("market file '" + csv_path.string() + "' line " +
                      std::to_string(reader.line_number()) +
                      ": expected 2 fields");
    }
    series.dates.push_back(parse_date(fields[0]));
    series.close.push_back(parse_double(
        fields[1], "market file line " + std::to_string(reader.line_number())));
  }
  series.validate();
  return series;
}

}  // namespace fintext
