#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace qrc {

using Date = std::chrono::year_month_day;

/// Aligned daily index levels. Dates strictly increase and every level is positive.
struct MarketSeries {
    std::vector<Date> dates;
    std::vector<double> spx;
    std::vector<double> vix;

    [[nodiscard]] std::size_t size() const noexcept { return dates.size(); }

    /// Throws InvalidData (index = offending row) when an invariant fails.
    void validate() const;
};

/// Parses YYYY-MM-DD; nullopt when malformed or not a calendar date.
[[nodiscard]] std::optional<Date> parse_iso_date(const std::string& text);
[[nodiscard]] std::string format_date(const Date& d);

/**
 * Reads a "date,spx,vix" CSV with ISO-8601 dates, one row per trading day in
 * ascending order. Malformed rows raise ParseError and invariant violations
 * raise InvalidData; both carry the 1-based file line.
 */
[[nodiscard]] MarketSeries load_market_csv(const std::filesystem::path& path);
[[nodiscard]] MarketSeries parse_market_csv(std::istream& in);

/// Stylized facts of a market file.
struct MarketDiagnostics {
    std::size_t rows = 0;
    /// corr of daily % changes of SPX and VIX; nullopt when either is constant.
    std::optional<double> return_correlation;
    double mean_vix = 0.0;
    double max_vix = 0.0;
    Date max_vix_date{};
    bool vix_positive = true;
    bool spx_positive = true;
};

[[nodiscard]] MarketDiagnostics diagnostics(const MarketSeries& series);

}  // namespace qrc
