#include "qrc/market.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "qrc/errors.hpp"
#include "qrc/stats.hpp"

namespace qrc {

void MarketSeries::validate() const {
    if (spx.size() != dates.size() || vix.size() != dates.size()) {
        throw InvalidData("market series: column lengths differ");
    }
    for (std::size_t i = 0; i < dates.size(); ++i) {
        if (!(spx[i] > 0.0) || !std::isfinite(spx[i])) {
            throw InvalidData(fmt::format("market series: spx at row {} is not positive", i), i);
        }
        if (!(vix[i] > 0.0) || !std::isfinite(vix[i])) {
            throw InvalidData(fmt::format("market series: vix at row {} is not positive", i), i);
        }
        if (i > 0 && !(dates[i - 1] < dates[i])) {
            throw InvalidData(fmt::format("market series: dates not strictly increasing at row {}", i), i);
        }
    }
}

std::optional<Date> parse_iso_date(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    auto field = [&text](std::size_t pos, std::size_t len) -> std::optional<int> {
        int v = 0;
        const char* first = text.data() + pos;
        auto [ptr, ec] = std::from_chars(first, first + len, v);
        if (ec != std::errc{} || ptr != first + len) return std::nullopt;
        return v;
    };
    const auto y = field(0, 4);
    const auto m = field(5, 2);
    const auto d = field(8, 2);
    if (!y || !m || !d) return std::nullopt;
    const Date date{std::chrono::year{*y}, std::chrono::month{static_cast<unsigned>(*m)},
                    std::chrono::day{static_cast<unsigned>(*d)}};
    if (!date.ok()) return std::nullopt;
    return date;
}

std::string format_date(const Date& d) {
    return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                       static_cast<unsigned>(d.day()));
}

namespace {

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::optional<double> parse_number(const std::string& text) {
    if (text.empty()) return std::nullopt;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return v;
}

}  // namespace

MarketSeries parse_market_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError("market csv: empty input", 1);
    ++line_no;
    std::string header = trim(line);
    std::transform(header.begin(), header.end(), header.begin(), [](unsigned char c) { return std::tolower(c); });
    if (header != "date,spx,vix") {
        throw ParseError(fmt::format("market csv line 1: expected header 'date,spx,vix', got '{}'", trim(line)), 1);
    }

    MarketSeries series;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string row = trim(line);
        if (row.empty()) continue;

        std::vector<std::string> cells;
        std::stringstream ss(row);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
        if (!row.empty() && row.back() == ',') cells.emplace_back();
        if (cells.size() != 3) {
            throw ParseError(fmt::format("market csv line {}: expected 3 fields, got {}", line_no, cells.size()),
                             line_no);
        }
        const auto date = parse_iso_date(cells[0]);
        if (!date) throw ParseError(fmt::format("market csv line {}: bad date '{}'", line_no, cells[0]), line_no);
        const auto spx = parse_number(cells[1]);
        const auto vix = parse_number(cells[2]);
        if (!spx || !vix) {
            throw ParseError(fmt::format("market csv line {}: missing or non-numeric value", line_no), line_no);
        }
        if (!(*spx > 0.0) || !(*vix > 0.0)) {
            throw InvalidData(fmt::format("market csv line {}: index levels must be positive", line_no), line_no);
        }
        if (!series.dates.empty() && !(series.dates.back() < *date)) {
            throw InvalidData(fmt::format("market csv line {}: date {} is not after {}", line_no, cells[0],
                                          format_date(series.dates.back())),
                              line_no);
        }
        series.dates.push_back(*date);
        series.spx.push_back(*spx);
        series.vix.push_back(*vix);
    }
    return series;
}

MarketSeries load_market_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(fmt::format("cannot open market file '{}'", path.string()));
    return parse_market_csv(in);
}

MarketDiagnostics diagnostics(const MarketSeries& series) {
    MarketDiagnostics out;
    out.rows = series.size();
    out.vix_positive = std::all_of(series.vix.begin(), series.vix.end(), [](double v) { return v > 0.0; });
    out.spx_positive = std::all_of(series.spx.begin(), series.spx.end(), [](double v) { return v > 0.0; });
    if (series.size() == 0) return out;

    out.mean_vix = mean(series.vix);
    const auto peak = std::max_element(series.vix.begin(), series.vix.end());
    out.max_vix = *peak;
    out.max_vix_date = series.dates[static_cast<std::size_t>(peak - series.vix.begin())];

    if (series.size() >= 3 && out.vix_positive && out.spx_positive) {
        std::vector<double> spx_pct;
        std::vector<double> vix_pct;
        for (std::size_t i = 1; i < series.size(); ++i) {
            spx_pct.push_back(100.0 * (series.spx[i] / series.spx[i - 1] - 1.0));
            vix_pct.push_back(100.0 * (series.vix[i] / series.vix[i - 1] - 1.0));
        }
        out.return_correlation = pearson(spx_pct, vix_pct);
    }
    return out;
}

}  // namespace qrc
