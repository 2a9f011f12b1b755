#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qrc {

// Bad argument values and dimension mismatches are reported with
// std::invalid_argument. The types below cover data, parse, generation and
// configuration failures.

/// Input data violates a domain invariant (non-positive price, unsorted dates...).
class InvalidData : public std::runtime_error {
public:
    explicit InvalidData(const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(what), index_(index) {}

    /// Offending element index or file line, when one exists.
    [[nodiscard]] std::optional<std::size_t> index() const noexcept { return index_; }

private:
    std::optional<std::size_t> index_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class GenerationDiverged : public std::runtime_error {
public:
    GenerationDiverged(const std::string& what, std::size_t step)
        : std::runtime_error(what), step_(step) {}

    [[nodiscard]] std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// A configuration value failed validation; field() names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(field) {}

    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace qrc
