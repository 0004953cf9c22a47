#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "stepenum/arith.hpp"

namespace stepenum {

/// Base of every recoverable error raised by the library.
class EnumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateEmission : public EnumError {
public:
    explicit DuplicateEmission(std::string encoding)
        : EnumError("duplicate emission of solution '" + encoding + "'"),
          encoding_(std::move(encoding)) {}
    const std::string& encoding() const noexcept { return encoding_; }

private:
    std::string encoding_;
};

/// A process reported a zero-cost step that neither finished nor was allowed
/// to be free (emissions always cost at least one tick).
class CostAccountingViolation : public EnumError {
public:
    using EnumError::EnumError;
};

class BudgetExhausted : public EnumError {
public:
    explicit BudgetExhausted(Cost cap)
        : EnumError("global cost cap of " + std::to_string(cap) + " ticks exhausted"), cap_(cap) {}
    Cost cap() const noexcept { return cap_; }

private:
    Cost cap_;
};

/// A declared capped-incremental bound was observed to be false: the
/// enumerator reached the budget for `index` solutions without producing them
/// (and without halting).
class BoundViolation : public EnumError {
public:
    explicit BoundViolation(std::size_t index)
        : EnumError("declared bound violated at solution index " + std::to_string(index)),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class OracleContractViolation : public EnumError {
public:
    using EnumError::EnumError;
};

class ParseError : public EnumError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : EnumError("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                    ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class NotHorn : public EnumError {
public:
    explicit NotHorn(std::size_t clause)
        : EnumError("clause " + std::to_string(clause) + " has more than one positive literal"),
          clause_(clause) {}
    std::size_t clause_index() const noexcept { return clause_; }

private:
    std::size_t clause_;
};

class InsufficientData : public EnumError {
public:
    using EnumError::EnumError;
};

class DegenerateTrace : public EnumError {
public:
    DegenerateTrace(const std::string& what, std::vector<std::size_t> excluded)
        : EnumError(what), excluded_(std::move(excluded)) {}
    const std::vector<std::size_t>& excluded() const noexcept { return excluded_; }

private:
    std::vector<std::size_t> excluded_;
};

class NoSamples : public EnumError {
public:
    using EnumError::EnumError;
};

}  // namespace stepenum
