#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace domlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Guard or precondition violation: bad sizes, values outside a proven range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// API misuse a caller can always avoid (capacity mismatch, missing meta).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. line is 1-based; 0 means the whole stream.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class FormulaGap { NTooSmall, MTooSmall, UncoveredCase };

const char* formula_gap_name(FormulaGap gap);

// Closed form requested outside its proven guard.
class FormulaDomainError : public DomainError {
 public:
  FormulaDomainError(const std::string& what, FormulaGap gap)
      : DomainError(what), gap_(gap) {}
  FormulaGap gap() const { return gap_; }

 private:
  FormulaGap gap_;
};

// Search ran out of its node budget. best_lower is the largest size proven
// infeasible plus one; best_upper carries a witness size when one was found.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t nodes, int best_lower,
              std::optional<int> best_upper)
      : Error(what), nodes_(nodes), best_lower_(best_lower), best_upper_(best_upper) {}
  std::uint64_t nodes() const { return nodes_; }
  int best_lower() const { return best_lower_; }
  std::optional<int> best_upper() const { return best_upper_; }

 private:
  std::uint64_t nodes_;
  int best_lower_;
  std::optional<int> best_upper_;
};

}  // namespace domlab
