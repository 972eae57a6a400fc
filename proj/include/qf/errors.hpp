#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qf {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failures that are legitimate answers about the input (the command-line
/// tool maps these to exit status 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input or violated preconditions (exit status 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public DomainError {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : DomainError("BudgetExceeded: enumeration did not close within " +
                    std::to_string(budget) + " elements (possibly infinite)"),
        budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

class CapExceeded : public DomainError {
 public:
  CapExceeded(std::size_t order, std::size_t cap)
      : DomainError("CapExceeded: order " + std::to_string(order) +
                    " exceeds the configured cap " + std::to_string(cap)) {}
};

class NotFound : public DomainError {
 public:
  explicit NotFound(const std::string& what) : DomainError("NotFound: " + what) {}
};

class NotAKnot : public DomainError {
 public:
  explicit NotAKnot(std::size_t components)
      : DomainError("NotAKnot: braid closure has " + std::to_string(components) +
                    " components") {}
};

class InvalidMonodromy : public DomainError {
 public:
  explicit InvalidMonodromy(const std::string& what)
      : DomainError("InvalidMonodromy: " + what) {}
};

class OutsideFiniteCatalog : public DomainError {
 public:
  explicit OutsideFiniteCatalog(const std::string& what)
      : DomainError("OutsideFiniteCatalog: " + what) {}
};

class OutsideCatalog : public DomainError {
 public:
  explicit OutsideCatalog(const std::string& what)
      : DomainError("OutsideCatalog: " + what) {}
};

class CatalogInconsistent : public DomainError {
 public:
  explicit CatalogInconsistent(const std::string& what)
      : DomainError("CatalogInconsistent: " + what) {}
};

class InvalidArgument : public UsageError {
 public:
  explicit InvalidArgument(const std::string& what)
      : UsageError("InvalidArgument: " + what) {}
};

class ParseError : public UsageError {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string& found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace qf
