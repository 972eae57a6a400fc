#pragma once

// Reader/writer for the "<keyword> <order>" + rows table text format used by
// both groups and quandles.

#include <cctype>
#include <istream>
#include <ostream>
#include <span>
#include <string>

#include "qf/errors.hpp"
#include "qf/perm.hpp"

namespace qf::detail {

class TableReader {
 public:
  explicit TableReader(std::istream& in) : in_(in) {}

  std::size_t header(const std::string& keyword) {
    std::string word;
    if (!next_token(word) || word != keyword) fail("'" + keyword + "'", word);
    if (!next_token(word) || !is_number(word) || std::stoull(word) == 0)
      fail("positive order", word);
    return std::stoull(word);
  }

  Index entry(std::size_t order) {
    std::string word;
    if (!next_token(word) || !is_number(word) || std::stoull(word) >= order)
      fail("index below " + std::to_string(order), word);
    return static_cast<Index>(std::stoull(word));
  }

  void finish() {
    std::string word;
    if (next_token(word)) fail("end of table", word);
  }

 private:
  static bool is_number(const std::string& w) {
    return !w.empty() && w.size() < 10 &&
           w.find_first_not_of("0123456789") == std::string::npos;
  }

  bool next_token(std::string& out) {
    out.clear();
    for (;;) {
      const int ch = in_.get();
      if (ch == EOF) return !out.empty();
      if (ch == '\n') {
        if (!out.empty()) {
          ++line_;
          column_ = 1;
          return true;
        }
        ++line_;
        column_ = 1;
        continue;
      }
      ++column_;
      if (std::isspace(ch)) {
        if (!out.empty()) return true;
        continue;
      }
      if (out.empty()) {
        token_line_ = line_;
        token_column_ = column_ - 1;
      }
      out.push_back(static_cast<char>(ch));
    }
  }

  [[noreturn]] void fail(const std::string& expected, const std::string& found) const {
    throw ParseError(token_line_, token_column_, {expected},
                     found.empty() ? "end of input" : "'" + found + "'");
  }

  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::size_t token_line_ = 1;
  std::size_t token_column_ = 1;
};

inline void write_table(std::ostream& out, const std::string& keyword, std::size_t order,
                        std::span<const Index> table) {
  out << keyword << ' ' << order << '\n';
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) out << (y ? " " : "") << table[x * order + y];
    out << '\n';
  }
}

}  // namespace qf::detail
