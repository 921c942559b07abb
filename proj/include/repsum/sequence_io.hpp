#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "repsum/sequence.hpp"

namespace repsum {

/// Malformed sequence input. line() is 1-based; 0 when the error is not tied
/// to one line (empty file, JSON syntax).
class SequenceParseError : public std::runtime_error {
 public:
  SequenceParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Either one "p/q" value per line (blank lines ignored) or a JSON array of
// "p/q" strings. A leading '[' selects JSON.
Sequence parse_sequence_text(std::string_view text, std::int64_t first_index = 1);
Sequence parse_sequence_file(const std::filesystem::path& path, std::int64_t first_index = 1);

}  // namespace repsum
