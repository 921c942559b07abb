#include "repsum/sequence_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace repsum {

namespace {

Rational parse_value(std::string_view token, std::size_t line) {
  try {
    return Rational::parse(token);
  } catch (const std::domain_error&) {
    throw SequenceParseError(line, "zero denominator in '" + std::string(token) + "'");
  } catch (const std::invalid_argument&) {
    throw SequenceParseError(line, "malformed rational '" + std::string(token) + "'");
  }
}

std::vector<Rational> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SequenceParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw SequenceParseError(0, "JSON sequence must be an array");
  std::vector<Rational> values;
  values.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    // JSON elements are reported by 1-based position.
    if (!doc[i].is_string()) throw SequenceParseError(i + 1, "JSON element is not a string");
    values.push_back(parse_value(doc[i].get<std::string>(), i + 1));
  }
  return values;
}

std::vector<Rational> parse_lines(std::string_view text) {
  std::vector<Rational> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto line = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
    ++line_no;
    const bool blank = std::all_of(line.begin(), line.end(),
                                   [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) values.push_back(parse_value(line, line_no));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return values;
}

}  // namespace

SequenceParseError::SequenceParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

Sequence parse_sequence_text(std::string_view text, std::int64_t first_index) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw SequenceParseError(0, "empty sequence input");
  std::vector<Rational> values = text[first] == '[' ? parse_json(text) : parse_lines(text);
  if (values.empty()) throw SequenceParseError(0, "empty sequence input");
  return Sequence(first_index, std::move(values));
}

Sequence parse_sequence_file(const std::filesystem::path& path, std::int64_t first_index) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open sequence file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence_text(buf.str(), first_index);
}

}  // namespace repsum
