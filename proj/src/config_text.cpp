#include "thermofriction/config_text.hpp"

#include <charconv>
#include <string>

#include "thermofriction/errors.hpp"

namespace thermofriction {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Strips a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

bool is_bare_key(std::string_view key) {
  if (key.empty()) return false;
  for (char ch : key) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                    (ch >= '0' && ch <= '9') || ch == '_' || ch == '-';
    if (!ok) return false;
  }
  return true;
}

ConfigValue parse_value(std::string_view raw, int line) {
  if (raw.empty()) throw FormatError("missing value", line);
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"') throw FormatError("unterminated string", line);
    const auto inner = raw.substr(1, raw.size() - 2);
    if (inner.find('"') != std::string_view::npos) throw FormatError("stray quote in string", line);
    return {std::string(inner), line};
  }
  if (raw == "true") return {true, line};
  if (raw == "false") return {false, line};

  std::string_view digits = raw;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("cannot parse value '" + std::string(raw) + "'", line);
  }
  return {value, line};
}

const ConfigValue& require(const ConfigSection& s, std::string_view key) {
  const auto it = s.entries.find(key);
  if (it == s.entries.end()) {
    throw ValidationError("section [" + s.name + "] (line " + std::to_string(s.line) +
                          ") is missing required key '" + std::string(key) + "'");
  }
  return it->second;
}

}  // namespace

double ConfigSection::number(std::string_view key) const {
  const auto& v = require(*this, key);
  if (const auto* d = std::get_if<double>(&v.data)) return *d;
  throw FormatError("key '" + std::string(key) + "' must be a number", v.line);
}

std::string ConfigSection::string(std::string_view key) const {
  const auto& v = require(*this, key);
  if (const auto* s = std::get_if<std::string>(&v.data)) return *s;
  throw FormatError("key '" + std::string(key) + "' must be a string", v.line);
}

std::optional<double> ConfigSection::optional_number(std::string_view key) const {
  if (!has(key)) return std::nullopt;
  return number(key);
}

std::optional<std::string> ConfigSection::optional_string(std::string_view key) const {
  if (!has(key)) return std::nullopt;
  return string(key);
}

ConfigDocument ConfigDocument::parse(std::string_view text) {
  ConfigDocument doc;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;

    if (line.front() == '[') {
      const bool array = line.starts_with("[[");
      const std::string_view close = array ? "]]" : "]";
      if (!line.ends_with(close) || line.size() <= 2 * close.size()) {
        throw FormatError("malformed section header", line_no);
      }
      const auto name = trim(line.substr(close.size(), line.size() - 2 * close.size()));
      if (name.empty() || name.find_first_of("[]") != std::string_view::npos) {
        throw FormatError("malformed section header", line_no);
      }
      if (!array && doc.find_table(name) != nullptr) {
        throw FormatError("duplicate section [" + std::string(name) + "]", line_no);
      }
      doc.sections_.push_back(ConfigSection{std::string(name), array, line_no, {}});
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw FormatError("expected 'key = value'", line_no);
    const auto key = trim(line.substr(0, eq));
    if (!is_bare_key(key)) throw FormatError("invalid key '" + std::string(key) + "'", line_no);
    if (doc.sections_.empty()) throw FormatError("key outside of any section", line_no);
    auto& section = doc.sections_.back();
    if (section.has(key)) throw FormatError("duplicate key '" + std::string(key) + "'", line_no);
    section.entries.emplace(std::string(key), parse_value(trim(line.substr(eq + 1)), line_no));
  }
  return doc;
}

const ConfigSection* ConfigDocument::find_table(std::string_view name) const {
  for (const auto& s : sections_) {
    if (!s.is_array_element && s.name == name) return &s;
  }
  return nullptr;
}

std::vector<const ConfigSection*> ConfigDocument::array(std::string_view name) const {
  std::vector<const ConfigSection*> out;
  for (const auto& s : sections_) {
    if (s.is_array_element && s.name == name) out.push_back(&s);
  }
  return out;
}

}  // namespace thermofriction
