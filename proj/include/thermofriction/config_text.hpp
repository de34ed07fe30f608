#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace thermofriction {

// Minimal TOML-like reader shared by the atom and material loaders:
//   [section]        plain table
//   [[section]]      one element of an array of tables
//   key = value      number, "string" or true/false
//   # comment
// Section names are taken verbatim, so "temperature.T=298" is a valid name.

struct ConfigValue {
  std::variant<double, std::string, bool> data;
  int line = 0;
};

class ConfigSection {
 public:
  std::string name;
  bool is_array_element = false;
  int line = 0;
  std::map<std::string, ConfigValue, std::less<>> entries;

  bool has(std::string_view key) const { return entries.find(key) != entries.end(); }
  double number(std::string_view key) const;
  std::string string(std::string_view key) const;
  std::optional<double> optional_number(std::string_view key) const;
  std::optional<std::string> optional_string(std::string_view key) const;
};

class ConfigDocument {
 public:
  static ConfigDocument parse(std::string_view text);

  const std::vector<ConfigSection>& sections() const { return sections_; }
  const ConfigSection* find_table(std::string_view name) const;
  std::vector<const ConfigSection*> array(std::string_view name) const;

 private:
  std::vector<ConfigSection> sections_;
};

}  // namespace thermofriction
