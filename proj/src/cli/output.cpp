#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <memory>
#include <ostream>
#include <sstream>

#include "thermofriction/cli.hpp"
#include "thermofriction/errors.hpp"

namespace thermofriction::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", value);
  return buf;
}

std::string file_sha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  const std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 initialisation failed");
  }
  char buf[8192];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

namespace {

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  return std::get<std::string>(cell);
}

// JSON carries the same rounded values as the CSV text.
nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d)) return format_number(*d);
    return std::stod(format_number(*d));
  }
  return std::get<std::string>(cell);
}

void write_block_csv(const Block& block, std::ostream& out) {
  for (std::size_t i = 0; i < block.columns.size(); ++i) out << (i ? "," : "") << block.columns[i];
  out << '\n';
  for (const auto& row : block.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

nlohmann::ordered_json block_json(const Block& block) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : block.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[block.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

}  // namespace

void write_csv(const Report& report, std::ostream& out) {
  for (const auto& [key, value] : report.meta) out << "# " << key << ": " << value << '\n';
  write_block_csv(report.rows, out);
  if (report.lines) {
    out << "\n# " << report.lines->title << '\n';
    write_block_csv(*report.lines, out);
  }
}

void write_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.meta) meta[key] = value;
  doc["meta"] = meta;
  doc["columns"] = report.rows.columns;
  doc["rows"] = block_json(report.rows);
  if (report.lines) doc["lines"] = block_json(*report.lines);
  out << doc.dump(2) << '\n';
}

}  // namespace thermofriction::cli
