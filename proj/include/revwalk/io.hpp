#pragma once

// Output conventions shared by the command-line tool and the acceptance report:
// a JSON header line first, then CSV with 17 significant digits or JSON.

#include <openssl/evp.h>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "revwalk/error.hpp"

namespace revwalk::io {

inline constexpr std::string_view kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// Shortest-free, fixed format: 17 significant digits.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// SHA-1 of the git blob object for `content` ("blob <size>\0<content>").
inline std::string git_blob_sha1(std::string_view content) {
  const std::string head = "blob " + std::to_string(content.size()) + '\0';
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw std::runtime_error("git_blob_sha1: cannot allocate digest context");
  const bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, head.data(), head.size()) == 1 &&
                  EVP_DigestUpdate(ctx, content.data(), content.size()) == 1 && EVP_DigestFinal_ex(ctx, digest, &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw std::runtime_error("git_blob_sha1: digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

/// First line of every output.
inline Json header(std::string_view command, std::uint64_t seed, const Json& config) {
  Json h;
  h["tool"] = "revwalk";
  h["version"] = kToolVersion;
  h["command"] = command;
  h["seed"] = seed;
  h["config"] = config;
  h["config_hash"] = git_blob_sha1(config.dump());
  return h;
}

/// Minimal CSV writer; doubles are written with 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& columns) : os_(os), width_(columns.size()) {
    row_begin();
    for (const auto& c : columns) cell_raw(c);
    end_row();
  }

  CsvWriter& cell(double v) { return cell_raw(format_double(v)); }
  CsvWriter& cell(std::int64_t v) { return cell_raw(std::to_string(v)); }
  CsvWriter& cell(int v) { return cell_raw(std::to_string(v)); }
  CsvWriter& cell(std::uint64_t v) { return cell_raw(std::to_string(v)); }
  CsvWriter& cell(bool v) { return cell_raw(v ? "1" : "0"); }
  CsvWriter& cell(const std::string& v) { return cell_raw(v); }
  CsvWriter& cell(const char* v) { return cell_raw(v); }
  /// Missing value (for example a quantity not reached before a step cap).
  CsvWriter& empty() { return cell_raw(""); }

  void end_row() {
    if (count_ != width_) throw std::logic_error("CsvWriter: row has the wrong number of cells");
    os_ << '\n';
    row_begin();
  }

 private:
  void row_begin() { count_ = 0; }
  CsvWriter& cell_raw(const std::string& s) {
    if (count_ > 0) os_ << ',';
    os_ << s;
    ++count_;
    return *this;
  }

  std::ostream& os_;
  std::size_t width_;
  std::size_t count_ = 0;
};

}  // namespace revwalk::io
