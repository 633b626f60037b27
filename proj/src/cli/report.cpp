#include "cubix/cli/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include <openssl/evp.h>

namespace cubix::cli {

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

bool Report::passed() const noexcept {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.second; });
}

std::string Report::to_text() const {
  std::string out = "cubix " + version + "\nverb: " + verb + "\n";
  for (const auto& [role, digest] : inputs) out += "input " + role + " sha256 " + digest + "\n";
  for (const auto& [key, value] : data.items()) {
    out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  for (const auto& [name, ok] : verdicts) out += "verdict " + name + ": " + (ok ? "pass" : "fail") + "\n";
  for (const auto& p : payloads) out += "output " + p.name + "\n";
  out += std::string("status: ") + (passed() ? "pass" : "fail") + "\n";
  return out;
}

std::string Report::to_json() const {
  Json j;
  j["tool"] = "cubix";
  j["version"] = version;
  j["verb"] = verb;
  j["inputs"] = Json::array();
  for (const auto& [role, digest] : inputs) j["inputs"].push_back({{"role", role}, {"sha256", digest}});
  j["data"] = data;
  j["verdicts"] = Json::object();
  for (const auto& [name, ok] : verdicts) j["verdicts"][name] = ok;
  j["outputs"] = Json::array();
  for (const auto& p : payloads) j["outputs"].push_back(p.name);
  j["status"] = passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

}  // namespace cubix::cli
