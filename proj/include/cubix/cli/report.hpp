#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cubix::cli {

using Json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view bytes);

struct Payload {
  std::string name;
  std::string content;
};

// Everything a verb produces. Rendering is deterministic: no clocks, no
// paths, insertion-ordered keys.
struct Report {
  std::string version;
  std::string verb;
  std::vector<std::pair<std::string, std::string>> inputs;  // role, sha256
  Json data = Json::object();
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<Payload> payloads;

  void verdict(std::string name, bool passed) { verdicts.emplace_back(std::move(name), passed); }
  bool passed() const noexcept;

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace cubix::cli
