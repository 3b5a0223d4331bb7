// Copyright 2026 The isi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isi/manifest.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

#include "json.hpp"

namespace isi::cli {

using nlohmann::ordered_json;

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

void RunManifest::add_output(const std::string& name,
                             const std::string& content) {
  outputs.push_back({name, content.size(), sha256_hex(content)});
}

std::string RunManifest::to_json() const {
  ordered_json doc;
  doc["tool"] = "isi";
  doc["version"] = version;
  doc["command"] = command;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  doc["parameters"] = std::move(params);
  doc["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  ordered_json outs = ordered_json::array();
  for (const auto& o : outputs) {
    outs.push_back({{"name", o.name}, {"bytes", o.bytes}, {"sha256", o.sha256}});
  }
  doc["outputs"] = std::move(outs);
  return doc.dump(1) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
  try {
    const auto doc = ordered_json::parse(text);
    RunManifest m;
    m.version = doc.at("version").get<std::string>();
    m.command = doc.at("command").get<std::string>();
    for (const auto& [k, v] : doc.at("parameters").items()) {
      m.parameters.emplace_back(k, v.get<std::string>());
    }
    if (!doc.at("seed").is_null()) m.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& o : doc.at("outputs")) {
      m.outputs.push_back({o.at("name").get<std::string>(),
                           o.at("bytes").get<std::size_t>(),
                           o.at("sha256").get<std::string>()});
    }
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed manifest: ") +
                                ex.what());
  }
}

bool operator==(const RunManifest& a, const RunManifest& b) {
  auto same_outputs = [&] {
    if (a.outputs.size() != b.outputs.size()) return false;
    for (std::size_t i = 0; i < a.outputs.size(); ++i) {
      const auto& x = a.outputs[i];
      const auto& y = b.outputs[i];
      if (x.name != y.name || x.bytes != y.bytes || x.sha256 != y.sha256) {
        return false;
      }
    }
    return true;
  };
  return a.command == b.command && a.parameters == b.parameters &&
         a.seed == b.seed && a.version == b.version && same_outputs();
}

}  // namespace isi::cli
