#include <string>

#include "httplib.h"
#include "json.hpp"
#include "tsel/errors.hpp"
#include "tsel/lang.hpp"

namespace tsel {

RemoteBackend::RemoteBackend(std::string host, int port, std::string path, int timeout_seconds)
    : host_(std::move(host)), port_(port), path_(std::move(path)),
      timeout_seconds_(timeout_seconds) {}

std::vector<double> RemoteBackend::token_logprobs(const std::string& prompt,
                                                  const std::string& continuation) const {
  nlohmann::json body = {{"prompt", prompt}, {"continuation", continuation}};
  const std::string payload = body.dump();

  // Retries cover transport failures only; a well-formed response, even an
  // error status, is final.
  for (int attempt = 0; attempt < 3; ++attempt) {
    httplib::Client client(host_, port_);
    client.set_connection_timeout(timeout_seconds_, 0);
    client.set_read_timeout(timeout_seconds_, 0);
    auto res = client.Post(path_, payload, "application/json");
    if (!res) {
      if (attempt == 2) throw BackendError("remote scoring transport failure");
      continue;
    }
    if (res->status != 200) {
      throw BackendError("remote scoring returned status " + std::to_string(res->status));
    }
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception&) {
      throw BackendError("remote scoring returned invalid JSON");
    }
    if (!parsed.contains("token_logprobs") || !parsed["token_logprobs"].is_array()) {
      throw BackendError("remote scoring response missing token_logprobs");
    }
    std::vector<double> logprobs;
    for (const auto& v : parsed["token_logprobs"]) logprobs.push_back(v.get<double>());
    return logprobs;
  }
  throw BackendError("unreachable");
}

double RemoteBackend::score(const std::string& prompt, const std::string& continuation) const {
  const auto logprobs = token_logprobs(prompt, continuation);
  if (logprobs.empty()) throw EmptyDescriptor("remote backend returned no logprobs");
  double sum = 0.0;
  for (double lp : logprobs) sum += lp;
  return sum / static_cast<double>(logprobs.size());
}

}  // namespace tsel
