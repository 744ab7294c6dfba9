#pragma once

// Stateless JSON-over-HTTP front end for the game table UI.
//
//   GET  /config
//   POST /round        {"alice":"C","bob":"D","lambda":0.3,"mode":"direct"}
//   GET  /pattern?profile=C,C&lambda=0.3
//   GET  /sweep?lo=0&hi=0.3&steps=64
//   GET  /equilibrium?lambda=0.05
//
// Every response is a pure function of the request and the startup config.
// Malformed requests answer 400 with the offending field; well-formed
// requests that fail validation answer 422.

#include <map>
#include <string>
#include <string_view>

#include "fringe/config.hpp"

namespace httplib {
class Server;
}

namespace fringe {

struct ServiceReply {
  int status = 200;
  std::string body;
};

using QueryParams = std::map<std::string, std::string, std::less<>>;

class FringeService {
 public:
  explicit FringeService(RunConfig config);

  ServiceReply get_config() const;
  ServiceReply post_round(std::string_view body) const;
  ServiceReply get_pattern(const QueryParams& query) const;
  ServiceReply get_sweep(const QueryParams& query) const;
  ServiceReply get_equilibrium(const QueryParams& query) const;

  /// Registers the routes above on `server`.
  void install(httplib::Server& server) const;

  const RunConfig& config() const { return config_; }

 private:
  RunConfig config_;
};

/// Blocks serving on host:port until the server is stopped.
int serve_forever(const FringeService& service, const std::string& host,
                  int port);

}  // namespace fringe
