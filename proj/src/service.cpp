#include "fringe/service.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <httplib.h>

namespace fringe {

namespace {

// A request that is not shaped like the API expects.
class BadRequest : public std::runtime_error {
 public:
  BadRequest(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

ServiceReply error_reply(int status, const std::string& message,
                         const std::string& field = {}) {
  Json body = {{"error", message}};
  if (!field.empty()) body["field"] = field;
  return {status, render(body)};
}

template <typename Fn>
ServiceReply guarded(Fn&& fn) {
  try {
    return {200, render(fn())};
  } catch (const BadRequest& e) {
    return error_reply(400, e.what(), e.field());
  } catch (const ValidationError& e) {
    return error_reply(422, e.what());
  }
}

std::optional<double> query_number(const QueryParams& q, std::string_view key) {
  const auto it = q.find(key);
  if (it == q.end()) return std::nullopt;
  const std::string& text = it->second;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw BadRequest(std::string(key), std::string(key) + " must be a number");
  }
  return value;
}

std::optional<long> query_integer(const QueryParams& q, std::string_view key) {
  const auto it = q.find(key);
  if (it == q.end()) return std::nullopt;
  const std::string& text = it->second;
  long value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw BadRequest(std::string(key), std::string(key) + " must be an integer");
  }
  return value;
}

Strategy body_strategy(const Json& body, const char* key) {
  if (!body.contains(key)) {
    throw BadRequest(key, std::string(key) + " is required");
  }
  const Json& v = body.at(key);
  if (!v.is_string()) {
    throw BadRequest(key, std::string(key) + " must be \"C\" or \"D\"");
  }
  try {
    return parse_strategy(v.get<std::string>());
  } catch (const ValidationError&) {
    throw BadRequest(key, std::string(key) + " must be \"C\" or \"D\"");
  }
}

ApparatusConfig with_lambda(const ApparatusConfig& base, double lambda) {
  ApparatusConfig out = base;
  out.params = base.params.with_lambda(lambda);
  return out;
}

}  // namespace

FringeService::FringeService(RunConfig config) : config_(std::move(config)) {}

ServiceReply FringeService::get_config() const {
  return {200, render(to_json(config_))};
}

ServiceReply FringeService::post_round(std::string_view body_text) const {
  return guarded([&]() -> Json {
    const Json body = Json::parse(body_text, nullptr, false);
    if (body.is_discarded() || !body.is_object()) {
      throw BadRequest("body", "request body must be a JSON object");
    }
    const StrategyProfile profile{body_strategy(body, "alice"),
                                  body_strategy(body, "bob")};
    ApparatusConfig app = config_.apparatus;
    if (body.contains("lambda")) {
      if (!body["lambda"].is_number()) {
        throw BadRequest("lambda", "lambda must be a number");
      }
      app = with_lambda(app, body["lambda"].get<double>());
    }
    if (body.contains("mode")) {
      if (!body["mode"].is_string()) {
        throw BadRequest("mode", "mode must be \"direct\" or \"measured\"");
      }
      try {
        app.payoff_mode = parse_payoff_mode(body["mode"].get<std::string>());
      } catch (const ValidationError&) {
        throw BadRequest("mode", "mode must be \"direct\" or \"measured\"");
      }
    }
    return to_json(play_round(profile, app));
  });
}

ServiceReply FringeService::get_pattern(const QueryParams& query) const {
  return guarded([&]() -> Json {
    const auto it = query.find("profile");
    if (it == query.end()) throw BadRequest("profile", "profile is required");
    StrategyProfile profile;
    try {
      profile = parse_profile(it->second);
    } catch (const ValidationError& e) {
      throw BadRequest("profile", e.what());
    }
    ApparatusConfig app = config_.apparatus;
    if (auto lambda = query_number(query, "lambda")) {
      app = with_lambda(app, *lambda);
    }
    auto [window, state] = aperture_for_profile(profile, app);
    if (const auto open = query.find("open"); open != query.end()) {
      state = parse_open_override(window, open->second);
    }
    Json out = pattern_json(observe_aperture(window, state, app));
    out["profile"] = to_json(profile);
    return out;
  });
}

ServiceReply FringeService::get_sweep(const QueryParams& query) const {
  return guarded([&]() -> Json {
    const double lo = query_number(query, "lo").value_or(config_.sweep_lo);
    const double hi = query_number(query, "hi").value_or(config_.sweep_hi);
    const long steps = query_integer(query, "steps").value_or(config_.sweep_steps);
    if (steps < 2 || steps > 1'000'000) {
      throw ValidationError("steps must lie in [2, 1000000]");
    }
    const auto& params = config_.apparatus.params;
    const SweepResult sweep = sweep_lambda(lo, hi, static_cast<int>(steps),
                                           params.coeffs(), params.k());
    return sweep_json(sweep, params.coeffs(), params.k());
  });
}

ServiceReply FringeService::get_equilibrium(const QueryParams& query) const {
  return guarded([&]() -> Json {
    const auto& params = config_.apparatus.params;
    const double lambda = query_number(query, "lambda").value_or(params.lambda());
    return equilibrium_json(params.with_lambda(lambda));
  });
}

namespace {

QueryParams to_query(const httplib::Request& req) {
  QueryParams out;
  for (const auto& [key, value] : req.params) out.emplace(key, value);
  return out;
}

void send(httplib::Response& res, const ServiceReply& reply) {
  res.status = reply.status;
  res.set_content(reply.body, "application/json");
}

}  // namespace

void FringeService::install(httplib::Server& server) const {
  server.Get("/config", [this](const httplib::Request&, httplib::Response& res) {
    send(res, get_config());
  });
  server.Post("/round", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, post_round(req.body));
  });
  server.Get("/pattern", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, get_pattern(to_query(req)));
  });
  server.Get("/sweep", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, get_sweep(to_query(req)));
  });
  server.Get("/equilibrium",
             [this](const httplib::Request& req, httplib::Response& res) {
               send(res, get_equilibrium(to_query(req)));
             });
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
}

int serve_forever(const FringeService& service, const std::string& host,
                  int port) {
  httplib::Server server;
  service.install(server);
  if (!server.listen(host, port)) return 1;
  return 0;
}

}  // namespace fringe
