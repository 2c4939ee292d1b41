#include "nimsa/sim/scenario.hpp"

#include <cmath>
#include <set>
#include <string>

#include "json.hpp"
#include "nimsa/errors.hpp"

namespace nimsa::sim {

using nlohmann::json;

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::none: return "none";
    case Scheme::nimsa: return "nimsa";
    case Scheme::ikev2: return "ikev2";
  }
  return "?";
}

std::string_view to_string(HandoverMode m) {
  return m == HandoverMode::transmission ? "transmission" : "notification";
}

Scheme parse_scheme(std::string_view s) {
  if (s == "none") return Scheme::none;
  if (s == "nimsa") return Scheme::nimsa;
  if (s == "ikev2") return Scheme::ikev2;
  throw ConfigError("unknown scheme: " + std::string(s));
}

HandoverMode parse_handover_mode(std::string_view s) {
  if (s == "transmission") return HandoverMode::transmission;
  if (s == "notification") return HandoverMode::notification;
  throw ConfigError("unknown handover mode: " + std::string(s));
}

void Scenario::validate() const {
  if (links.empty()) throw ConfigError("scenario: at least one link required");
  if (links.size() > 255) throw ConfigError("scenario: too many links");
  for (const auto& l : links) l.validate();
  if (loss_override_pct && !(*loss_override_pct >= 0 && *loss_override_pct <= 100))
    throw ConfigError("scenario: loss_override_pct outside [0, 100]");
  if (delay_override_ms && !(*delay_override_ms >= 0 && std::isfinite(*delay_override_ms)))
    throw ConfigError("scenario: delay_override_ms must be non-negative");
  if (trials < 1) throw ConfigError("scenario: trials must be at least 1");
  ike.validate();
  if (!(crypto_costs.pairing_ms >= 0) || !(crypto_costs.hmac_ms >= 0))
    throw ConfigError("scenario: crypto costs must be non-negative");
  if (traffic.type != TrafficType::none) {
    if (!(traffic.duration_s > 0) || traffic.packet_bytes < 8 || traffic.packet_bytes > 0xffff)
      throw ConfigError("scenario: traffic needs a positive duration and 8 to 65535 byte packets");
    if (traffic.type == TrafficType::cbr && !(traffic.rate_bps > 0)) throw ConfigError("scenario: rate_bps must be positive");
    if (traffic.type == TrafficType::probe && !(traffic.probe_interval_ms > 0))
      throw ConfigError("scenario: probe_interval_ms must be positive");
  }
  if (handover) {
    if (!(handover->at_ms >= 0) || !(handover->jitter_ms >= 0) || handover->effective_outage_ms(handover_mode) < 0)
      throw ConfigError("scenario: handover times must be non-negative");
    if (handover->interface >= links.size()) throw ConfigError("scenario: handover interface has no link");
  }
  if (stop_after == StopAfter::handover && !handover) throw ConfigError("scenario: stop_after handover needs a handover");
  if (stop_after == StopAfter::auth && preestablish) throw ConfigError("scenario: nothing to authenticate when preestablished");
  if (!(reorder_window_ms >= 0)) throw ConfigError("scenario: reorder_window_ms must be non-negative");
  if (pending_limit == 0) throw ConfigError("scenario: pending_limit must be positive");
}

std::vector<LinkProfile> Scenario::effective_links() const {
  auto out = links;
  for (auto& l : out) {
    if (loss_override_pct) l.loss_min = l.loss_max = *loss_override_pct / 100.0;
    if (delay_override_ms) l.delay_min_ms = l.delay_max_ms = *delay_override_ms;
  }
  return out;
}

namespace {

void check_keys(const json& j, std::string_view where, std::set<std::string> allowed) {
  if (!j.is_object()) throw ConfigError(std::string(where) + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.contains(k)) throw ConfigError(std::string(where) + ": unknown key " + k);
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("scenario: bad value for ") + key);
  }
}

template <class T>
void read(const json& j, const char* key, std::optional<T>& out) {
  if (!j.contains(key) || j.at(key).is_null()) return;
  T v{};
  read(j, key, v);
  out = v;
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  }
  check_keys(doc, "scenario",
             {"links", "scheme", "handover_mode", "traffic", "loss_override_pct", "delay_override_ms", "trials", "seed",
              "ike", "crypto_costs", "handover", "preestablish", "reorder_window_ms", "security", "stop_after",
              "pending_limit"});
  Scenario sc;
  if (doc.contains("links")) {
    const json& links = doc["links"];
    if (links.is_string()) {
      if (links != "table1") throw ConfigError("scenario: links must be an array or \"table1\"");
    } else {
      if (!links.is_array()) throw ConfigError("scenario: links must be an array");
      sc.links.clear();
      for (const auto& l : links) {
        check_keys(l, "link", {"loss_min", "loss_max", "bandwidth_bps", "delay_min_ms", "delay_max_ms"});
        LinkProfile p;
        read(l, "loss_min", p.loss_min);
        read(l, "loss_max", p.loss_max);
        read(l, "bandwidth_bps", p.bandwidth_bps);
        read(l, "delay_min_ms", p.delay_min_ms);
        read(l, "delay_max_ms", p.delay_max_ms);
        sc.links.push_back(p);
      }
    }
  }
  std::string text;
  if (doc.contains("scheme")) {
    read(doc, "scheme", text);
    sc.scheme = parse_scheme(text);
  }
  if (doc.contains("handover_mode")) {
    read(doc, "handover_mode", text);
    sc.handover_mode = parse_handover_mode(text);
  }
  if (doc.contains("traffic")) {
    const json& t = doc["traffic"];
    check_keys(t, "traffic", {"type", "rate_bps", "packet_bytes", "duration_s", "probe_interval_ms"});
    if (t.contains("type")) {
      read(t, "type", text);
      if (text == "none") sc.traffic.type = TrafficType::none;
      else if (text == "cbr") sc.traffic.type = TrafficType::cbr;
      else if (text == "probe") sc.traffic.type = TrafficType::probe;
      else throw ConfigError("scenario: unknown traffic type " + text);
    }
    read(t, "rate_bps", sc.traffic.rate_bps);
    read(t, "packet_bytes", sc.traffic.packet_bytes);
    read(t, "duration_s", sc.traffic.duration_s);
    read(t, "probe_interval_ms", sc.traffic.probe_interval_ms);
  }
  read(doc, "loss_override_pct", sc.loss_override_pct);
  read(doc, "delay_override_ms", sc.delay_override_ms);
  read(doc, "trials", sc.trials);
  read(doc, "seed", sc.seed);
  if (doc.contains("ike")) {
    const json& k = doc["ike"];
    check_keys(k, "ike",
               {"init_req_bytes", "init_resp_bytes", "auth_req_bytes", "auth_resp_bytes", "rto_initial_ms",
                "rto_backoff", "max_retries", "update_req_bytes", "update_resp_bytes", "rekey_req_bytes",
                "rekey_resp_bytes", "per_packet_overhead_bytes", "processing_ms", "ah_ms"});
    auto& c = sc.ike;
    read(k, "init_req_bytes", c.init_req_bytes);
    read(k, "init_resp_bytes", c.init_resp_bytes);
    read(k, "auth_req_bytes", c.auth_req_bytes);
    read(k, "auth_resp_bytes", c.auth_resp_bytes);
    read(k, "rto_initial_ms", c.rto_initial_ms);
    read(k, "rto_backoff", c.rto_backoff);
    read(k, "max_retries", c.max_retries);
    read(k, "update_req_bytes", c.update_req_bytes);
    read(k, "update_resp_bytes", c.update_resp_bytes);
    read(k, "rekey_req_bytes", c.rekey_req_bytes);
    read(k, "rekey_resp_bytes", c.rekey_resp_bytes);
    read(k, "per_packet_overhead_bytes", c.per_packet_overhead_bytes);
    read(k, "processing_ms", c.processing_ms);
    read(k, "ah_ms", c.ah_ms);
  }
  if (doc.contains("crypto_costs")) {
    const json& c = doc["crypto_costs"];
    check_keys(c, "crypto_costs", {"pairing_ms", "hmac_ms"});
    read(c, "pairing_ms", sc.crypto_costs.pairing_ms);
    read(c, "hmac_ms", sc.crypto_costs.hmac_ms);
  }
  if (doc.contains("handover") && !doc["handover"].is_null()) {
    const json& h = doc["handover"];
    check_keys(h, "handover", {"at_ms", "jitter_ms", "outage_ms", "interface"});
    HandoverPlan plan;
    read(h, "at_ms", plan.at_ms);
    read(h, "jitter_ms", plan.jitter_ms);
    read(h, "outage_ms", plan.outage_ms);
    read(h, "interface", plan.interface);
    sc.handover = plan;
  }
  read(doc, "preestablish", sc.preestablish);
  read(doc, "reorder_window_ms", sc.reorder_window_ms);
  if (doc.contains("security")) {
    read(doc, "security", text);
    sc.security = parse_security_level(text);
  }
  if (doc.contains("stop_after")) {
    read(doc, "stop_after", text);
    if (text == "none") sc.stop_after = StopAfter::none;
    else if (text == "auth") sc.stop_after = StopAfter::auth;
    else if (text == "handover") sc.stop_after = StopAfter::handover;
    else throw ConfigError("scenario: unknown stop_after " + text);
  }
  read(doc, "pending_limit", sc.pending_limit);
  sc.validate();
  return sc;
}

}  // namespace nimsa::sim
