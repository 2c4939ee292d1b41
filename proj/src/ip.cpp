#include "nimsa/ip.hpp"

#include <arpa/inet.h>

#include "nimsa/errors.hpp"

namespace nimsa {

Ipv4 parse_ipv4(std::string_view text) {
  std::string s(text);
  Ipv4 out{};
  if (inet_pton(AF_INET, s.c_str(), out.data()) != 1) throw ConfigError("bad IPv4 address: " + s);
  return out;
}

std::string to_string(const Ipv4& ip) {
  char buf[INET_ADDRSTRLEN];
  inet_ntop(AF_INET, ip.data(), buf, sizeof buf);
  return buf;
}

}  // namespace nimsa
