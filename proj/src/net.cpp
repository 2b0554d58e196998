#include "prozd/net.hpp"

#include <cstdio>

namespace prozd {

Ipv4 parse_ipv4(const std::string& text) {
  unsigned a, b, c, d;
  char trailing;
  int got = std::sscanf(text.c_str(), "%u.%u.%u.%u%c", &a, &b, &c, &d, &trailing);
  if (got != 4 || a > 255 || b > 255 || c > 255 || d > 255) {
    throw ValidationError("malformed IPv4 address: '" + text + "'");
  }
  return (a << 24) | (b << 16) | (c << 8) | d;
}

std::string format_ipv4(Ipv4 ip) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%u.%u.%u.%u", (ip >> 24) & 255u, (ip >> 16) & 255u,
                (ip >> 8) & 255u, ip & 255u);
  return buf;
}

Cidr parse_cidr(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw ValidationError("malformed CIDR (missing '/'): '" + text + "'");
  }
  Ipv4 base = parse_ipv4(text.substr(0, slash));
  const std::string prefix_part = text.substr(slash + 1);
  if (prefix_part.empty() || prefix_part.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError("malformed CIDR prefix: '" + text + "'");
  }
  int prefix = std::stoi(prefix_part);
  if (prefix < 0 || prefix > 32) {
    throw ValidationError("CIDR prefix out of range: '" + text + "'");
  }
  Cidr c{base, prefix};
  c.base &= c.mask();  // normalize: host bits dropped
  return c;
}

std::string format_cidr(const Cidr& c) {
  return format_ipv4(c.base) + "/" + std::to_string(c.prefix);
}

Cidr host_cidr(Ipv4 ip) { return Cidr{ip, 32}; }

Protocol parse_protocol(const std::string& text) {
  if (text == "TCP" || text == "tcp") return Protocol::tcp;
  if (text == "UDP" || text == "udp") return Protocol::udp;
  throw ValidationError("unknown protocol: '" + text + "'");
}

std::string format_protocol(Protocol p) { return p == Protocol::tcp ? "TCP" : "UDP"; }

Service make_service(Protocol proto, int lo, int hi) {
  if (lo < 0 || hi > 65535 || lo > hi) {
    throw ValidationError("invalid port range: " + std::to_string(lo) + "-" + std::to_string(hi));
  }
  return Service{proto, lo, hi};
}

}  // namespace prozd
