#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

namespace prozd {

// Raised for malformed input: bad files, violated preconditions, infeasible
// requests. The CLI maps it to exit code 1; anything else is exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Ipv4 = std::uint32_t;

Ipv4 parse_ipv4(const std::string& text);
std::string format_ipv4(Ipv4 ip);

// IPv4 block in CIDR notation. The base address is stored masked, so two
// spellings of the same block compare equal.
struct Cidr {
  Ipv4 base = 0;
  int prefix = 32;

  Ipv4 mask() const {
    return prefix == 0 ? 0u : ~Ipv4{0} << (32 - prefix);
  }
  bool contains(Ipv4 ip) const { return (ip & mask()) == base; }
  bool contains(const Cidr& other) const {
    return other.prefix >= prefix && contains(other.base);
  }

  friend bool operator==(const Cidr&, const Cidr&) = default;
  friend auto operator<=>(const Cidr& a, const Cidr& b) {
    return std::tie(a.base, a.prefix) <=> std::tie(b.base, b.prefix);
  }
};

Cidr parse_cidr(const std::string& text);
std::string format_cidr(const Cidr& c);

Cidr host_cidr(Ipv4 ip);

enum class Protocol : std::uint8_t { tcp, udp };

Protocol parse_protocol(const std::string& text);
std::string format_protocol(Protocol p);

// A network service: protocol plus an inclusive port interval.
struct Service {
  Protocol protocol = Protocol::tcp;
  int port_lo = 0;
  int port_hi = 0;

  int port_count() const { return port_hi - port_lo + 1; }

  friend bool operator==(const Service&, const Service&) = default;
  friend auto operator<=>(const Service& a, const Service& b) {
    return std::tie(a.protocol, a.port_lo, a.port_hi) <=>
           std::tie(b.protocol, b.port_lo, b.port_hi);
  }
};

Service make_service(Protocol proto, int lo, int hi);

}  // namespace prozd
