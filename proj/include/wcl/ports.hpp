#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wcl {

// A port name, optionally owned by a component ("c.p"). Ordered by
// (owner, name); unowned ports sort first.
struct Port {
  std::string owner;
  std::string name;

  std::string qualified() const { return owner.empty() ? name : owner + "." + name; }
  friend auto operator<=>(const Port&, const Port&) = default;
};

// Splits "c.p" into owner and name; a bare "p" has no owner.
Port parse_port(std::string_view text);

// Bit i of a mask stands for the i-th port of a universe in canonical order.
using PortMask = std::uint64_t;

// Default limit on |P| for enumerating C(P); 2^(2^4-1)-1 = 32767 configurations.
inline constexpr std::size_t kDefaultEnumerationCap = 4;

class PortUniverse {
 public:
  PortUniverse() = default;
  // Sorts into canonical order; duplicates and more than 64 ports are rejected.
  explicit PortUniverse(std::vector<Port> ports);
  // Comma-separated list, e.g. "p,q" or "b1.m,d1.s".
  static PortUniverse parse(std::string_view list);

  std::size_t size() const { return ports_.size(); }
  const std::vector<Port>& ports() const { return ports_; }
  const Port& at(std::size_t i) const { return ports_.at(i); }
  std::optional<std::size_t> index_of(const Port& p) const;
  PortMask full_mask() const;

  friend bool operator==(const PortUniverse&, const PortUniverse&) = default;

 private:
  std::vector<Port> ports_;
};

// Canonical order on interactions: lexicographic on the ascending port sequence.
bool interaction_less(PortMask a, PortMask b);

// A nonempty set of nonempty interactions, held in canonical order.
class Configuration {
 public:
  Configuration() = default;
  // Sorts and deduplicates; throws UsageError on an empty set or empty interaction.
  explicit Configuration(std::vector<PortMask> interactions);

  const std::vector<PortMask>& interactions() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(PortMask a) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<PortMask> items_;
};

// Lexicographic on the interaction sequence.
bool configuration_less(const Configuration& a, const Configuration& b);

std::string interaction_to_string(PortMask a, const PortUniverse& u);
std::string configuration_to_string(const Configuration& g, const PortUniverse& u);

// "{ {p, q}, {p} }". Ports must belong to the universe.
Configuration parse_configuration(std::string_view text, const PortUniverse& u);
PortMask parse_interaction(std::string_view text, const PortUniverse& u);

// I(P) in canonical order.
std::vector<PortMask> enumerate_interactions(const PortUniverse& u);
// C(P) in canonical order. Throws CapExceeded when |P| > cap.
std::vector<Configuration> enumerate_configurations(const PortUniverse& u,
                                                    std::size_t cap = kDefaultEnumerationCap);

// A configuration over a universe with at most 6 ports, as a bitmask over I(P):
// bit (a - 1) is set when interaction a is present.
using ConfigKey = std::uint64_t;
ConfigKey config_key(const Configuration& g);
Configuration configuration_from_key(ConfigKey key);

}  // namespace wcl
