#include "wcl/ports.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "wcl/errors.hpp"

namespace wcl {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool valid_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Port parse_port(std::string_view text) {
  text = trim(text);
  auto dot = text.find('.');
  Port p;
  if (dot == std::string_view::npos) {
    p.name = std::string(text);
  } else {
    p.owner = std::string(text.substr(0, dot));
    p.name = std::string(text.substr(dot + 1));
    if (!valid_identifier(p.owner)) throw UsageError("bad port owner in '" + std::string(text) + "'");
  }
  if (!valid_identifier(p.name)) throw UsageError("bad port name '" + std::string(text) + "'");
  return p;
}

PortUniverse::PortUniverse(std::vector<Port> ports) : ports_(std::move(ports)) {
  std::sort(ports_.begin(), ports_.end());
  if (std::adjacent_find(ports_.begin(), ports_.end()) != ports_.end()) {
    throw UsageError("duplicate port in universe");
  }
  if (ports_.size() > 64) throw CapExceeded("at most 64 ports are supported");
}

PortUniverse PortUniverse::parse(std::string_view list) {
  std::vector<Port> ports;
  list = trim(list);
  if (list.empty()) throw UsageError("empty port list");
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    auto piece = list.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - start);
    ports.push_back(parse_port(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PortUniverse(std::move(ports));
}

std::optional<std::size_t> PortUniverse::index_of(const Port& p) const {
  auto it = std::lower_bound(ports_.begin(), ports_.end(), p);
  if (it == ports_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - ports_.begin());
}

PortMask PortUniverse::full_mask() const {
  return ports_.size() == 64 ? ~PortMask{0} : (PortMask{1} << ports_.size()) - 1;
}

bool interaction_less(PortMask a, PortMask b) {
  while (a != 0 && b != 0) {
    PortMask la = a & -a;
    PortMask lb = b & -b;
    if (la != lb) return la < lb;
    a ^= la;
    b ^= lb;
  }
  return a == 0 && b != 0;
}

Configuration::Configuration(std::vector<PortMask> interactions) : items_(std::move(interactions)) {
  if (items_.empty()) throw UsageError("a configuration must contain at least one interaction");
  for (PortMask a : items_) {
    if (a == 0) throw UsageError("an interaction must contain at least one port");
  }
  std::sort(items_.begin(), items_.end(), interaction_less);
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool Configuration::contains(PortMask a) const {
  return std::binary_search(items_.begin(), items_.end(), a, interaction_less);
}

bool configuration_less(const Configuration& a, const Configuration& b) {
  return std::lexicographical_compare(a.interactions().begin(), a.interactions().end(),
                                      b.interactions().begin(), b.interactions().end(),
                                      interaction_less);
}

std::string interaction_to_string(PortMask a, const PortUniverse& u) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (a >> i & 1) {
      if (!first) out += ", ";
      out += u.at(i).qualified();
      first = false;
    }
  }
  return out + "}";
}

std::string configuration_to_string(const Configuration& g, const PortUniverse& u) {
  std::string out = "{";
  bool first = true;
  for (PortMask a : g.interactions()) {
    if (!first) out += ", ";
    out += interaction_to_string(a, u);
    first = false;
  }
  return out + "}";
}

namespace {

struct LiteralReader {
  std::string_view text;
  std::size_t pos = 0;
  const PortUniverse& u;

  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("bad configuration literal at offset " + std::to_string(pos) + ": " + why);
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  PortMask interaction() {
    expect('{');
    PortMask mask = 0;
    if (accept('}')) fail("empty interaction");
    do {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && (is_ident_char(text[pos]) || text[pos] == '.')) ++pos;
      if (start == pos) fail("expected a port name");
      Port p = parse_port(text.substr(start, pos - start));
      auto idx = u.index_of(p);
      if (!idx) fail("port '" + p.qualified() + "' is not in the universe");
      mask |= PortMask{1} << *idx;
    } while (accept(','));
    expect('}');
    return mask;
  }
};

}  // namespace

PortMask parse_interaction(std::string_view text, const PortUniverse& u) {
  LiteralReader r{text, 0, u};
  PortMask a = r.interaction();
  r.skip_ws();
  if (r.pos != text.size()) r.fail("trailing characters");
  return a;
}

Configuration parse_configuration(std::string_view text, const PortUniverse& u) {
  LiteralReader r{text, 0, u};
  r.expect('{');
  std::vector<PortMask> items;
  if (r.accept('}')) r.fail("empty configuration");
  do {
    items.push_back(r.interaction());
  } while (r.accept(','));
  r.expect('}');
  r.skip_ws();
  if (r.pos != text.size()) r.fail("trailing characters");
  return Configuration(std::move(items));
}

std::vector<PortMask> enumerate_interactions(const PortUniverse& u) {
  if (u.size() > 20) throw CapExceeded("universe too large to enumerate interactions");
  std::vector<PortMask> out;
  for (PortMask a = 1; a <= u.full_mask(); ++a) out.push_back(a);
  std::sort(out.begin(), out.end(), interaction_less);
  return out;
}

std::vector<Configuration> enumerate_configurations(const PortUniverse& u, std::size_t cap) {
  // Past four ports C(P) has 2^31 - 1 members, which no cap setting makes practical.
  const std::size_t limit = std::min<std::size_t>(cap, 4);
  if (u.size() > limit) {
    throw CapExceeded("universe too large: |P| = " + std::to_string(u.size()) +
                      " exceeds the enumeration cap of " + std::to_string(limit));
  }
  const std::size_t m = (std::size_t{1} << u.size()) - 1;
  std::vector<Configuration> out;
  out.reserve((std::size_t{1} << m) - 1);
  for (ConfigKey key = 1; key < (ConfigKey{1} << m); ++key) out.push_back(configuration_from_key(key));
  std::sort(out.begin(), out.end(), configuration_less);
  return out;
}

ConfigKey config_key(const Configuration& g) {
  ConfigKey key = 0;
  for (PortMask a : g.interactions()) {
    if (a > 64) throw CapExceeded("configuration keys need at most 6 ports");
    key |= ConfigKey{1} << (a - 1);
  }
  return key;
}

Configuration configuration_from_key(ConfigKey key) {
  std::vector<PortMask> items;
  while (key != 0) {
    int bit = std::countr_zero(key);
    items.push_back(static_cast<PortMask>(bit) + 1);
    key &= key - 1;
  }
  return Configuration(std::move(items));
}

}  // namespace wcl
