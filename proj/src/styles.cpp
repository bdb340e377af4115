#include "wcl/styles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "wcl/errors.hpp"

namespace wcl {

namespace {

std::vector<std::vector<std::string>> read_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw UsageError("empty CSV table");
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw UsageError("CSV rows have different lengths");
  }
  return rows;
}

Pil literal(const std::string& owner, const std::string& name, bool positive) {
  Pil a = pil_atom(Port{owner, name});
  return positive ? a : pil_not(a);
}

Pil conjunction(const std::vector<Pil>& xs) {
  Pil acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = pil_and(acc, xs[i]);
  return acc;
}

Formula interaction(const std::vector<Pil>& xs) { return pcl_interaction(conjunction(xs)); }

Binder bind(const std::string& var, const std::string& type, Predicate where = {}) {
  return Binder{var, type, std::move(where)};
}

PortMask mask_of(const PortUniverse& u, const std::vector<Port>& ports) {
  PortMask m = 0;
  for (const auto& p : ports) m |= PortMask{1} << u.index_of(p).value();
  return m;
}

std::string numbered(const char* stem, std::size_t i) { return stem + std::to_string(i + 1); }

}  // namespace

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

WeightTable::WeightTable(std::size_t rows, std::size_t cols, SemiringId k)
    : rows_(rows), cols_(cols), k_(k), data_(rows * cols, Value::zero(k)) {
  if (rows == 0 || cols == 0) throw UsageError("empty weight table");
}

WeightTable WeightTable::parse_csv(std::string_view text, SemiringId k) {
  auto rows = read_csv(text);
  WeightTable t(rows.size(), rows.front().size(), k);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) t.set(i, j, parse_value(k, rows[i][j]));
  }
  return t;
}

void WeightTable::set(std::size_t i, std::size_t j, const Value& v) {
  if (v.semiring() != k_) throw UsageError("weight from a different semiring");
  data_.at(i * cols_ + j) = v;
}

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {
  if (n < 3) throw UsageError("a tour needs at least 3 cities");
}

DistanceMatrix DistanceMatrix::parse_csv(std::string_view text) {
  auto rows = read_csv(text);
  const std::size_t n = rows.size();
  if (rows.front().size() != n) throw UsageError("distance matrix must be square");
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = parse_value(SemiringId::minplus, rows[i][j]).real();
      if (!std::isfinite(w)) throw UsageError("distances must be finite");
      if (i == j && w != 0.0) throw UsageError("distance matrix needs a zero diagonal");
      d.d_[i * n + j] = w;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d.at(i, j) != d.at(j, i)) throw UsageError("distance matrix must be symmetric");
    }
  }
  return d;
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double w) {
  if (!(w >= 0) || !std::isfinite(w)) throw UsageError("distances must be finite and nonnegative");
  if (i == j && w != 0) throw UsageError("diagonal distances are zero");
  d_.at(i * n_ + j) = w;
  d_.at(j * n_ + i) = w;
}

// ---------------------------------------------------------------------------
// Master/Slave
// ---------------------------------------------------------------------------

WpclInstance master_slave_wpcl(const WeightTable& weights) {
  const std::size_t slaves = weights.rows();
  const std::size_t masters = weights.cols();
  std::vector<Port> ports;
  for (std::size_t j = 0; j < masters; ++j) ports.push_back(Port{"", numbered("m", j)});
  for (std::size_t i = 0; i < slaves; ++i) ports.push_back(Port{"", numbered("s", i)});
  PortUniverse u(ports);

  std::vector<WFormula> per_slave;
  std::vector<PortMask> pairs;
  for (std::size_t i = 0; i < slaves; ++i) {
    std::vector<WFormula> choices;
    for (std::size_t j = 0; j < masters; ++j) {
      const PortMask a = mask_of(u, {Port{"", numbered("s", i)}, Port{"", numbered("m", j)}});
      pairs.push_back(a);
      choices.push_back(
          w_times(w_const(weights.at(i, j)), w_bool(pcl_interaction(characteristic_monomial(a, u)))));
    }
    per_slave.push_back(w_plus_all(choices));
  }
  return {u, w_closure(w_coalesce_all(per_slave)), Configuration(pairs)};
}

WfoclInstance master_slave_wfocl(const WeightTable& weights) {
  const std::size_t slaves = weights.rows();
  const std::size_t masters = weights.cols();
  Model b;
  b.add_type({"M", {"m"}});
  b.add_type({"S", {"s"}});
  for (std::size_t j = 0; j < masters; ++j) b.add_component({numbered("b", j), "M"});
  for (std::size_t i = 0; i < slaves; ++i) b.add_component({numbered("d", i), "S"});

  std::vector<WFormula> body;
  body.push_back(w_bool(interaction({literal("c", "s", true), literal("c1", "m", true)})));
  for (std::size_t i = 0; i < slaves; ++i) {
    for (std::size_t j = 0; j < masters; ++j) {
      Predicate same = Predicate::conj(Predicate::eq("c", numbered("d", i)),
                                       Predicate::eq("c1", numbered("b", j)));
      body.push_back(w_guard(focl_cond(same), w_const(weights.at(i, j))));
    }
  }
  // Every other master and every other slave stays out of the interaction.
  // The two products are kept apart so that a style with a single master or
  // a single slave still constrains the other side.
  body.push_back(w_otimes_q(bind("c2", "M", Predicate::neq("c2", "c1")),
                            w_bool(interaction({literal("c2", "m", false)}))));
  body.push_back(w_otimes_q(bind("c3", "S", Predicate::neq("c3", "c")),
                            w_bool(interaction({literal("c3", "s", false)}))));
  WFormula z = w_closure(w_ouplus_q(bind("c", "S"), w_oplus_q(bind("c1", "M"), w_times_all(body))));

  const PortUniverse u = b.ports();
  std::vector<PortMask> pairs;
  for (std::size_t i = 0; i < slaves; ++i) {
    for (std::size_t j = 0; j < masters; ++j) {
      pairs.push_back(mask_of(u, {Port{numbered("d", i), "s"}, Port{numbered("b", j), "m"}}));
    }
  }
  return {std::move(b), z, Configuration(pairs)};
}

Value master_slave_brute_force(const WeightTable& weights) {
  const SemiringId k = weights.semiring();
  std::vector<std::size_t> choice(weights.rows(), 0);
  Value total = Value::zero(k);
  while (true) {
    Value prod = Value::one(k);
    for (std::size_t i = 0; i < choice.size(); ++i) prod = otimes(prod, weights.at(i, choice[i]));
    total = oplus(total, prod);
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == weights.cols()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Travelling salesman
// ---------------------------------------------------------------------------

std::vector<std::vector<std::size_t>> cyclic_tours(std::size_t n) {
  if (n < 3) throw UsageError("a tour needs at least 3 cities");
  std::vector<std::size_t> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<std::vector<std::size_t>> out;
  do {
    if (rest.front() < rest.back()) {
      std::vector<std::size_t> tour{0};
      tour.insert(tour.end(), rest.begin(), rest.end());
      out.push_back(std::move(tour));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

WpclInstance tsp_instance(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  std::vector<Port> ports;
  for (std::size_t i = 0; i < n; ++i) ports.push_back(Port{"", numbered("c", i)});
  PortUniverse u(ports);
  auto edge = [&](std::size_t i, std::size_t j) {
    return mask_of(u, {ports[i], ports[j]});
  };
  std::vector<WFormula> chains;
  for (const auto& tour : cyclic_tours(n)) {
    std::vector<WFormula> legs;
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t i = tour[t];
      const std::size_t j = tour[(t + 1) % n];
      legs.push_back(w_times(w_const(Value::real(SemiringId::minplus, d.at(i, j))),
                             w_bool(pcl_interaction(characteristic_monomial(edge(i, j), u)))));
    }
    chains.push_back(w_coalesce_all(legs));
  }
  std::vector<PortMask> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back(edge(i, j));
  }
  return {u, w_closure(w_plus_all(chains)), Configuration(pairs)};
}

double tsp_brute_force(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double len = 0;
    for (std::size_t t = 0; t < n; ++t) len += d.at(order[t], order[(t + 1) % n]);
    best = std::min(best, len);
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

// ---------------------------------------------------------------------------
// Publish/Subscribe
// ---------------------------------------------------------------------------

WfoclInstance pubsub_instance(const WeightTable& priorities) {
  if (priorities.rows() != 3 || priorities.cols() != 2) {
    throw UsageError("pub/sub priorities must be a 3x2 table (topics by subscribers)");
  }
  Model b;
  b.add_type({"P", {"p"}});
  b.add_type({"T", {"t1", "t2"}});
  b.add_type({"S", {"s"}});
  for (const char* c : {"p1", "p2"}) b.add_component({c, "P"});
  for (const char* c : {"r1", "r2", "r3"}) b.add_component({c, "T"});
  for (const char* c : {"s1", "s2"}) b.add_component({c, "S"});

  // Publisher c3 feeds topic c2 through t1, and nothing else takes part.
  Formula quiet_publish = focl_forall(
      bind("d1", "P", Predicate::neq("d1", "c3")),
      focl_forall(bind("d2", "T", Predicate::neq("d2", "c2")),
                  focl_forall(bind("d3", "S"),
                              interaction({literal("d1", "p", false), literal("d2", "t1", false),
                                           literal("d2", "t2", false), literal("d3", "s", false),
                                           literal("c2", "t2", false)}))));
  Formula publish = pcl_closure(
      pcl_meet(interaction({literal("c3", "p", true), literal("c2", "t1", true)}), quiet_publish));

  // Topic c2 delivers to subscriber c1 through t2.
  Formula quiet_deliver = focl_forall(
      bind("d1", "P"),
      focl_forall(bind("d2", "T", Predicate::neq("d2", "c2")),
                  focl_forall(bind("d3", "S", Predicate::neq("d3", "c1")),
                              interaction({literal("d1", "p", false), literal("d2", "t1", false),
                                           literal("d2", "t2", false), literal("d3", "s", false),
                                           literal("c2", "t1", false)}))));
  Formula deliver = pcl_closure(
      pcl_meet(interaction({literal("c2", "t2", true), literal("c1", "s", true)}), quiet_deliver));

  std::vector<WFormula> priority;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Predicate same = Predicate::conj(Predicate::eq("c2", numbered("r", i)),
                                       Predicate::eq("c1", numbered("s", j)));
      priority.push_back(w_guard(focl_cond(same), w_const(priorities.at(i, j))));
    }
  }
  WFormula route = w_coalesce(w_bool(publish), w_times(w_bool(deliver), w_times_all(priority)));
  WFormula z = w_otimes_q(bind("c1", "S"),
                          w_oplus_q(bind("c2", "T"), w_oplus_q(bind("c3", "P"), route)));

  const PortUniverse u = b.ports();
  auto pair = [&](const char* c, const char* p, const char* e, const char* q) {
    return mask_of(u, {Port{c, p}, Port{e, q}});
  };
  Configuration g({pair("p1", "p", "r1", "t1"), pair("p1", "p", "r3", "t1"),
                   pair("p2", "p", "r1", "t1"), pair("r1", "t2", "s1", "s"),
                   pair("r2", "t2", "s2", "s"), pair("r3", "t2", "s2", "s")});
  return {std::move(b), z, g};
}

}  // namespace wcl
