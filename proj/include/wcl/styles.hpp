#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "wcl/focl.hpp"
#include "wcl/formula.hpp"
#include "wcl/ports.hpp"
#include "wcl/semiring.hpp"

namespace wcl {

// A rectangular table of semiring weights, row-major.
class WeightTable {
 public:
  WeightTable(std::size_t rows, std::size_t cols, SemiringId k);
  // Comma-separated rows, one per line; '#' starts a comment.
  static WeightTable parse_csv(std::string_view text, SemiringId k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  SemiringId semiring() const { return k_; }
  const Value& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, const Value& v);

 private:
  std::size_t rows_, cols_;
  SemiringId k_;
  std::vector<Value> data_;
};

// Symmetric, zero diagonal, nonnegative finite entries.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n);
  static DistanceMatrix parse_csv(std::string_view text);

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return d_.at(i * n_ + j); }
  // Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double w);

 private:
  std::size_t n_;
  std::vector<double> d_;
};

struct WpclInstance {
  PortUniverse ports;
  WFormula formula;
  Configuration config;
};

struct WfoclInstance {
  Model model;
  WFormula formula;
  Configuration config;  // over model.ports()
};

// Master/Slave with weights[i][j] for slave i and master j. Ports m1..mM and
// s1..sS; the configuration pairs every slave with every master.
WpclInstance master_slave_wpcl(const WeightTable& weights);
// The same style with components b1..bM of type M (port m) and d1..dS of
// type S (port s), choosing the weight by component identity.
WfoclInstance master_slave_wfocl(const WeightTable& weights);
// Sum over slave-to-master assignments of the product of chosen weights.
Value master_slave_brute_force(const WeightTable& weights);

// Cyclic tours of cities 0..n-1 starting at 0, one per undirected cycle:
// the second city has a smaller index than the last. (n-1)!/2 of them.
std::vector<std::vector<std::size_t>> cyclic_tours(std::size_t n);
// Over minplus: the closure of the sum over tours of the coalescing of the
// tour's edges (the closing edge included), weighted by distance. The
// configuration holds every pair of cities.
WpclInstance tsp_instance(const DistanceMatrix& d);
// Minimum over every ordering of cities 2..n, by enumeration.
double tsp_brute_force(const DistanceMatrix& d);

// Publishers p1,p2 (type P, port p), topics r1..r3 (type T, ports t1,t2) and
// subscribers s1,s2 (type S, port s); priorities[i][j] for topic i and
// subscriber j. The configuration links p1 and p2 to r1, p1 to r3, r1 to s1
// and r2, r3 to s2.
WfoclInstance pubsub_instance(const WeightTable& priorities);

}  // namespace wcl
