// Copyright 2026 The dconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dconv/network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "dconv/error.hpp"

namespace dconv {

ArcCost ArcCost::table(std::vector<Rational> values) {
  ArcCost c;
  c.values_ = std::move(values);
  return c;
}

Rational Arc::cost_at(Coord t) const {
  if (t < lower || t > upper) return Rational::infinity();
  if (cost.is_zero()) return 0;
  return cost.values()[static_cast<std::size_t>(t - lower)];
}

Network::Network(std::vector<std::string> vertices, std::vector<Arc> arcs,
                 std::vector<std::string> entrance, std::vector<std::string> exit)
    : vertices_(std::move(vertices)),
      arcs_(std::move(arcs)),
      entrance_(std::move(entrance)),
      exit_(std::move(exit)) {
  std::set<std::string> ids(vertices_.begin(), vertices_.end());
  if (ids.size() != vertices_.size()) throw InputError("duplicate vertex id");
  if (arcs_.size() > kMaxArcs) {
    throw InputError("network has " + std::to_string(arcs_.size()) + " arcs; at most " +
                     std::to_string(kMaxArcs) + " are supported");
  }
  if (entrance_.empty() || exit_.empty()) throw InputError("entrance and exit sets must be nonempty");
  std::set<std::string> u;
  for (const std::string& v : entrance_) {
    if (!ids.count(v)) throw InputError("entrance vertex '" + v + "' is not a vertex");
    if (!u.insert(v).second) throw InputError("entrance vertex '" + v + "' repeated");
  }
  std::set<std::string> w;
  for (const std::string& v : exit_) {
    if (!ids.count(v)) throw InputError("exit vertex '" + v + "' is not a vertex");
    if (u.count(v)) throw InputError("vertex '" + v + "' is both entrance and exit");
    if (!w.insert(v).second) throw InputError("exit vertex '" + v + "' repeated");
  }
  if (entrance_.size() > kMaxDim || exit_.size() > kMaxDim) {
    throw DimensionError("entrance/exit sets larger than the point dimension limit");
  }
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    const Arc& a = arcs_[k];
    std::string where = "arc " + std::to_string(k + 1) + " (" + a.tail + "->" + a.head + ")";
    if (!ids.count(a.tail) || !ids.count(a.head)) throw InputError(where + " has an unknown endpoint");
    if (a.lower > a.upper) throw InputError(where + " has lower > upper");
    if (a.upper - a.lower > kMaxCapacityWidth) {
      throw InputError(where + " has capacity width " + std::to_string(a.upper - a.lower) +
                       "; at most " + std::to_string(kMaxCapacityWidth) + " is supported");
    }
    if (a.cost.is_zero()) continue;
    const auto& v = a.cost.values();
    if (v.size() != static_cast<std::size_t>(a.upper - a.lower + 1)) {
      throw InputError(where + " cost table does not cover [lower, upper]");
    }
    for (const Rational& r : v) {
      if (r.is_infinite()) throw InputError(where + " cost table contains inf");
    }
    for (std::size_t t = 1; t + 1 < v.size(); ++t) {
      if (v[t - 1] + v[t + 1] < Rational(2) * v[t]) {
        throw InputError(where + " cost is not discretely convex at t=" +
                         std::to_string(a.lower + static_cast<Coord>(t)));
      }
    }
  }
}

std::size_t Network::index_of(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) throw InputError("unknown vertex '" + id + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::pair<Point, Point> boundary(const Flow& flow, const Network& net) {
  if (flow.values.size() != net.arcs().size()) {
    throw InputError("flow has " + std::to_string(flow.values.size()) + " values for " +
                     std::to_string(net.arcs().size()) + " arcs");
  }
  std::vector<Coord> supply(net.vertices().size(), 0);
  for (std::size_t k = 0; k < flow.values.size(); ++k) {
    supply[net.index_of(net.arcs()[k].tail)] += flow.values[k];
    supply[net.index_of(net.arcs()[k].head)] -= flow.values[k];
  }
  Point on_u(net.entrance().size());
  for (std::size_t i = 0; i < net.entrance().size(); ++i) on_u[i] = supply[net.index_of(net.entrance()[i])];
  Point on_w(net.exit().size());
  for (std::size_t i = 0; i < net.exit().size(); ++i) on_w[i] = supply[net.index_of(net.exit()[i])];
  return {on_u, on_w};
}

namespace {

// Depth-first enumeration of feasible flows for one entrance vector x.
// Calls visit(y, arc_cost) for each flow with boundary x on U and -y on W.
class FlowEnumerator {
 public:
  explicit FlowEnumerator(const Network& net) : net_(net) {
    const std::size_t nv = net.vertices().size();
    const std::size_t na = net.arcs().size();
    tail_.resize(na);
    head_.resize(na);
    for (std::size_t k = 0; k < na; ++k) {
      tail_[k] = net.index_of(net.arcs()[k].tail);
      head_[k] = net.index_of(net.arcs()[k].head);
    }
    role_.assign(nv, Role::Internal);
    entrance_pos_.assign(nv, 0);
    for (std::size_t i = 0; i < net.entrance().size(); ++i) {
      std::size_t v = net.index_of(net.entrance()[i]);
      role_[v] = Role::Entrance;
      entrance_pos_[v] = i;
    }
    for (const std::string& id : net.exit()) {
      exit_idx_.push_back(net.index_of(id));
      role_[exit_idx_.back()] = Role::Exit;
    }
    // rem_lo_[k][v], rem_hi_[k][v]: range of the net supply that arcs k..
    // can still add at v.
    rem_lo_.assign(na + 1, std::vector<Coord>(nv, 0));
    rem_hi_.assign(na + 1, std::vector<Coord>(nv, 0));
    for (std::size_t k = na; k-- > 0;) {
      rem_lo_[k] = rem_lo_[k + 1];
      rem_hi_[k] = rem_hi_[k + 1];
      const Arc& a = net.arcs()[k];
      rem_lo_[k][tail_[k]] += a.lower;
      rem_hi_[k][tail_[k]] += a.upper;
      rem_lo_[k][head_[k]] -= a.upper;
      rem_hi_[k][head_[k]] -= a.lower;
    }
  }

  void run(const Point& x, const std::function<void(const Point&, const Rational&)>& visit) {
    x_ = &x;
    visit_ = &visit;
    supply_.assign(net_.vertices().size(), 0);
    go(0, Rational(0));
  }

 private:
  enum class Role { Internal, Entrance, Exit };

  bool reachable(std::size_t k, std::size_t v) const {
    if (role_[v] == Role::Exit) return true;
    Coord target = role_[v] == Role::Entrance ? (*x_)[entrance_pos_[v]] : 0;
    Coord need = target - supply_[v];
    return need >= rem_lo_[k][v] && need <= rem_hi_[k][v];
  }

  void go(std::size_t k, const Rational& cost) {
    if (k == net_.arcs().size()) {
      // Also covers vertices without arcs, which the pruning never sees.
      for (std::size_t v = 0; v < supply_.size(); ++v) {
        if (!reachable(k, v)) return;
      }
      Point y(exit_idx_.size());
      for (std::size_t i = 0; i < exit_idx_.size(); ++i) y[i] = -supply_[exit_idx_[i]];
      (*visit_)(y, cost);
      return;
    }
    const Arc& a = net_.arcs()[k];
    for (Coord t = a.lower; t <= a.upper; ++t) {
      supply_[tail_[k]] += t;
      supply_[head_[k]] -= t;
      if (reachable(k + 1, tail_[k]) && reachable(k + 1, head_[k])) go(k + 1, cost + a.cost_at(t));
      supply_[tail_[k]] -= t;
      supply_[head_[k]] += t;
    }
  }

  const Network& net_;
  std::vector<std::size_t> tail_;
  std::vector<std::size_t> head_;
  std::vector<Role> role_;
  std::vector<std::size_t> entrance_pos_;
  std::vector<std::size_t> exit_idx_;
  std::vector<std::vector<Coord>> rem_lo_;
  std::vector<std::vector<Coord>> rem_hi_;
  std::vector<Coord> supply_;
  const Point* x_ = nullptr;
  const std::function<void(const Point&, const Rational&)>* visit_ = nullptr;
};

std::map<Point, Rational> enumerate_min(const LatticeFn& f, const Network& net) {
  if (f.lift_ones()) throw InputError("network induction needs a finite input");
  if (f.dim() != net.entrance().size()) {
    throw DimensionError("input has dimension " + std::to_string(f.dim()) + " but the network has " +
                         std::to_string(net.entrance().size()) + " entrance vertices");
  }
  FlowEnumerator en(net);
  std::map<Point, Rational> best;
  for (const FnEntry& e : f.entries()) {
    en.run(e.x, [&](const Point& y, const Rational& cost) {
      Rational v = e.value + cost;
      auto [it, inserted] = best.emplace(y, v);
      if (!inserted && v < it->second) it->second = v;
    });
  }
  return best;
}

}  // namespace

LatticeSet transform_set(const LatticeSet& s, const Network& net) {
  if (s.empty()) throw InputError("network transformation of an empty set");
  std::map<Point, Rational> best = enumerate_min(LatticeFn::indicator(s), net);
  std::vector<Point> pts;
  for (const auto& [y, v] : best) pts.push_back(y);
  return LatticeSet(net.exit().size(), std::move(pts));
}

LatticeFn induce_fn(const LatticeFn& f, const Network& net) {
  std::map<Point, Rational> best = enumerate_min(f, net);
  if (best.empty()) throw EmptyResultError("no exit demand is reachable through the network");
  std::vector<FnEntry> entries;
  for (auto& [y, v] : best) entries.push_back({y, v});
  return LatticeFn(net.exit().size(), std::move(entries));
}

Network split_network(const SplitSpec& spec, const Window& w) {
  spec.validate(spec.input_dim());
  if (w.dim() != spec.output_dim()) throw DimensionError("split window dimension mismatch");
  std::vector<std::size_t> owner = split_owner(spec);
  std::vector<std::string> vertices;
  std::vector<std::string> entrance;
  std::vector<std::string> exit;
  for (std::size_t i = 0; i < spec.input_dim(); ++i) entrance.push_back("u" + std::to_string(i + 1));
  for (std::size_t k = 0; k < owner.size(); ++k) exit.push_back("w" + std::to_string(k + 1));
  vertices = entrance;
  vertices.insert(vertices.end(), exit.begin(), exit.end());
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < owner.size(); ++k) {
    arcs.push_back({entrance[owner[k]], exit[k], w.lo()[k], w.hi()[k], ArcCost::zero()});
  }
  return Network(vertices, arcs, entrance, exit);
}

Network aggregation_network(const PartitionSpec& spec, const Window& box) {
  spec.validate(box.dim());
  std::vector<std::string> entrance;
  std::vector<std::string> exit;
  for (std::size_t i = 0; i < box.dim(); ++i) entrance.push_back("u" + std::to_string(i + 1));
  for (std::size_t j = 0; j < spec.groups.size(); ++j) exit.push_back("w" + std::to_string(j + 1));
  std::vector<std::string> vertices = entrance;
  vertices.insert(vertices.end(), exit.begin(), exit.end());
  std::vector<Arc> arcs;
  for (std::size_t j = 0; j < spec.groups.size(); ++j) {
    for (std::size_t i : spec.groups[j]) {
      arcs.push_back({entrance[i], exit[j], box.lo()[i], box.hi()[i], ArcCost::zero()});
    }
  }
  return Network(vertices, arcs, entrance, exit);
}

}  // namespace dconv
