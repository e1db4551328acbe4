#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "broadcast/game.hpp"
#include "broadcast/graph.hpp"

namespace broadcast {

enum class BoundKind { LowerBound, Exact };

struct TimeBound {
  BoundKind kind = BoundKind::LowerBound;
  int rounds = 0;
  std::string justification;
};

nlohmann::json to_json(const TimeBound& b);

/// Largest distance from a vertex v to the nearest member of a y-set that
/// avoids v, over all such (v, set).
int y_set_diameter(const Graph& g, int y);

/// Max over ignorant agents of the distance to the nearest knowledgeable one.
int initial_separation(const Graph& g, const GameState& s);

/// ceil(separation / 2): knowledge moves at most two hops closer per round.
TimeBound time_lower_bound(const Graph& g, const GameState& s);

struct PathTimes {
  int first_spread = 0;
  int all_knowledgeable = 0;
};

/// Closed forms on P_n: ceil((n-x-y)/2) and ceil((n-y)/2).
PathTimes path_time_bounds(int n, int x, int y);

/// ceil(diameter / 2) of a tree.
int tree_two_agent_bound(const Graph& tree);

/// Knowledgeable agents on a y-set realizing the y-set-diameter, one
/// ignorant agent on the far vertex, the rest on the lowest free vertices.
GameState placement_for_bound(const Graph& g, int x, int y);

}  // namespace broadcast
