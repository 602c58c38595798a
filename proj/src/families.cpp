#include "distk/families.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace distk {

int BroomSpec::order() const {
  const int leaves = std::accumulate(leaf_counts.begin(), leaf_counts.end(), 0);
  return hub_count() + brooms() * handle_length() + leaves;
}

void BroomSpec::validate() const {
  if (k < 3) throw InvalidArgument("t-broom needs k >= 3, got " + std::to_string(k));
  if (brooms() < 2) throw InvalidArgument("t-broom needs t >= 2 brooms");
  for (int a : leaf_counts) {
    if (a < 1) throw InvalidArgument("every broom needs at least one leaf");
  }
  if (order() > Graph::kMaxVertices) throw InvalidArgument("t-broom exceeds 64 vertices");
}

std::string BroomSpec::to_string() const {
  std::ostringstream os;
  os << "k=" << k << " t=" << brooms() << " leaves=(";
  for (std::size_t i = 0; i < leaf_counts.size(); ++i) os << (i ? "," : "") << leaf_counts[i];
  os << ")";
  return os.str();
}

Graph t_broom(const BroomSpec& spec) {
  spec.validate();
  const int t = spec.brooms();
  const int h = spec.handle_length();
  const int hubs = spec.hub_count();
  Graph g(spec.order());
  if (hubs > 1) {
    for (Vertex a = 0; a < hubs; ++a) {
      for (Vertex b = a + 1; b < hubs; ++b) g.add_edge(a, b);
    }
  }
  Vertex next_leaf = hubs + t * h;
  for (int i = 0; i < t; ++i) {
    const Vertex hub = hubs > 1 ? i : 0;
    Vertex prev = hub;
    for (int j = 0; j < h; ++j) {
      const Vertex v = hubs + i * h + j;
      g.add_edge(prev, v);
      prev = v;
    }
    for (int j = 0; j < spec.leaf_counts[i]; ++j) g.add_edge(prev, next_leaf++);
  }
  return g;
}

long t_broom_distance_count(const BroomSpec& spec) {
  spec.validate();
  long total = 0;
  long before = 0;
  for (int a : spec.leaf_counts) {
    total += before * a;
    before += a;
  }
  return total;
}

Graph double_broom(int n, int k) {
  if (k < 3) throw InvalidArgument("double broom needs k >= 3");
  if (n <= k) throw InvalidArgument("double broom needs n > k");
  Graph g(n);
  const int spine = k - 1;
  for (Vertex v = 0; v + 1 < spine; ++v) g.add_edge(v, v + 1);
  const int leaves = n - spine;
  const int left = (leaves + 1) / 2;
  Vertex next = spine;
  for (int i = 0; i < left; ++i) g.add_edge(0, next++);
  while (next < n) g.add_edge(spine - 1, next++);
  return g;
}

long double_broom_count(int n, int k) {
  if (n <= k) throw InvalidArgument("double broom count needs n > k");
  const long m = n - k + 1;
  return m * m / 4;
}

Graph glued_cliques(int n) {
  if (n < 5 || n % 2 == 0) throw InvalidArgument("glued cliques need odd n >= 5");
  const int m = (n + 1) / 2;
  Graph g(n);
  // X = {0, 1, .., m-1}, Y = {0, m, .., n-1}, z = 0.
  for (Vertex a = 0; a < m; ++a) {
    for (Vertex b = a + 1; b < m; ++b) g.add_edge(a, b);
  }
  auto y_vertex = [&](int i) { return i == 0 ? 0 : m + i - 1; };
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) g.add_edge(y_vertex(a), y_vertex(b));
  }
  const Vertex x = 1;
  const Vertex y = m;
  g.remove_edge(x, 0);
  g.remove_edge(y, 0);
  g.add_edge(x, y);
  return g;
}

Graph star(int n) {
  if (n < 2) throw InvalidArgument("star needs n >= 2");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph path(int n) {
  if (n < 2) throw InvalidArgument("path needs n >= 2");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

BroomWidth optimal_broom_width(int n, int k) {
  if (k % 2 != 0) throw InvalidArgument("width formula applies to even k only; odd k uses t = 2");
  if (k < 4) throw InvalidArgument("width formula needs k >= 4");
  if (n <= k) throw InvalidArgument("width formula needs n > k");
  BroomWidth w;
  w.value = 0.25 + std::sqrt(1.0 / 16.0 + static_cast<double>(n - 1) / (k - 2));
  const int lo = std::max(2, static_cast<int>(std::floor(w.value)) - 1);
  for (int t = lo; t <= static_cast<int>(std::ceil(w.value)) + 1; ++t) {
    if (width_within_one(n, k, t)) w.candidates.push_back(t);
  }
  return w;
}

bool width_within_one(int n, int k, int t) {
  // With D = k - 2 and S = 16(n - 1) + D:
  //   x >= t - 1  <=>  4t - 5 <= 0  or  (4t - 5)^2 D <= S
  //   x <= t + 1  <=>  S <= (4t + 3)^2 D
  const long long d = k - 2;
  const long long s = 16LL * (n - 1) + d;
  const long long below = 4LL * t - 5;
  const bool lower_ok = below <= 0 || below * below * d <= s;
  const long long above = 4LL * t + 3;
  return lower_ok && s <= above * above * d;
}

std::vector<BroomSpec> broom_specs_of_order(int n, int k) {
  std::vector<BroomSpec> out;
  if (k < 3) return out;
  for (int t = 2;; ++t) {
    BroomSpec probe{k, std::vector<int>(t, 1)};
    const int skeleton = probe.order() - t;
    const int leaves = n - skeleton;
    if (leaves < t) {
      // Larger t only grows the skeleton.
      break;
    }
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
      if (static_cast<int>(parts.size()) == t) {
        if (remaining == 0) out.push_back({k, parts});
        return;
      }
      const int slots = t - static_cast<int>(parts.size());
      for (int a = std::min(max_part, remaining - (slots - 1)); a >= 1; --a) {
        if (a * slots < remaining) break;
        parts.push_back(a);
        rec(remaining - a, a);
        parts.pop_back();
      }
    };
    rec(leaves, leaves);
  }
  return out;
}

std::optional<BroomSpec> best_broom(int n, int k) {
  std::optional<BroomSpec> best;
  long best_count = -1;
  for (const BroomSpec& s : broom_specs_of_order(n, k)) {
    const long c = t_broom_distance_count(s);
    if (c > best_count) {
      best_count = c;
      best = s;
    }
  }
  return best;
}

}  // namespace distk
