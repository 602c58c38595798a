#include "distk/bounds.hpp"

#include <numeric>

#include "distk/canonical.hpp"
#include "distk/clique.hpp"
#include "distk/distance.hpp"
#include "distk/structure.hpp"

namespace distk {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational mantel_k_bound(int n, int k) {
  if (k < 1 || k > n) throw InvalidArgument("mantel_k_bound needs 1 <= k <= n");
  return Rational(static_cast<long long>(n) * (n - k + 1), 4);
}

Rational interior_refined_bound(int n, int k, int r) {
  if (r < 0 || r > n) throw InvalidArgument("interior count must lie in [0, n]");
  if (k < 1 || k > n) throw InvalidArgument("interior_refined_bound needs 1 <= k <= n");
  return Rational(static_cast<long long>(n - r) * (n - k + 1), 4);
}

UnaffiliatedBound unaffiliated_bound(int n, int r, int p) {
  if (r < 0 || r > n || p < 0 || p > n) throw InvalidArgument("r and p must lie in [0, n]");
  const long long twice_mid = 2LL * n - r - p;
  return {Rational(static_cast<long long>(n - r) * (n - p), 4), Rational(twice_mid * twice_mid, 16)};
}

long star_bound(int n) {
  if (n < 3) throw InvalidArgument("star bound needs n >= 3");
  return static_cast<long>(n - 1) * (n - 2) / 2;
}

bool edge_decomposition_check(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraph("edge decomposition needs a connected graph");
  const std::vector<int> profile = distance_profile(g);
  const long total = std::accumulate(profile.begin(), profile.end(), 0L);
  const long n = g.order();
  return total == n * (n - 1) / 2;
}

bool BoundReport::all_satisfied() const {
  for (const auto* b : {&mantel, &interior, &unaffiliated, &star}) {
    if (*b && (*b)->satisfied && !*(*b)->satisfied) return false;
  }
  return true;
}

BoundReport evaluate_bounds(const Graph& g, int k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  BoundReport rep;
  rep.graph_id = canonical_form(g).bytes;
  rep.n = g.order();
  rep.k = k;
  const Graph gk = distance_k_graph(g, k);
  rep.e_gk = gk.edge_count();
  rep.gk_triangle_free = is_triangle_free(gk);
  rep.r = popcount(interior_vertices(g, k));
  if (rep.e_gk > 0) rep.p = min_unaffiliated(g, k);

  const int n = rep.n;
  // The Mantel-type bounds assume a triangle-free G_k.
  const std::optional<bool> na;
  auto check = [&](const Rational& value) -> BoundCheck {
    if (!rep.gk_triangle_free) return {value, na};
    return {value, Rational(rep.e_gk) <= value};
  };
  if (k <= n) {
    rep.mantel = check(mantel_k_bound(n, k));
    rep.interior = check(interior_refined_bound(n, k, rep.r));
    if (rep.p) {
      const UnaffiliatedBound ub = unaffiliated_bound(n, rep.r, *rep.p);
      rep.unaffiliated = check(ub.value);
      rep.unaffiliated_midpoint = ub.midpoint;
    }
  }
  if (k == 2 && n >= 3) {
    const long sb = star_bound(n);
    rep.star = BoundCheck{Rational(sb), rep.e_gk <= sb};
  }
  return rep;
}

nlohmann::json to_json(const BoundReport& r) {
  auto check_json = [](const std::optional<BoundCheck>& b) -> nlohmann::json {
    if (!b) return nullptr;
    nlohmann::json j{{"value", to_string(b->value)}};
    if (b->satisfied) {
      j["satisfied"] = *b->satisfied;
    } else {
      j["satisfied"] = "not applicable";
    }
    return j;
  };
  nlohmann::json j{
      {"graph", r.graph_id},
      {"n", r.n},
      {"k", r.k},
      {"e_gk", r.e_gk},
      {"gk_triangle_free", r.gk_triangle_free},
      {"r", r.r},
      {"p", r.p ? nlohmann::json(*r.p) : nlohmann::json(nullptr)},
      {"mantel_k", check_json(r.mantel)},
      {"interior_refined", check_json(r.interior)},
      {"unaffiliated", check_json(r.unaffiliated)},
      {"unaffiliated_midpoint",
       r.unaffiliated_midpoint ? nlohmann::json(to_string(*r.unaffiliated_midpoint)) : nlohmann::json(nullptr)},
      {"star", check_json(r.star)},
      {"all_satisfied", r.all_satisfied()},
  };
  return j;
}

}  // namespace distk
