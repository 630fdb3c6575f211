#include <stdexcept>

#include "pathograph/truemper.hpp"

namespace pg {

Pathograph make_theta() {
  Pathograph p;
  int a = p.add_vertex("1");
  int b = p.add_vertex("2");
  p.add_urpath("p1", a, b);
  p.add_urpath("p2", a, b);
  p.add_urpath("p3", a, b);
  return p;
}

Pathograph make_pyramid_one_short() {
  Pathograph p;
  int v1 = p.add_vertex("1");
  int v2 = p.add_vertex("2");
  int v3 = p.add_vertex("3");
  int apex = p.add_vertex("4");
  p.add_edge(v1, v2);
  p.add_edge(v1, v3);
  p.add_edge(v2, v3);
  p.add_urpath("p1", apex, v1);
  p.add_urpath("p2", apex, v2);
  p.add_edge(apex, v3);
  return p;
}

Pathograph make_pyramid_long() {
  Pathograph p;
  int v1 = p.add_vertex("1");
  int v2 = p.add_vertex("2");
  int v3 = p.add_vertex("3");
  int apex = p.add_vertex("4");
  p.add_edge(v1, v2);
  p.add_edge(v1, v3);
  p.add_edge(v2, v3);
  p.add_urpath("p1", apex, v1);
  p.add_urpath("p2", apex, v2);
  p.add_urpath("p3", apex, v3);
  return p;
}

Pathograph make_prism(int long_paths) {
  if (long_paths < 0 || long_paths > 3)
    throw std::invalid_argument("prism: 0 to 3 joining paths can be long");
  Pathograph p;
  int v1 = p.add_vertex("1");
  int v2 = p.add_vertex("2");
  int v3 = p.add_vertex("3");
  int v4 = p.add_vertex("4");
  int v5 = p.add_vertex("5");
  int v6 = p.add_vertex("6");
  p.add_edge(v1, v2);
  p.add_edge(v1, v3);
  p.add_edge(v2, v3);
  p.add_edge(v4, v5);
  p.add_edge(v4, v6);
  p.add_edge(v5, v6);
  const std::pair<int, int> joins[3] = {{v3, v4}, {v2, v5}, {v1, v6}};
  int fresh = 0;
  for (int i = 0; i < 3; ++i) {
    if (i < long_paths)
      p.add_urpath("p" + std::to_string(++fresh), joins[i].first, joins[i].second);
    else
      p.add_edge(joins[i].first, joins[i].second);
  }
  return p;
}

Pathograph make_wheel_one_sector() {
  Pathograph p;
  int v1 = p.add_vertex("1");
  int hub = p.add_vertex("2");
  int v3 = p.add_vertex("3");
  p.add_edge(v1, hub);
  p.add_edge(hub, v3);
  int u1 = p.add_urpath("p1", v1, v3);
  p.add_urpath("p2", v1, v3);
  p.add_spoke(hub, u1);
  return p;
}

Pathograph make_wheel_two_sectors() {
  Pathograph p;
  int v1 = p.add_vertex("1");
  int hub = p.add_vertex("2");
  int v3 = p.add_vertex("3");
  p.add_edge(v1, hub);
  p.add_edge(hub, v3);
  int u1 = p.add_urpath("p1", v1, v3);
  int u2 = p.add_urpath("p2", v1, v3);
  p.add_spoke(hub, u1);
  p.add_spoke(hub, u2);
  return p;
}

std::vector<Pathograph> theta_family() { return {make_theta()}; }

std::vector<Pathograph> pyramid_family() {
  return {make_pyramid_one_short(), make_pyramid_long()};
}

std::vector<Pathograph> prism_family() {
  return {make_prism(0), make_prism(1), make_prism(2), make_prism(3)};
}

std::vector<Pathograph> wheel_family() {
  return {make_wheel_one_sector(), make_wheel_two_sectors()};
}

std::vector<Pathograph> truemper_family() {
  std::vector<Pathograph> out = theta_family();
  for (const Pathograph& p : pyramid_family()) out.push_back(p);
  for (const Pathograph& p : prism_family()) out.push_back(p);
  for (const Pathograph& p : wheel_family()) out.push_back(p);
  return out;
}

namespace {

bool any_contained(const Pathograph& g, const std::vector<Pathograph>& family) {
  for (const Pathograph& f : family)
    if (contains(g, f)) return true;
  return false;
}

}  // namespace

bool has_theta(const Pathograph& g) { return any_contained(g, theta_family()); }
bool has_pyramid(const Pathograph& g) { return any_contained(g, pyramid_family()); }
bool has_prism(const Pathograph& g) { return any_contained(g, prism_family()); }
bool has_wheel(const Pathograph& g) { return any_contained(g, wheel_family()); }

}  // namespace pg
