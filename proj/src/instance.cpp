#include "abchoose/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace abchoose {

const std::vector<int>& Palette::block(const std::string& name) const {
  auto it = blocks.find(name);
  if (it == blocks.end())
    throw std::invalid_argument("palette has no block named " + name);
  return it->second;
}

std::vector<int> Palette::join(const std::vector<std::string>& names) const {
  std::vector<int> out;
  for (const auto& name : names) {
    const auto& blk = block(name);
    out.insert(out.end(), blk.begin(), blk.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Palette::validate() const {
  ColorSet seen;
  for (const auto& [name, colors] : blocks) {
    if (name != "T" && static_cast<int>(colors.size()) != b)
      throw std::invalid_argument("palette block " + name +
                                  " does not have the unit size b");
    for (int c : colors) {
      if (seen.test(c))
        throw std::invalid_argument("palette blocks are not pairwise disjoint");
      seen.set(c);
    }
  }
}

Palette Palette::consecutive(int a, int b,
                             const std::vector<std::string>& names,
                             int t_size) {
  Palette pal;
  pal.a = a;
  pal.b = b;
  int next = 0;
  for (const auto& name : names) {
    int width = (name == "T") ? t_size : b;
    std::vector<int>& blk = pal.blocks[name];
    for (int i = 0; i < width; ++i) blk.push_back(next++);
  }
  pal.validate();
  return pal;
}

void ListAssignment::validate(int n) const {
  if (static_cast<int>(lists.size()) != n)
    throw std::invalid_argument("list assignment does not cover every vertex");
  for (const auto& list : lists) {
    if (!std::is_sorted(list.begin(), list.end()) ||
        std::adjacent_find(list.begin(), list.end()) != list.end())
      throw std::invalid_argument("color lists must be sorted and duplicate-free");
    for (int c : list)
      if (c < 0 || c >= ColorSet::kMaxColors)
        throw std::invalid_argument("color id outside the supported universe");
    if (declared_size && static_cast<int>(list.size()) != *declared_size)
      throw std::invalid_argument("a list does not have the declared size");
  }
}

void ChoosabilityInstance::validate() const {
  if (b < 1) throw std::invalid_argument("fold size b must be at least 1");
  lists.validate(graph.n());
}

bool validate_coloring(const ChoosabilityInstance& instance,
                       const Multicoloring& phi) {
  const int n = instance.graph.n();
  for (const auto& [v, set] : phi.phi) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("coloring references a vertex outside the graph");
    (void)set;
  }
  if (!phi.complete(n))
    throw std::invalid_argument("coloring does not color every vertex");
  instance.validate();

  std::vector<ColorSet> sets(n);
  for (const auto& [v, set] : phi.phi) {
    if (static_cast<int>(set.size()) != instance.b) return false;
    ColorSet s = ColorSet::of(set);
    if (s.count() != instance.b) return false;  // duplicates inside the set
    if (!ColorSet::of(instance.lists.lists[v]).contains(s)) return false;
    sets[v] = s;
  }
  for (auto [u, v] : instance.graph.edges())
    if (sets[u].intersects(sets[v])) return false;
  return true;
}

}  // namespace abchoose
