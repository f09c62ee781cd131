#include "cvxtop/corpus.hpp"

#include "cvxtop/errors.hpp"

namespace cvxtop {

SetSystem random_system(std::mt19937_64& rng, int ground, int members) {
  if (members < 0 || members > SetSystem::kMaxMembers)
    throw InputError("member count must be in [0, 64]");
  std::vector<ElementSet> sets;
  sets.reserve(static_cast<std::size_t>(members));
  const ElementSet mask = ElementSet::full(ground);
  for (int i = 0; i < members; ++i) sets.push_back(ElementSet(rng()) & mask);
  return SetSystem(ground, std::move(sets));
}

std::vector<SetSystem> random_corpus(std::uint64_t seed, int count, int ground, int members) {
  std::mt19937_64 rng(seed);
  std::vector<SetSystem> out;
  for (int i = 0; i < count; ++i) out.push_back(random_system(rng, ground, members));
  return out;
}

SetSystem intervals_system(int n) {
  std::vector<ElementSet> sets;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) sets.push_back(ElementSet::full(j + 1).minus(ElementSet::full(i)));
  return SetSystem(n, std::move(sets));
}

SetSystem star_system(int n) {
  std::vector<ElementSet> sets;
  for (int i = 0; i < n; ++i) {
    ElementSet s = ElementSet::full(n);
    s.erase(i);
    sets.push_back(s);
  }
  return SetSystem(n, std::move(sets));
}

}  // namespace cvxtop
