#include "cvxtop/set_system.hpp"

#include <sstream>

#include "cvxtop/errors.hpp"
#include "text_io.hpp"

namespace cvxtop {

SetSystem::SetSystem(int ground_size, std::vector<ElementSet> members)
    : ground_size_(ground_size), members_(std::move(members)) {
  if (ground_size_ < 1 || ground_size_ > kMaxGround)
    throw InputError("ground size must be in [1, 64], got " + std::to_string(ground_size_));
  if (members_.size() > static_cast<std::size_t>(kMaxMembers))
    throw InputError("at most 64 members are supported");
  const ElementSet x = ground();
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (!members_[i].subset_of(x))
      throw InputError("member " + std::to_string(i) + " has an element outside the ground set");
}

void check_selector(const SetSystem& f, Selector g) {
  if (!g.subset_of(f.all()))
    throw InputError("selector refers to a member position >= " + std::to_string(f.size()));
}

ElementSet meet(const SetSystem& f, Selector g) {
  check_selector(f, g);
  ElementSet acc = f.ground();
  for (std::uint64_t b = g.bits(); b; b &= b - 1) acc &= f.members()[std::countr_zero(b)];
  return acc;
}

ElementSet hull(const SetSystem& f, ElementSet p) {
  if (!p.subset_of(f.ground())) throw InputError("hull: element index out of range");
  ElementSet acc = f.ground();
  for (const auto& a : f.members())
    if (p.subset_of(a)) acc &= a;
  return acc;
}

bool is_clique(const SetSystem& f, Selector g) { return !meet(f, g).empty(); }

namespace {

// Every c-subset of `rest` together with `chosen` is a clique.
bool all_subsets_meet(const SetSystem& f, std::vector<int>& idx, std::size_t from, int need,
                      ElementSet acc) {
  if (acc.empty()) return false;
  if (need == 0) return true;
  for (std::size_t i = from; i + static_cast<std::size_t>(need) <= idx.size(); ++i)
    if (!all_subsets_meet(f, idx, i + 1, need - 1, acc & f.members()[idx[i]])) return false;
  return true;
}

}  // namespace

bool is_cwise_clique(const SetSystem& f, Selector g, int c) {
  if (c < 1) throw InputError("c-wise clique needs c >= 1");
  check_selector(f, g);
  if (g.size() <= c) return is_clique(f, g);
  auto idx = g.indices();
  return all_subsets_meet(f, idx, 0, c, f.ground());
}

SetSystem restrict(const SetSystem& f, Selector g) {
  check_selector(f, g);
  std::vector<ElementSet> picked;
  for (int i : g.indices()) picked.push_back(f.members()[i]);
  return SetSystem(f.ground_size(), std::move(picked));
}

SetSystem parse_set_system(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.empty()) throw InputError("empty set-system file");
  const auto& head = lines.front();
  if (head.tokens[0] != "ground" || head.tokens.size() != 2)
    detail::fail(head.number, "expected 'ground <n>'");
  const auto n = detail::parse_int(head.tokens[1], head.number);
  if (n < 1 || n > SetSystem::kMaxGround) detail::fail(head.number, "ground size must be in [1, 64]");
  std::vector<ElementSet> members;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "set") detail::fail(line.number, "unknown directive '" + line.tokens[0] + "'");
    ElementSet s;
    for (std::size_t j = 1; j < line.tokens.size(); ++j) {
      const auto e = detail::parse_int(line.tokens[j], line.number);
      if (e < 0 || e >= n) detail::fail(line.number, "element " + line.tokens[j] + " out of range");
      s.insert(static_cast<int>(e));
    }
    members.push_back(s);
    if (members.size() > static_cast<std::size_t>(SetSystem::kMaxMembers))
      detail::fail(line.number, "at most 64 members are supported");
  }
  return SetSystem(static_cast<int>(n), std::move(members));
}

SetSystem parse_set_system(const std::string& text) {
  std::istringstream in(text);
  return parse_set_system(in);
}

SetSystem load_set_system(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_set_system(in);
}

std::string format_set_system(const SetSystem& f) {
  std::ostringstream out;
  out << "ground " << f.ground_size() << '\n';
  for (const auto& m : f.members()) {
    out << "set";
    for (int e : m.indices()) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

}  // namespace cvxtop
