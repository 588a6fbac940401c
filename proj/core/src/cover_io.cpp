#include "nectar/cover_io.hpp"

#include <ostream>
#include <sstream>

namespace nectar {

std::vector<NodeSet> read_cover(std::istream& in, LabelInterner& interner) {
  std::vector<NodeSet> communities;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::vector<NodeId> members;
    std::string token;
    while (tokens >> token) members.push_back(interner.intern(token));
    if (!members.empty()) communities.emplace_back(std::move(members));
  }
  return communities;
}

void write_cover(std::ostream& out, const std::vector<NodeSet>& communities,
                 std::span<const std::string> labels) {
  for (const NodeSet& c : communities) {
    bool first = true;
    for (NodeId v : c) {
      if (!first) out << ' ';
      out << labels[v];
      first = false;
    }
    out << '\n';
  }
}

void write_cover(std::ostream& out, const Cover& cover,
                 std::span<const std::string> labels) {
  write_cover(out, cover.snapshot(), labels);
}

}  // namespace nectar
