#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nectar/cover.hpp"
#include "nectar/node_set.hpp"

namespace nectar {

/// Maps node labels to dense ids in first-appearance order, shared across
/// the files that must agree on one universe.
class LabelInterner {
 public:
  NodeId intern(const std::string& label) {
    auto [it, inserted] = ids_.try_emplace(label, static_cast<NodeId>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }

  std::size_t size() const { return labels_.size(); }
  std::span<const std::string> labels() const { return labels_; }

 private:
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::string> labels_;
};

/// Reads one community per line of whitespace-separated labels. Blank lines
/// are skipped; duplicate labels within a line collapse.
std::vector<NodeSet> read_cover(std::istream& in, LabelInterner& interner);

/// Writes one community per line, members as their original labels in
/// ascending id order.
void write_cover(std::ostream& out, const std::vector<NodeSet>& communities,
                 std::span<const std::string> labels);
void write_cover(std::ostream& out, const Cover& cover,
                 std::span<const std::string> labels);

}  // namespace nectar
