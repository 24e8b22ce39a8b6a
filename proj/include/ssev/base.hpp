#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ssev {

using PlayerId = int;
using VertexId = int;
using StateId = int;

/// Error for malformed inputs (bad files, contract violations on operations).
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Interned name table: stable dense ids in insertion order.
class NameTable {
 public:
  int intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
  }

  int find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  int require(const std::string& name, const char* what) const {
    int id = find(name);
    if (id < 0) throw input_error(std::string("unknown ") + what + ": " + name);
    return id;
  }

  const std::string& name(int id) const { return names_.at(static_cast<size_t>(id)); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// Subsets of players as bitmasks; the toolkit caps player counts well below 31.
using PlayerSet = std::uint32_t;

inline bool contains(PlayerSet s, PlayerId p) { return (s >> p) & 1u; }
inline PlayerSet with(PlayerSet s, PlayerId p) { return s | (PlayerSet{1} << p); }
inline int popcount(PlayerSet s) { return __builtin_popcount(s); }

}  // namespace ssev
