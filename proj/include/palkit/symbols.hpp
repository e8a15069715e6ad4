#ifndef PALKIT_SYMBOLS_HPP
#define PALKIT_SYMBOLS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace palkit {

  // Index into a Vocabulary's atom table.
  struct AtomId {
    std::uint32_t index = 0;
    friend auto operator<=>(AtomId, AtomId) = default;
  };

  // Index into a Vocabulary's agent table.
  struct AgentId {
    std::uint32_t index = 0;
    friend auto operator<=>(AgentId, AgentId) = default;
  };

  // Interning table for atom and agent names. Distinct names get distinct
  // indices; indices are dense and allocated in first-use order. Not
  // thread-safe while interning; everything else in the library is pure.
  class Vocabulary {
  public:
    AtomId atom(std::string_view name) {
      if (auto it = atom_index_.find(std::string(name)); it != atom_index_.end()) return {it->second};
      std::uint32_t idx = static_cast<std::uint32_t>(atom_names_.size());
      atom_names_.emplace_back(name);
      atom_index_.emplace(atom_names_.back(), idx);
      return {idx};
    }

    AgentId agent(std::string_view name) {
      if (auto it = agent_index_.find(std::string(name)); it != agent_index_.end()) return {it->second};
      std::uint32_t idx = static_cast<std::uint32_t>(agent_names_.size());
      agent_names_.emplace_back(name);
      agent_index_.emplace(agent_names_.back(), idx);
      return {idx};
    }

    std::optional<AtomId> find_atom(std::string_view name) const {
      auto it = atom_index_.find(std::string(name));
      if (it == atom_index_.end()) return std::nullopt;
      return AtomId{it->second};
    }

    std::optional<AgentId> find_agent(std::string_view name) const {
      auto it = agent_index_.find(std::string(name));
      if (it == agent_index_.end()) return std::nullopt;
      return AgentId{it->second};
    }

    const std::string& atom_name(AtomId id) const {
      if (id.index >= atom_names_.size()) throw std::out_of_range("unknown atom index");
      return atom_names_[id.index];
    }

    const std::string& agent_name(AgentId id) const {
      if (id.index >= agent_names_.size()) throw std::out_of_range("unknown agent index");
      return agent_names_[id.index];
    }

    std::size_t atom_count() const { return atom_names_.size(); }
    std::size_t agent_count() const { return agent_names_.size(); }

  private:
    std::vector<std::string> atom_names_;
    std::vector<std::string> agent_names_;
    std::unordered_map<std::string, std::uint32_t> atom_index_;
    std::unordered_map<std::string, std::uint32_t> agent_index_;
  };

}  // namespace palkit

#endif  // PALKIT_SYMBOLS_HPP
