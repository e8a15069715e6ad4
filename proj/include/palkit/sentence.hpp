#ifndef PALKIT_SENTENCE_HPP
#define PALKIT_SENTENCE_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>

#include "symbols.hpp"

namespace palkit {

  // Immutable sentence tree:  p | false | a -> b | [i] a | [! a] b.
  // Derived connectives (~, &, |, <i>, true) are definitional expansions and
  // never appear as constructors. Subtrees are shared; structural equality
  // and ordering are value-based.
  class Sentence {
  public:
    enum class Kind : std::uint8_t { Atom, Bottom, Implies, Box, Announce };

    static Sentence atom(AtomId p) { return Sentence(make(Kind::Atom, p.index, nullptr, nullptr)); }

    static Sentence bottom() {
      static const NodePtr node = make(Kind::Bottom, 0, nullptr, nullptr);
      return Sentence(node);
    }

    static Sentence implies(Sentence a, Sentence b) {
      return Sentence(make(Kind::Implies, 0, std::move(a.node_), std::move(b.node_)));
    }

    static Sentence box(AgentId i, Sentence a) {
      return Sentence(make(Kind::Box, i.index, std::move(a.node_), nullptr));
    }

    static Sentence announce(Sentence a, Sentence b) {
      return Sentence(make(Kind::Announce, 0, std::move(a.node_), std::move(b.node_)));
    }

    // ~a  :=  a -> false
    static Sentence negation(Sentence a) { return implies(std::move(a), bottom()); }
    // true  :=  ~false
    static Sentence top() { return negation(bottom()); }
    // a & b  :=  ~(a -> ~b)
    static Sentence conjunction(Sentence a, Sentence b) {
      return negation(implies(std::move(a), negation(std::move(b))));
    }
    // a | b  :=  ~a -> b
    static Sentence disjunction(Sentence a, Sentence b) {
      return implies(negation(std::move(a)), std::move(b));
    }
    // <i> a  :=  ~[i]~a
    static Sentence diamond(AgentId i, Sentence a) {
      return negation(box(i, negation(std::move(a))));
    }

    Kind kind() const { return node_->kind; }

    AtomId atom_id() const {
      assert(kind() == Kind::Atom);
      return {node_->id};
    }

    AgentId agent() const {
      assert(kind() == Kind::Box);
      return {node_->id};
    }

    // Implies children.
    Sentence antecedent() const {
      assert(kind() == Kind::Implies);
      return Sentence(node_->a);
    }
    Sentence consequent() const {
      assert(kind() == Kind::Implies);
      return Sentence(node_->b);
    }

    // The announced sentence of [! a] b.
    Sentence announced() const {
      assert(kind() == Kind::Announce);
      return Sentence(node_->a);
    }

    // Body of a box or an announcement.
    Sentence body() const {
      assert(kind() == Kind::Box || kind() == Kind::Announce);
      return Sentence(kind() == Kind::Box ? node_->a : node_->b);
    }

    // Matches the shape a -> false.
    bool is_negation() const {
      return kind() == Kind::Implies && node_->b->kind == Kind::Bottom;
    }

    // Operand of a negation-shaped sentence.
    Sentence negated() const {
      assert(is_negation());
      return Sentence(node_->a);
    }

    // Tree node count (shared subtrees counted with multiplicity).
    std::uint64_t size() const { return node_->size; }

    std::size_t hash() const { return node_->hash; }

    bool operator==(const Sentence& other) const {
      return equal(node_.get(), other.node_.get());
    }

    std::strong_ordering operator<=>(const Sentence& other) const {
      return compare(node_.get(), other.node_.get());
    }

  private:
    struct Node {
      Kind kind;
      std::uint32_t id;  // atom or agent index
      std::shared_ptr<const Node> a, b;
      std::uint64_t size;
      std::size_t hash;
    };
    using NodePtr = std::shared_ptr<const Node>;

    explicit Sentence(NodePtr node) : node_(std::move(node)) {}

    static NodePtr make(Kind kind, std::uint32_t id, NodePtr a, NodePtr b) {
      std::uint64_t size = 1 + (a ? a->size : 0) + (b ? b->size : 0);
      std::size_t h = std::hash<std::uint32_t>{}((static_cast<std::uint32_t>(kind) << 24) ^ id);
      if (a) h = h * 0x9e3779b97f4a7c15ull + a->hash;
      if (b) h = h * 0x517cc1b727220a95ull + b->hash;
      return std::make_shared<const Node>(Node{kind, id, std::move(a), std::move(b), size, h});
    }

    static bool equal(const Node* l, const Node* r) {
      if (l == r) return true;
      if (l->kind != r->kind || l->id != r->id || l->hash != r->hash || l->size != r->size) return false;
      if (l->a && !equal(l->a.get(), r->a.get())) return false;
      if (l->b && !equal(l->b.get(), r->b.get())) return false;
      return true;
    }

    static std::strong_ordering compare(const Node* l, const Node* r) {
      if (l == r) return std::strong_ordering::equal;
      if (auto c = l->kind <=> r->kind; c != 0) return c;
      if (auto c = l->id <=> r->id; c != 0) return c;
      if (l->a) {
        if (auto c = compare(l->a.get(), r->a.get()); c != 0) return c;
      }
      if (l->b) {
        if (auto c = compare(l->b.get(), r->b.get()); c != 0) return c;
      }
      return std::strong_ordering::equal;
    }

    NodePtr node_;
  };

  // True iff no announcement occurs anywhere in s.
  inline bool is_static(const Sentence& s) {
    switch (s.kind()) {
      case Sentence::Kind::Atom:
      case Sentence::Kind::Bottom: return true;
      case Sentence::Kind::Implies: return is_static(s.antecedent()) && is_static(s.consequent());
      case Sentence::Kind::Box: return is_static(s.body());
      case Sentence::Kind::Announce: return false;
    }
    return false;  // unreachable
  }

}  // namespace palkit

template <>
struct std::hash<palkit::Sentence> {
  std::size_t operator()(const palkit::Sentence& s) const noexcept { return s.hash(); }
};

#endif  // PALKIT_SENTENCE_HPP
