#ifndef PALKIT_PRINT_HPP
#define PALKIT_PRINT_HPP

#include <optional>
#include <string>

#include "sentence.hpp"
#include "symbols.hpp"

namespace palkit {

  namespace detail {

    // Precedence levels used by the printer. Only implication, prefix and
    // primary forms are ever emitted; & and | stay expanded.
    enum PrintLevel : int { LvlImplies = 0, LvlPrefix = 3, LvlPrimary = 4 };

    // <i> x  is the tree  ([i](x -> false)) -> false.
    inline std::optional<std::pair<AgentId, Sentence>> match_diamond(const Sentence& s) {
      if (!s.is_negation()) return std::nullopt;
      Sentence inner = s.negated();
      if (inner.kind() != Sentence::Kind::Box || !inner.body().is_negation()) return std::nullopt;
      return std::make_pair(inner.agent(), inner.body().negated());
    }

    inline void render(const Sentence& s, const Vocabulary& vocab, int min_level, std::string& out);

    // Appends a prefix operator's operand: parenthesized operands attach
    // directly, others get a separating space.
    inline void attach_operand(const Sentence& s, const Vocabulary& vocab, std::string& out) {
      std::string child;
      render(s, vocab, LvlPrefix, child);
      if (child.empty() || child.front() != '(') out += ' ';
      out += child;
    }

    inline void render(const Sentence& s, const Vocabulary& vocab, int min_level, std::string& out) {
      if (auto dia = match_diamond(s)) {
        out += '<';
        out += vocab.agent_name(dia->first);
        out += '>';
        attach_operand(dia->second, vocab, out);
        return;
      }
      if (s.is_negation()) {
        out += '~';
        std::string child;
        render(s.negated(), vocab, LvlPrefix, child);
        out += child;
        return;
      }
      switch (s.kind()) {
        case Sentence::Kind::Atom: out += vocab.atom_name(s.atom_id()); return;
        case Sentence::Kind::Bottom: out += "false"; return;
        case Sentence::Kind::Implies: {
          if (min_level > LvlImplies) {
            out += '(';
            render(s, vocab, LvlImplies, out);
            out += ')';
            return;
          }
          render(s.antecedent(), vocab, LvlImplies + 1, out);
          out += " -> ";
          render(s.consequent(), vocab, LvlImplies, out);  // right-associative
          return;
        }
        case Sentence::Kind::Box: {
          out += '[';
          out += vocab.agent_name(s.agent());
          out += ']';
          attach_operand(s.body(), vocab, out);
          return;
        }
        case Sentence::Kind::Announce: {
          out += "[! ";
          render(s.announced(), vocab, LvlImplies, out);
          out += ']';
          attach_operand(s.body(), vocab, out);
          return;
        }
      }
    }

  }  // namespace detail

  // Minimally parenthesized text; re-sugars x -> false as ~x and ~[i]~x as
  // <i> x. parse_sentence(print_sentence(s)) == s.
  inline std::string print_sentence(const Sentence& s, const Vocabulary& vocab) {
    std::string out;
    detail::render(s, vocab, detail::LvlImplies, out);
    return out;
  }

}  // namespace palkit

#endif  // PALKIT_PRINT_HPP
