#ifndef PALKIT_PARSE_HPP
#define PALKIT_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sentence.hpp"
#include "symbols.hpp"

namespace palkit {

  struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
  };

  // Sentence text:
  //
  //   formula := disj ('->' formula)?                   right-associative
  //   disj    := conj ('|' conj)*
  //   conj    := prefix ('&' prefix)*
  //   prefix  := '~' prefix | '[!' formula ']' prefix
  //            | '[' name ']' prefix | '<' name '>' prefix | primary
  //   primary := name | 'false' | '(' formula ')'
  //
  // Names are [A-Za-z_][A-Za-z0-9_]*; 'false' is reserved. '#' starts a line
  // comment. ~, &, |, <i> and 'true' are expanded definitionally, so the
  // resulting tree uses only the five constructors.
  namespace detail {

    enum class Tok : std::uint8_t {
      Name, False, Arrow, Amp, Pipe, Tilde,
      LBracket, RBracket, Bang, LAngle, RAngle, LParen, RParen, End
    };

    struct Token {
      Tok kind;
      std::string_view text;
      int line, column;
    };

    class SentenceLexer {
    public:
      explicit SentenceLexer(std::string_view src) : src_(src) { advance(); }

      const Token& peek() const { return current_; }

      Token take() {
        Token t = current_;
        advance();
        return t;
      }

    private:
      void advance() {
        skip_blank();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) {
          current_ = {Tok::End, {}, line, col};
          return;
        }
        char c = src_[pos_];
        auto single = [&](Tok k) {
          current_ = {k, src_.substr(pos_, 1), line, col};
          bump();
        };
        switch (c) {
          case '~': single(Tok::Tilde); return;
          case '&': single(Tok::Amp); return;
          case '|': single(Tok::Pipe); return;
          case '[': single(Tok::LBracket); return;
          case ']': single(Tok::RBracket); return;
          case '!': single(Tok::Bang); return;
          case '<': single(Tok::LAngle); return;
          case '>': single(Tok::RAngle); return;
          case '(': single(Tok::LParen); return;
          case ')': single(Tok::RParen); return;
          case '-':
            if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
              current_ = {Tok::Arrow, src_.substr(pos_, 2), line, col};
              bump();
              bump();
              return;
            }
            throw ParseError("unknown token '-'", line, col);
          default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          std::size_t start = pos_;
          while (pos_ < src_.size() &&
                 (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            bump();
          std::string_view word = src_.substr(start, pos_ - start);
          current_ = {word == "false" ? Tok::False : Tok::Name, word, line, col};
          return;
        }
        throw ParseError(std::string("unknown token '") + c + "'", line, col);
      }

      void skip_blank() {
        while (pos_ < src_.size()) {
          char c = src_[pos_];
          if (c == '#') {
            while (pos_ < src_.size() && src_[pos_] != '\n') bump();
          } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            bump();
          } else {
            break;
          }
        }
      }

      void bump() {
        if (src_[pos_] == '\n') {
          ++line_;
          col_ = 1;
        } else {
          ++col_;
        }
        ++pos_;
      }

      std::string_view src_;
      std::size_t pos_ = 0;
      int line_ = 1, col_ = 1;
      Token current_{Tok::End, {}, 1, 1};
    };

    class SentenceParser {
    public:
      SentenceParser(std::string_view src, Vocabulary& vocab) : lex_(src), vocab_(vocab) {}

      Sentence parse_all() {
        Sentence s = formula();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
          throw ParseError("unexpected '" + std::string(t.text) + "' after formula", t.line, t.column);
        return s;
      }

    private:
      Sentence formula() {
        Sentence lhs = disj();
        if (lex_.peek().kind == Tok::Arrow) {
          lex_.take();
          return Sentence::implies(std::move(lhs), formula());
        }
        return lhs;
      }

      Sentence disj() {
        Sentence lhs = conj();
        while (lex_.peek().kind == Tok::Pipe) {
          lex_.take();
          lhs = Sentence::disjunction(std::move(lhs), conj());
        }
        return lhs;
      }

      Sentence conj() {
        Sentence lhs = prefix();
        while (lex_.peek().kind == Tok::Amp) {
          lex_.take();
          lhs = Sentence::conjunction(std::move(lhs), prefix());
        }
        return lhs;
      }

      Sentence prefix() {
        const Token& t = lex_.peek();
        switch (t.kind) {
          case Tok::Tilde:
            lex_.take();
            return Sentence::negation(prefix());
          case Tok::LBracket: {
            lex_.take();
            if (lex_.peek().kind == Tok::Bang) {
              lex_.take();
              Sentence announced = formula();
              expect(Tok::RBracket, "']'");
              return Sentence::announce(std::move(announced), prefix());
            }
            AgentId i = vocab_.agent(expect(Tok::Name, "agent name").text);
            expect(Tok::RBracket, "']'");
            return Sentence::box(i, prefix());
          }
          case Tok::LAngle: {
            lex_.take();
            AgentId i = vocab_.agent(expect(Tok::Name, "agent name").text);
            expect(Tok::RAngle, "'>'");
            return Sentence::diamond(i, prefix());
          }
          default: return primary();
        }
      }

      Sentence primary() {
        Token t = lex_.take();
        switch (t.kind) {
          case Tok::Name: return Sentence::atom(vocab_.atom(t.text));
          case Tok::False: return Sentence::bottom();
          case Tok::LParen: {
            Sentence s = formula();
            expect(Tok::RParen, "')'");
            return s;
          }
          case Tok::End: throw ParseError("unexpected end of input", t.line, t.column);
          default:
            throw ParseError("unexpected '" + std::string(t.text) + "'", t.line, t.column);
        }
      }

      Token expect(Tok kind, const char* what) {
        const Token& t = lex_.peek();
        if (t.kind != kind)
          throw ParseError(std::string("expected ") + what + ", found '" +
                               (t.kind == Tok::End ? "end of input" : std::string(t.text)) + "'",
                           t.line, t.column);
        return lex_.take();
      }

      SentenceLexer lex_;
      Vocabulary& vocab_;
    };

  }  // namespace detail

  inline Sentence parse_sentence(std::string_view text, Vocabulary& vocab) {
    return detail::SentenceParser(text, vocab).parse_all();
  }

}  // namespace palkit

#endif  // PALKIT_PARSE_HPP
