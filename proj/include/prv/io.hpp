#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>

#include "prv/arena.hpp"

namespace prv {

struct parse_error : std::runtime_error {
  parse_error(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line(line) {}

  std::size_t line;
};

/// SPGAME text format, line-based with '#' comments:
///
///   SPGAME 1
///   VERTICES n
///   OBJECTIVES t
///   MAXPRIORITY d0 d1 ... dt
///   INITIAL id
///   V id owner p0 p1 ... pt        (one per vertex)
///   E src dst                      (one per edge, in successor order)
///   END
///
/// Odd declared maxima are padded up to the next even number. Structural
/// violations beyond syntax are reported by validate(), not here.
/// parse(write(arena)) reproduces the arena exactly; writing a generated
/// (canonical, successor-sorted) arena is byte-stable.
GameArena parse_arena(std::istream& in);
GameArena parse_arena_text(const std::string& text);
std::string write_arena(const GameArena& arena);

/// MOORE text format for strategy machines:
///
///   MOORE 1
///   STATES k
///   INITIAL s
///   T state vertex nextstate       (update function)
///   C state vertex successor       (choice at Player-0 vertices)
///   END
MooreMachine parse_moore(std::istream& in);
std::string write_moore(const MooreMachine& machine);

}  // namespace prv
