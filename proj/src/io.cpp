#include "prv/io.hpp"

#include <sstream>
#include <vector>

#include "prv/lattice.hpp"

namespace prv {

namespace {

// Line-based token reader that strips '#' comments and tracks positions.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next nonempty line, split into tokens.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      tokens.clear();
      std::istringstream stream(line);
      std::string token;
      while (stream >> token) tokens.push_back(token);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::uint64_t parse_uint(const LineReader& reader, const std::string& token,
                         const std::string& what, std::uint64_t max) {
  std::uint64_t value = 0;
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error(reader.line(), what + " must be a nonnegative integer, got '" +
                                         token + "'");
  try {
    value = std::stoull(token);
  } catch (const std::exception&) {
    throw parse_error(reader.line(), what + " out of range: '" + token + "'");
  }
  if (value > max)
    throw parse_error(reader.line(), what + " " + token + " exceeds " + std::to_string(max));
  return value;
}

std::vector<std::string> expect_line(LineReader& reader, const std::string& keyword,
                                     std::size_t token_count) {
  std::vector<std::string> tokens;
  if (!reader.next(tokens))
    throw parse_error(reader.line(), "unexpected end of file, expected " + keyword);
  if (tokens[0] != keyword)
    throw parse_error(reader.line(), "expected " + keyword + ", got '" + tokens[0] + "'");
  if (token_count != 0 && tokens.size() != token_count)
    throw parse_error(reader.line(), keyword + " expects " +
                                         std::to_string(token_count - 1) + " value(s)");
  return tokens;
}

}  // namespace

GameArena parse_arena(std::istream& in) {
  LineReader reader(in);
  expect_line(reader, "SPGAME", 2);

  auto tokens = expect_line(reader, "VERTICES", 2);
  std::uint32_t n =
      static_cast<std::uint32_t>(parse_uint(reader, tokens[1], "vertex count", 1u << 26));
  if (n == 0) throw parse_error(reader.line(), "vertex count must be positive");

  tokens = expect_line(reader, "OBJECTIVES", 2);
  std::uint32_t t = static_cast<std::uint32_t>(
      parse_uint(reader, tokens[1], "objective count", Payoff::kMaxObjectives));
  if (t == 0) throw parse_error(reader.line(), "objective count must be positive");

  tokens = expect_line(reader, "MAXPRIORITY", t + 2);
  GameArena arena;
  arena.max_priority.reserve(t + 1);
  for (std::uint32_t i = 0; i <= t; ++i)
    arena.max_priority.push_back(static_cast<std::uint32_t>(
        parse_uint(reader, tokens[1 + i], "max priority", 1u << 20)));

  tokens = expect_line(reader, "INITIAL", 2);
  arena.initial =
      static_cast<std::uint32_t>(parse_uint(reader, tokens[1], "initial vertex", n - 1));

  arena.owner.assign(n, 0);
  arena.successors.resize(n);
  arena.priorities.assign(n, {});

  std::vector<bool> declared(n, false);
  bool ended = false;
  while (reader.next(tokens)) {
    if (tokens[0] == "END") {
      ended = true;
      break;
    }
    if (tokens[0] == "V") {
      if (tokens.size() != 3 + t + 1)
        throw parse_error(reader.line(), "V expects id, owner and " +
                                             std::to_string(t + 1) + " priorities");
      std::uint32_t id =
          static_cast<std::uint32_t>(parse_uint(reader, tokens[1], "vertex id", n - 1));
      if (declared[id])
        throw parse_error(reader.line(), "vertex " + tokens[1] + " declared twice");
      declared[id] = true;
      std::uint64_t owner = parse_uint(reader, tokens[2], "owner", 255);
      if (owner > 1) throw parse_error(reader.line(), "owner must be 0 or 1");
      arena.owner[id] = static_cast<std::uint8_t>(owner);
      arena.priorities[id].reserve(t + 1);
      for (std::uint32_t i = 0; i <= t; ++i)
        arena.priorities[id].push_back(static_cast<std::uint32_t>(
            parse_uint(reader, tokens[3 + i], "priority", 1u << 20)));
    } else if (tokens[0] == "E") {
      if (tokens.size() != 3) throw parse_error(reader.line(), "E expects src and dst");
      std::uint32_t src =
          static_cast<std::uint32_t>(parse_uint(reader, tokens[1], "edge source", n - 1));
      std::uint32_t dst = static_cast<std::uint32_t>(
          parse_uint(reader, tokens[2], "edge target", (1u << 26) - 1));
      arena.successors[src].push_back(dst);
    } else {
      throw parse_error(reader.line(), "expected V, E or END, got '" + tokens[0] + "'");
    }
  }
  if (!ended) throw parse_error(reader.line(), "missing END");
  for (std::uint32_t v = 0; v < n; ++v)
    if (!declared[v])
      throw parse_error(reader.line(), "vertex " + std::to_string(v) + " has no V line");

  arena.pad_max_priorities();
  return arena;
}

GameArena parse_arena_text(const std::string& text) {
  std::istringstream in(text);
  return parse_arena(in);
}

std::string write_arena(const GameArena& arena) {
  std::ostringstream out;
  const std::uint32_t t = arena.objective_count();
  out << "SPGAME 1\n";
  out << "VERTICES " << arena.vertex_count() << '\n';
  out << "OBJECTIVES " << t << '\n';
  out << "MAXPRIORITY";
  for (std::uint32_t d : arena.max_priority) out << ' ' << d;
  out << '\n';
  out << "INITIAL " << arena.initial << '\n';
  for (std::uint32_t v = 0; v < arena.vertex_count(); ++v) {
    out << "V " << v << ' ' << static_cast<unsigned>(arena.owner[v]);
    for (std::uint32_t p : arena.priorities[v]) out << ' ' << p;
    out << '\n';
  }
  for (std::uint32_t v = 0; v < arena.vertex_count(); ++v)
    for (std::uint32_t w : arena.successors[v]) out << "E " << v << ' ' << w << '\n';
  out << "END\n";
  return out.str();
}

MooreMachine parse_moore(std::istream& in) {
  LineReader reader(in);
  expect_line(reader, "MOORE", 2);

  auto tokens = expect_line(reader, "STATES", 2);
  std::uint32_t k =
      static_cast<std::uint32_t>(parse_uint(reader, tokens[1], "state count", 1u << 26));
  if (k == 0) throw parse_error(reader.line(), "state count must be positive");

  tokens = expect_line(reader, "INITIAL", 2);
  MooreMachine machine;
  machine.state_count = k;
  machine.initial_state =
      static_cast<std::uint32_t>(parse_uint(reader, tokens[1], "initial state", k - 1));

  bool ended = false;
  while (reader.next(tokens)) {
    if (tokens[0] == "END") {
      ended = true;
      break;
    }
    if (tokens[0] != "T" && tokens[0] != "C")
      throw parse_error(reader.line(), "expected T, C or END, got '" + tokens[0] + "'");
    if (tokens.size() != 4)
      throw parse_error(reader.line(), tokens[0] + " expects state, vertex and target");
    std::uint32_t state =
        static_cast<std::uint32_t>(parse_uint(reader, tokens[1], "state", k - 1));
    std::uint32_t vertex = static_cast<std::uint32_t>(
        parse_uint(reader, tokens[2], "vertex", (1u << 26) - 1));
    if (tokens[0] == "T") {
      std::uint32_t next =
          static_cast<std::uint32_t>(parse_uint(reader, tokens[3], "next state", k - 1));
      if (!machine.update.try_emplace({state, vertex}, next).second)
        throw parse_error(reader.line(), "duplicate T entry");
    } else {
      std::uint32_t succ = static_cast<std::uint32_t>(
          parse_uint(reader, tokens[3], "successor", (1u << 26) - 1));
      if (!machine.choice.try_emplace({state, vertex}, succ).second)
        throw parse_error(reader.line(), "duplicate C entry");
    }
  }
  if (!ended) throw parse_error(reader.line(), "missing END");
  return machine;
}

std::string write_moore(const MooreMachine& machine) {
  std::ostringstream out;
  out << "MOORE 1\n";
  out << "STATES " << machine.state_count << '\n';
  out << "INITIAL " << machine.initial_state << '\n';
  for (const auto& [key, next] : machine.update)
    out << "T " << key.first << ' ' << key.second << ' ' << next << '\n';
  for (const auto& [key, succ] : machine.choice)
    out << "C " << key.first << ' ' << key.second << ' ' << succ << '\n';
  out << "END\n";
  return out.str();
}

}  // namespace prv
