#include <cstdlib>
#include <sstream>

#include "polarlib/cli.hpp"
#include "polarlib/error.hpp"

namespace polar::cli {
namespace {

const std::vector<std::pair<Command, std::string>> kCommands{
    {Command::Ranks, "ranks"},
    {Command::EdDegree, "ed-degree"},
    {Command::ChernMather, "chern-mather"},
    {Command::Plucker, "plucker"},
    {Command::FocalDegree, "focal-degree"},
    {Command::Evolute, "evolute"},
    {Command::PolarMatrix, "polar-matrix"},
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<Command> parseCommand(const std::string& name) {
  for (const auto& [c, n] : kCommands)
    if (n == name) return c;
  return std::nullopt;
}

std::string commandName(Command c) {
  for (const auto& [cmd, n] : kCommands)
    if (cmd == c) return n;
  return "?";
}

const std::vector<std::string>& commandNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [c, n] : kCommands) out.push_back(n);
    return out;
  }();
  return names;
}

const std::string& CommandRequest::get(const std::string& key) const {
  auto it = options.find(key);
  if (it == options.end() || it->second.empty()) throwInput("missing_option", "missing option --" + key);
  return it->second.back();
}

const std::vector<std::string>& CommandRequest::all(const std::string& key) const {
  static const std::vector<std::string> empty;
  auto it = options.find(key);
  return it == options.end() ? empty : it->second;
}

std::int64_t parseInteger(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty()) throwInput("bad_integer", "empty integer in " + what);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throwInput("bad_integer", "'" + t + "' is not an integer (" + what + ")");
  }
  if (pos != t.size()) throwInput("bad_integer", "'" + t + "' is not an integer (" + what + ")");
  return v;
}

std::vector<std::int64_t> parseIntegerList(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parseInteger(item, what));
  if (out.empty()) throwInput("bad_integer", "empty list for " + what);
  return out;
}

std::uint64_t parseSeed(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throwInput("bad_seed", "seed must be a non-negative integer, got '" + text + "'");
  try {
    return std::stoull(t);
  } catch (const std::exception&) {
    throwInput("bad_seed", "seed out of range: '" + text + "'");
  }
}

std::uint64_t resolveSeed(const std::optional<std::string>& flag) {
  if (flag) return parseSeed(*flag);
  if (const char* env = std::getenv("POLARLIB_SEED")) return parseSeed(env);
  return 0;
}

}  // namespace polar::cli
