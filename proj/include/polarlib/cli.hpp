#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace polar::cli {

enum class Command { Ranks, EdDegree, ChernMather, Plucker, FocalDegree, Evolute, PolarMatrix };
enum class OutputFormat { Text, Json };

std::optional<Command> parseCommand(const std::string& name);
std::string commandName(Command c);
const std::vector<std::string>& commandNames();

/// A parsed invocation. Option values are kept as strings (repeated flags
/// keep every occurrence, bare flags hold "true") and validated by execute().
struct CommandRequest {
  Command command = Command::Ranks;
  std::map<std::string, std::vector<std::string>> options;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 0;

  bool has(const std::string& key) const { return options.count(key) > 0; }
  /// Last value of an option; throws an input error when it is missing.
  const std::string& get(const std::string& key) const;
  const std::vector<std::string>& all(const std::string& key) const;
};

/// Seed from an explicit flag value, else POLARLIB_SEED, else 0.
std::uint64_t resolveSeed(const std::optional<std::string>& flag);
std::uint64_t parseSeed(const std::string& text);

/// Runs the command and returns the report object:
///   {command, inputs, results, warnings, seed}
/// Engine failures propagate as PolarError.
nlohmann::json execute(const CommandRequest& req);

std::string renderText(const nlohmann::json& report);

/// execute() plus formatting and error mapping; returns the exit code
/// (0 ok, 2 input, 3 genericity, 4 consistency).
int run(const CommandRequest& req, std::ostream& out, std::ostream& err);

// Option value parsers shared with the front end and tests.
std::vector<std::int64_t> parseIntegerList(const std::string& text, const std::string& what);
std::int64_t parseInteger(const std::string& text, const std::string& what);

}  // namespace polar::cli
