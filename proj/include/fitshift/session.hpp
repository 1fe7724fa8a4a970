#pragma once

#include "fitshift/ideal.hpp"
#include "fitshift/ring_matrix.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fitshift {

using Value = std::variant<RingElement, RingMatrix, Ideal, FractionalIdeal>;

struct SessionOptions {
  std::optional<std::pair<unsigned, unsigned>> precision;  // overrides (k, N)
  bool assume_nzd = false;
  unsigned jobs = 1;
  bool json = false;
};

/// Exit status of a command or a whole run.
enum class Status { ok = 0, mismatch = 1, usage = 2 };

struct CommandOutput {
  Status status = Status::ok;
  std::string text;
  nlohmann::json json;
};

/// A command interpreter holding one ring and named values.
class Session {
 public:
  explicit Session(SessionOptions opts = {}, std::filesystem::path base_dir = ".");

  /// Runs one command line.  Errors are reported in the output with
  /// Status::usage rather than thrown.
  CommandOutput run_command(const std::string& line, std::size_t line_no = 1);

  /// Runs every line; stops at the first usage error.  Returns the worst status.
  Status run_stream(std::istream& in, std::ostream& out, std::ostream& err);

  const RingPtr& ring() const;
  bool has_ring() const { return ring_ != nullptr; }
  const std::map<std::string, Value>& bindings() const { return bindings_; }
  const std::vector<std::pair<std::string, std::string>>& provenance() const { return provenance_; }

  /// Parses a value in the session ring (see the README for the syntax).
  Value parse_value(const std::string& text, std::size_t line_no = 1, std::size_t column = 0) const;

 private:
  CommandOutput dispatch(const std::string& cmd, const std::string& rest, std::size_t line_no, std::size_t col);

  SessionOptions opts_;
  std::filesystem::path base_;
  RingPtr ring_;
  std::map<std::string, Value> bindings_;
  std::vector<std::pair<std::string, std::string>> provenance_;
};

/// Text forms used by the session: "(g1, g2)" and "(g1, g2)/f".
std::string format_ideal(const Ideal& I);
std::string format_fraction(const FractionalIdeal& x);
std::string format_matrix(const RingMatrix& m);
std::string format_value(const Value& v);

/// Reads the JSON document of an Euler-factor data file.
struct DecompositionData;
DecompositionData decomposition_from_json(const nlohmann::json& j);

}  // namespace fitshift
