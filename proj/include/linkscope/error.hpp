#pragma once

#include <stdexcept>
#include <string>

namespace linkscope {

// Unrecoverable I/O failure while reading a dump stream.
struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid roster input (duplicate keys, bad header, unparseable cell).
struct RosterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TemporalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PowerLawError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LayoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wraps a stage failure inside the pipeline so the CLI can name the stage.
struct StageError : std::runtime_error {
  StageError(std::string stage_name, const std::string& cause)
      : std::runtime_error("stage '" + stage_name + "': " + cause),
        stage(std::move(stage_name)) {}
  std::string stage;
};

}  // namespace linkscope
