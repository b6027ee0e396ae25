#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "swarmpath/planner.hpp"

namespace swarmpath {

/// Base for environment-file failures; `field_path` points at the offending
/// location ("obstacles[2].radius", "start", ...), empty when global.
class EnvError : public std::runtime_error {
public:
    EnvError(std::string field_path, const std::string& message)
        : std::runtime_error(field_path.empty() ? message : field_path + ": " + message),
          field_path_(std::move(field_path)) {}
    [[nodiscard]] const std::string& field_path() const { return field_path_; }

private:
    std::string field_path_;
};

/// Document is not valid JSON.
class EnvParseError : public EnvError {
    using EnvError::EnvError;
};

/// Structural problems: missing/unknown/mistyped fields, wrong schema_version.
class EnvSchemaError : public EnvError {
    using EnvError::EnvError;
};

/// Well-formed document whose content breaks a workspace invariant.
class EnvValidationError : public EnvError {
    using EnvError::EnvError;
};

/**
 * Parses and fully validates an environment document. Unknown fields are
 * rejected, clockwise polygon vertices are normalized to counter-clockwise,
 * and every Workspace invariant is re-checked.
 */
Workspace load_environment(std::string_view document);

/// Inverse of load_environment; load(serialize(w)) reproduces w exactly.
std::string serialize_environment(const Workspace& workspace);

/// One of the four bundled scenario reconstructions (id 1..4). Obstacle
/// layouts are hand-authored; start/goal points and obstacle counts are
/// fixed per scenario. Throws std::out_of_range for other ids.
Workspace bundled_environment(int id);

/// Raw JSON text of a bundled scenario, byte-identical to the copy shipped
/// under scenarios/.
std::string_view bundled_environment_json(int id);

}  // namespace swarmpath
