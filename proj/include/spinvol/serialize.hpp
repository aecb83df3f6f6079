#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spinvol/obstruction.hpp"

namespace spinvol {

using json = nlohmann::json;

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Matrices are row-major arrays of integer arrays. Integers that do not fit
// in 64 bits are written as decimal strings; both spellings are accepted on
// input.

json to_json(const Integer &x);
json to_json(const IntMatrix &m);
json to_json(const IntSymForm &f);
json to_json(const EquivariantForm &ef);
json to_json(const FormInvariants &inv);
json to_json(const CanonicalEvenForm &c);
json to_json(const ModuleDecomposition &d);
json to_json(const RealizationReport &rep);
json to_json(const SNFResult &snf);
/// Action schema plus a "roster" section.
json to_json(const PaperAction &action);
json to_json(const Certificate &cert);

/// Throws MalformedInput naming the offending field.
IntMatrix matrix_from_json(const json &j, const std::string &field);

/// {"gram": [[...]]}. Throws MalformedInput, NotSymmetric.
IntSymForm form_from_json(const json &j);
/// {"gram": [[...]], "g": [[...]]}. Throws MalformedInput, NotSymmetric,
/// NotInvolution, NotIsometry.
EquivariantForm action_from_json(const json &j);
/// Strict: every key required, no unknown keys. Throws MalformedInput.
Certificate certificate_from_json(const json &j);

/// Parses text, reporting line and column on syntax errors.
json parse_json_text(const std::string &text);
/// Throws IoError when the file cannot be read.
json read_json_file(const std::filesystem::path &path);

IntSymForm parse_form_file(const std::filesystem::path &path);
EquivariantForm parse_action_file(const std::filesystem::path &path);

/// Sorted keys, two-space indent, LF line endings, trailing newline.
std::string canonical_dump(const json &j);

} // namespace spinvol
