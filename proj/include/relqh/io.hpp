#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "relqh/covers.hpp"
#include "relqh/reldim.hpp"

namespace relqh {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

// Reads and parses a file; parse errors become ValidationError carrying the path and position.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
std::string sha256_hex(const std::string& bytes);
std::string file_sha256(const std::filesystem::path& path);

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j);
Json matrix_to_json(const Matrix& m);  // row-major nested arrays of coefficient strings
Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols);
// Column vector as a flat array.
Json vector_to_json(const Matrix& v);

Json algebra_to_json(const Algebra& a);
// Structure-constant or quiver form; a quiver without a "field" entry uses the fallback field.
AlgebraPtr algebra_from_json(const Json& j, const Field& fallback = Field::prime(3));
QuiverPresentation quiver_from_json(const Json& j);

// "algebra" holds either an inline algebra object or a path relative to base_dir.
Json module_to_json(const Module& m, const Json& algebra_ref);
// Reuses `same` when it has the same structure constants as the declared algebra.
ModulePtr module_from_json(const Json& j, const std::filesystem::path& base_dir, const AlgebraPtr& same = nullptr);

Json poset_to_json(const WeightPoset& p);
WeightPoset poset_from_json(const Json& j);

Json to_json(const DimValue& v);
Json to_json(const MuellerReport& r);
Json to_json(const ChainReport& r, bool witness);
Json to_json(const QHReport& r);
Json to_json(const CoverReport& r);
Json to_json(const RingelCoverVerdict& v);

}  // namespace relqh
