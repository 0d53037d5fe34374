#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "fermatlat/int_matrix.hpp"

#include "json.hpp"

namespace fermat {

class SerializationError : public std::runtime_error {
public:
    explicit SerializationError(const std::string& what) : std::runtime_error(what) {}
};

/// Binary format: magic "FMX1", u64 rows, u64 cols (little endian),
/// one length-prefixed sign/magnitude record per entry, then a trailing
/// FNV-1a checksum over everything after the magic.
void write_matrix(std::ostream& os, const IntMatrix& m);
IntMatrix read_matrix(std::istream& is);  // throws SerializationError

void write_matrix_file(const std::filesystem::path& path, const IntMatrix& m);
IntMatrix read_matrix_file(const std::filesystem::path& path);

/// {"rows": r, "cols": c, "entries": [decimal strings]} -- strings
/// because entries routinely exceed 64 bits.
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace fermat
