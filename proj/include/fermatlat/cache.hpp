#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fermatlat/int_matrix.hpp"

namespace fermat {

/// Content-addressed matrix store: one file per key under a cache
/// directory, named by the key hash, carrying the full key for
/// validation plus the checksummed matrix payload. Corrupt or
/// mismatched files are treated as misses (with a warning on stderr),
/// never as errors.
class MatrixCache {
public:
    MatrixCache() = default;  // disabled
    explicit MatrixCache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }

    std::optional<IntMatrix> load(const std::string& key) const;
    void store(const std::string& key, const IntMatrix& m) const;

    std::filesystem::path path_for(const std::string& key) const;

private:
    std::filesystem::path dir_;
};

/// Stage key carrying the layout conventions, so any change of ordering
/// or format invalidates old entries by construction.
std::string cache_key(const std::string& stage, int n, int d);

}  // namespace fermat
