#ifndef BDC_CLI_CACHE_FILE_HPP
#define BDC_CLI_CACHE_FILE_HPP

#include <iosfwd>
#include <string>

#include "bdc/recursion.hpp"

namespace bdc::cli {

/// Environment variable naming the default memo-cache file.
inline constexpr const char* cache_env_var = "BDC_CACHE";

/// Append-only text file of canonical key -> sphere counts. The first line is
/// a version header; each record carries its own checksum. Any malformed
/// record makes the whole file untrusted.
class CacheFile {
public:
    explicit CacheFile(std::string path) : path_(std::move(path)) {}

    /// Loads records into `cache`. Returns false (after writing a warning to
    /// `warn`) when the file is corrupt; nothing is loaded in that case. A
    /// missing file is not an error.
    bool load(MemoCache& cache, std::ostream& warn);

    /// Appends entries of `cache` not seen at load time. A corrupt file is
    /// rewritten from scratch.
    void save(const MemoCache& cache) const;

    static std::string encode(const CanonicalKey& key, const SphereCountVector& v);

private:
    std::string path_;
    std::unordered_map<CanonicalKey, SphereCountVector> loaded_;
    bool corrupt_ = false;
};

}  // namespace bdc::cli

#endif  // BDC_CLI_CACHE_FILE_HPP
