#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ripsrank {

inline constexpr const char* kToolVersion = "ripsrank 0.1.0";

// Sidecar record of a CLI run: the command, every resolved parameter, tool
// version, and wall-clock duration.  Feeding the same parameters back into
// the tool reproduces the primary output byte-for-byte (duration aside).
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params; // insertion order
    std::string version = kToolVersion;
    double duration_seconds = 0.0;

    void set(const std::string& key, const std::string& value);
    const std::string* find(const std::string& key) const;
};

void write_manifest(const RunManifest& m, std::ostream& out);
RunManifest read_manifest(std::istream& in);

// FNV-1a over a file's bytes; used to key the ground-truth cache.
std::uint64_t file_fingerprint(const std::string& path);

} // namespace ripsrank
