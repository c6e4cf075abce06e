#include "ripsrank/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace ripsrank {

void RunManifest::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : params)
        if (k == key) {
            v = value;
            return;
        }
    params.emplace_back(key, value);
}

const std::string* RunManifest::find(const std::string& key) const {
    for (const auto& [k, v] : params)
        if (k == key) return &v;
    return nullptr;
}

void write_manifest(const RunManifest& m, std::ostream& out) {
    out << "command: " << m.command << '\n';
    out << "version: " << m.version << '\n';
    for (const auto& [k, v] : m.params) out << k << ": " << v << '\n';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", m.duration_seconds);
    out << "duration_seconds: " << buf << '\n';
}

RunManifest read_manifest(std::istream& in) {
    RunManifest m;
    m.version.clear();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto colon = line.find(": ");
        if (colon == std::string::npos)
            throw std::runtime_error("manifest: malformed line '" + line + "'");
        const std::string key = line.substr(0, colon);
        const std::string value = line.substr(colon + 2);
        if (key == "command")
            m.command = value;
        else if (key == "version")
            m.version = value;
        else if (key == "duration_seconds")
            m.duration_seconds = std::stod(value);
        else
            m.params.emplace_back(key, value);
    }
    return m;
}

std::uint64_t file_fingerprint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for fingerprint: " + path);
    std::uint64_t h = 0xcbf29ce484222325ull; // FNV-1a
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ull;
        }
    }
    return h;
}

} // namespace ripsrank
