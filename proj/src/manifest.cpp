// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/manifest.hpp"

#include <fstream>
#include <sstream>

#include "lpbaire/errors.hpp"

namespace lpbaire {

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<size_t>(i)] = digits[v & 0xf];
    return s;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path + " for digesting");
    std::ostringstream buf;
    buf << in.rdbuf();
    return hex64(fnv1a64(buf.str()));
}

void RunManifest::add_output_file(const std::string& key, const std::string& path) {
    outputs[key] = Json{{"path", path}, {"digest", file_digest(path)}};
}

std::string RunManifest::digest() const {
    Json core{{"command", command}, {"config", config}, {"params", params}, {"outputs", outputs}};
    return hex64(fnv1a64(core.dump()));
}

Json RunManifest::json() const {
    return Json{{"command", command},
                {"config", config},
                {"params", params},
                {"outputs", outputs},
                {"digest", digest()},
                {"wall_ms", wall_ms}};
}

}  // namespace lpbaire
