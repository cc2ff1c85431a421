// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lpbaire/config.hpp"

namespace lpbaire {

// FNV-1a over bytes; used for manifest self-digests and output-file digests.
uint64_t fnv1a64(std::string_view bytes);
std::string hex64(uint64_t v);
std::string file_digest(const std::string& path);

// One per CLI run.  Everything except `wall_ms` participates in the
// determinism digest, so reruns with the same inputs produce manifests that
// are byte-identical once the timing fields are stripped.
struct RunManifest {
    std::string command;
    Json config;   // config snapshot
    Json params;   // subcommand parameters (schedule, derived constants, caps)
    Json outputs;  // inline results and {path, digest} entries for files
    double wall_ms = 0;

    void add_output_file(const std::string& key, const std::string& path);
    std::string digest() const;  // hex FNV-1a of the deterministic fields
    Json json() const;
};

}  // namespace lpbaire
