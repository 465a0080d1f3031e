// Deterministic JSON artifact manifest for a constructed triorthogonal
// matrix: hex payloads, a content digest over all preceding fields, and a
// byte-identical save/load roundtrip. An optional gzip container keeps
// full-scale artifacts manageable on disk.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agdistill/triortho.hpp"

namespace agd {

struct ArtifactManifest {
  unsigned format_version = 1;
  unsigned field_s = 0;
  std::string field_modulus;          // hex mask of the modulus polynomial
  std::vector<std::string> basis;     // s self-dual basis elements, hex
  std::string curve;                  // descriptor string
  unsigned a = 0;
  unsigned k = 0;
  unsigned t = 0;
  unsigned degA1 = 0;
  std::vector<std::uint32_t> place_permutation;  // kept place ids, col order
  std::vector<std::uint32_t> col_perm;           // empty = identity
  std::vector<std::string> w;      // N elements, hex
  std::vector<std::string> sigma;  // n elements, hex
  std::vector<std::string> tau;    // k elements, hex
  std::vector<std::string> rows;   // m strings, n concatenated hex elements
  std::uint64_t seed = 0;
  std::string digest;  // 64-bit FNV-1a of the serialization above, hex
};

// Captures the construction plus the decoder parameters chosen for it. The
// self-dual basis defaults to the published s=10 basis when applicable and
// to a seed-derived one otherwise.
ArtifactManifest make_manifest(const ConstructedCode& code, unsigned t,
                               unsigned degA1);

// Canonical serialization (digest recomputed); parse verifies the digest
// and re-serializes byte-identically.
std::string manifest_to_json(const ArtifactManifest& man);
ArtifactManifest manifest_from_json(const std::string& text);

// gzip=true writes a gzip stream; load auto-detects by magic bytes.
void save_manifest(const ArtifactManifest& man, const std::string& path,
                   bool gzip = false);
ArtifactManifest load_manifest(const std::string& path);

// Rebuilds the in-memory construction (field, curve, places, matrix) from a
// manifest, suitable for build_decoder / simulate.
ConstructedCode restore_code(const ArtifactManifest& man);

}  // namespace agd
