#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vortexlab/field.hpp"

namespace vortexlab {

/// Flat binary blob for grid fields: 8-byte header (n as little-endian u32,
/// degree as little-endian i32) followed by row-major (re, im) doubles.
std::vector<std::uint8_t> field_to_blob(const TwistedField& f);
TwistedField field_from_blob(const std::vector<std::uint8_t>& blob);

/// Real scalar fields ride in the same container with degree 0 and zero
/// imaginary parts.
std::vector<std::uint8_t> real_field_to_blob(int n, const std::vector<double>& f);
std::vector<double> real_field_from_blob(const std::vector<std::uint8_t>& blob, int& n);

std::string base64_encode(const std::vector<std::uint8_t>& data);
std::vector<std::uint8_t> base64_decode(const std::string& text);

/// FNV-1a content hash used for artifact manifests.
std::uint64_t fnv1a64(const void* data, size_t size);
std::string hash_hex(const std::string& text);

/// JSON wrapper of a field blob, recording norm and provenance.
std::string field_to_json(const TwistedField& f, const std::string& provenance);
TwistedField field_from_json(const std::string& json_text);

/// Fixed-format float rendering (shortest round-trip), deterministic.
std::string format_double(double v);

}  // namespace vortexlab
