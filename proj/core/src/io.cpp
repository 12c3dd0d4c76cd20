#include "vortexlab/io.hpp"

#include <cstring>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace vortexlab {

namespace {
void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(std::uint8_t(v >> (8 * k)));
}
void put_i32le(std::vector<std::uint8_t>& out, std::int32_t v) {
  put_u32le(out, std::uint32_t(v));
}
std::uint32_t get_u32le(const std::uint8_t* p) {
  return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 |
         std::uint32_t(p[3]) << 24;
}
void put_f64le(std::vector<std::uint8_t>& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  for (int k = 0; k < 8; ++k) out.push_back(std::uint8_t(bits >> (8 * k)));
}
double get_f64le(const std::uint8_t* p) {
  std::uint64_t bits = 0;
  for (int k = 0; k < 8; ++k) bits |= std::uint64_t(p[k]) << (8 * k);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}
constexpr char kB64[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
}  // namespace

std::vector<std::uint8_t> field_to_blob(const TwistedField& f) {
  std::vector<std::uint8_t> out;
  out.reserve(8 + f.v.size() * 16);
  put_u32le(out, std::uint32_t(f.n));
  put_i32le(out, f.degree);
  for (const cd& z : f.v) {
    put_f64le(out, z.real());
    put_f64le(out, z.imag());
  }
  return out;
}

TwistedField field_from_blob(const std::vector<std::uint8_t>& blob) {
  if (blob.size() < 8) throw std::invalid_argument("field blob: truncated header");
  const std::uint32_t n = get_u32le(blob.data());
  const std::int32_t degree = std::int32_t(get_u32le(blob.data() + 4));
  const size_t count = size_t(n) * n;
  if (blob.size() != 8 + count * 16) throw std::invalid_argument("field blob: wrong payload size");
  TwistedField f(int(n), degree);
  for (size_t k = 0; k < count; ++k)
    f.v[k] = cd(get_f64le(blob.data() + 8 + 16 * k), get_f64le(blob.data() + 16 + 16 * k));
  return f;
}

std::vector<std::uint8_t> real_field_to_blob(int n, const std::vector<double>& f) {
  TwistedField t(n, 0);
  for (size_t k = 0; k < f.size(); ++k) t.v[k] = f[k];
  return field_to_blob(t);
}

std::vector<double> real_field_from_blob(const std::vector<std::uint8_t>& blob, int& n) {
  const TwistedField t = field_from_blob(blob);
  n = t.n;
  std::vector<double> out(t.v.size());
  for (size_t k = 0; k < t.v.size(); ++k) out[k] = t.v[k].real();
  return out;
}

std::string base64_encode(const std::vector<std::uint8_t>& data) {
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  size_t i = 0;
  while (i + 2 < data.size()) {
    const std::uint32_t v = data[i] << 16 | data[i + 1] << 8 | data[i + 2];
    out.push_back(kB64[v >> 18]);
    out.push_back(kB64[(v >> 12) & 63]);
    out.push_back(kB64[(v >> 6) & 63]);
    out.push_back(kB64[v & 63]);
    i += 3;
  }
  if (i + 1 == data.size()) {
    const std::uint32_t v = data[i] << 16;
    out.push_back(kB64[v >> 18]);
    out.push_back(kB64[(v >> 12) & 63]);
    out += "==";
  } else if (i + 2 == data.size()) {
    const std::uint32_t v = data[i] << 16 | data[i + 1] << 8;
    out.push_back(kB64[v >> 18]);
    out.push_back(kB64[(v >> 12) & 63]);
    out.push_back(kB64[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  auto val = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    if (c == '=') return -1;
    throw std::invalid_argument("base64: bad character");
  };
  std::vector<std::uint8_t> out;
  std::uint32_t acc = 0;
  int bits = 0;
  for (char c : text) {
    const int v = val(c);
    if (v < 0) break;
    acc = acc << 6 | std::uint32_t(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(std::uint8_t(acc >> bits));
    }
  }
  return out;
}

std::uint64_t fnv1a64(const void* data, size_t size) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (size_t k = 0; k < size; ++k) {
    h ^= p[k];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hash_hex(const std::string& text) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(text.data(), text.size())));
  return buf;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string field_to_json(const TwistedField& f, const std::string& provenance) {
  nlohmann::json j;
  j["n"] = f.n;
  j["degree"] = f.degree;
  j["norm"] = f.l2_norm();
  j["provenance"] = provenance;
  j["blob_base64"] = base64_encode(field_to_blob(f));
  return j.dump(2);
}

TwistedField field_from_json(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  return field_from_blob(base64_decode(j.at("blob_base64").get<std::string>()));
}

}  // namespace vortexlab
