#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {
struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(VLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WEXITSTATUS(status);
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("census table matches the committed golden file byte-for-byte") {
  const RunResult r = run_cli("census table");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(std::string(VLAB_GOLDEN_DIR) + "/census_table.csv"));
}

TEST_CASE("census single query json") {
  const RunResult r = run_cli("census --genus 1 --d 0 --sign -1");
  CHECK(r.code == 0);
  CHECK(r.out.find("points(2)") != std::string::npos);
  CHECK(r.out.find("\"sw\": 2") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
  const RunResult a = run_cli("dolbeault h0 --degree 1 --class 0.3,0.7 --n 16 --json");
  const RunResult b = run_cli("dolbeault h0 --degree 1 --class 0.3,0.7 --n 16 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"h0\": 1") != std::string::npos);
}

TEST_CASE("vortex hk on a missing triple exits 2") {
  const RunResult r = run_cli("vortex hk --tau 0 --triple missing.json");
  CHECK(r.code == 2);
}

TEST_CASE("unknown repro name exits 2") {
  const RunResult r = run_cli("repro no-such-criterion");
  CHECK(r.code == 2);
}

TEST_CASE("repro fueter-index passes quickly") {
  const RunResult r = run_cli("repro fueter-index");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("kw solve end to end through JSON blobs") {
  // build a tiny problem file via the library's own blob format
  const RunResult gen = run_cli("repro census-table");  // warm binary check
  (void)gen;
  const std::string dir = "/tmp/vlab_cli_test";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  // P = Q = 1, w = 0 at n = 16: solution f = 0
  // blob: header (16, 0) + 256 complex doubles
  auto write_blob_b64 = [&](double value) {
    std::string b64;
    std::vector<unsigned char> blob;
    auto put32 = [&](unsigned v) {
      for (int k = 0; k < 4; ++k) blob.push_back((v >> (8 * k)) & 0xFF);
    };
    put32(16);
    put32(0);
    for (int k = 0; k < 256; ++k) {
      unsigned long long bits;
      double re = value, im = 0.0;
      static_assert(sizeof bits == sizeof re);
      __builtin_memcpy(&bits, &re, 8);
      for (int b = 0; b < 8; ++b) blob.push_back((bits >> (8 * b)) & 0xFF);
      __builtin_memcpy(&bits, &im, 8);
      for (int b = 0; b < 8; ++b) blob.push_back((bits >> (8 * b)) & 0xFF);
    }
    static const char* tab =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    size_t i = 0;
    while (i + 2 < blob.size()) {
      unsigned v = blob[i] << 16 | blob[i + 1] << 8 | blob[i + 2];
      b64 += tab[v >> 18];
      b64 += tab[(v >> 12) & 63];
      b64 += tab[(v >> 6) & 63];
      b64 += tab[v & 63];
      i += 3;
    }
    if (i + 1 == blob.size()) {
      unsigned v = blob[i] << 16;
      b64 += tab[v >> 18];
      b64 += tab[(v >> 12) & 63];
      b64 += "==";
    } else if (i + 2 == blob.size()) {
      unsigned v = blob[i] << 16 | blob[i + 1] << 8;
      b64 += tab[v >> 18];
      b64 += tab[(v >> 12) & 63];
      b64 += tab[(v >> 6) & 63];
      b64 += '=';
    }
    return b64;
  };
  std::ofstream pf(dir + "/problem.json");
  pf << "{\"n\":16,\"case\":\"remark\",\"P\":\"" << write_blob_b64(1.0) << "\",\"Q\":\""
     << write_blob_b64(1.0) << "\",\"w\":\"" << write_blob_b64(0.0) << "\"}";
  pf.close();
  const RunResult r = run_cli("kw solve --problem " + dir + "/problem.json --tol 1e-10 --out " +
                              dir + "/solution.json");
  CHECK(r.code == 0);
  const std::string sol = slurp(dir + "/solution.json");
  CHECK(sol.find("\"newton_iters\"") != std::string::npos);
  // manifest is written beside the artifact and carries the wall time
  const std::string mani = slurp(dir + "/solution.json.manifest.json");
  CHECK(mani.find("wall_time_seconds") != std::string::npos);
}

TEST_CASE("vortex hk end to end on the constructive triple") {
  const std::string dir = "/tmp/vlab_cli_test";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  std::ofstream tf(dir + "/triple.json");
  tf << R"({"n":32,"m":1,"d":0,
        "alpha_zeros":[[[0.25,0.25]],[]],
        "beta_zeros":[[],[[0.75,0.75]]]})";
  tf.close();
  const RunResult r = run_cli("vortex hk --triple " + dir +
                              "/triple.json --tau 0 --tol 1e-8 --out " + dir + "/state.json");
  CHECK(r.code == 0);
  const std::string state = slurp(dir + "/state.json");
  CHECK(state.find("degree_identity_defect") != std::string::npos);
  CHECK(state.find("residuals") != std::string::npos);
}

TEST_CASE("limit sweep CSV has the full column set") {
  const RunResult r =
      run_cli("limit sweep --m 1 --n 64 --t 1,0.5 --out -");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("t,zero_id,x,y,q,flux,exponent,kw_iters,residual\n", 0) == 0);
  // two zeros per t value
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 1 + 2 * 2);
}
