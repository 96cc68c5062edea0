// Acceptance suite: runs every verification claim at its pinned tolerance and
// prints one pass/fail line per criterion. Exit status 0 iff everything holds.
#include <cstdio>
#include <string>

#include "ck/claims.hpp"

int main(int argc, char** argv) {
  ck::RunConfig config;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--seed") config.seed = std::stoull(argv[i + 1]);
    if (flag == "--degree-cap") config.degree_cap = std::stoi(argv[i + 1]);
  }
  auto reports = ck::run_all_claims(config);
  bool all_pass = true;
  int index = 0;
  for (const auto& r : reports) {
    ++index;
    all_pass = all_pass && r.pass;
    std::printf("[%s] criterion-%02d %-24s (%.0f ms)%s%s\n", r.pass ? "PASS" : "FAIL", index,
                r.claim_id.c_str(), r.timing_ms, r.witness.empty() ? "" : " -- ",
                r.witness.c_str());
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria pass" : "acceptance: FAILURES");
  return all_pass ? 0 : 1;
}
