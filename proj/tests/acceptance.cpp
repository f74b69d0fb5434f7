// Acceptance suite: runs every verification criterion exactly and prints one
// pass/fail line per criterion. Exit code is the number of failed criteria.
#include <iostream>

#include "spinflux/scenarios.hpp"

int main() {
  using spinflux::Claim;
  auto reports = spinflux::verify_all();
  int failed = 0;
  long total_ms = 0;
  for (const auto& r : reports) {
    bool ok = r.all_passed();
    if (!ok) ++failed;
    total_ms += r.timing_ms;
    std::cout << "[" << (ok ? "PASS" : "FAIL") << "] " << r.name << " (" << r.timing_ms
              << " ms)\n";
    for (const auto& c : r.claims) {
      if (ok && c.status != Claim::Status::note) continue;
      const char* tag = c.status == Claim::Status::pass ? "PASS"
                        : c.status == Claim::Status::fail ? "FAIL"
                                                          : "NOTE";
      std::cout << "    [" << tag << "] " << c.anchor << ": " << c.text;
      if (c.status == Claim::Status::note) {
        if (!c.computed.empty()) std::cout << " -- " << c.computed;
      } else {
        std::cout << ": expected " << c.expected << " computed " << c.computed;
      }
      std::cout << "\n";
    }
  }
  std::cout << reports.size() - failed << "/" << reports.size() << " criteria passed in "
            << total_ms << " ms\n";
  return failed;
}
