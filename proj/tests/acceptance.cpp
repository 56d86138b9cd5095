// One line per acceptance criterion; exit status 1 if any fails.
#include "trialis/verify.hpp"

#include <cstdio>
#include <iostream>

int main() {
    int failed = 0;
    for (int id = 1; id <= trialis::criterion_count; ++id) {
        const auto r = trialis::run_criterion(id, TRIALIS_GOLDEN_DIR);
        char t[32];
        std::snprintf(t, sizeof t, "%.2fs", r.seconds);
        std::cout << "criterion " << id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  (" << t << ")\n";
        for (const auto& f : r.failures) std::cout << "    failed: " << f << "\n";
        for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
        std::cout.flush();
        if (!r.pass) ++failed;
    }
    std::cout << (trialis::criterion_count - failed) << "/" << trialis::criterion_count << " criteria pass\n";
    return failed ? 1 : 0;
}
