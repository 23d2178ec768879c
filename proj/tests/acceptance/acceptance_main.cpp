#include "slevir/suite/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

// Runs every acceptance criterion (or the ids given as arguments) and prints one line each.
int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    bool all = true;
    std::vector<int> which = ids;
    if (which.empty())
        for (int i = 1; i <= slevir::criterion_count(); ++i) which.push_back(i);
    for (int id : which) {
        auto r = slevir::run_criterion(id);
        std::cout << slevir::format_line(r) << std::endl;
        all = all && r.pass;
    }
    std::cout << (all ? "ALL PASS" : "SOME FAILED") << std::endl;
    return all ? 0 : 1;
}
