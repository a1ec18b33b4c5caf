#include <cstdio>
#include <string>

#include "acceptance.hpp"

// One line per acceptance criterion; exit status 1 when any criterion fails.
int main(int argc, char** argv)
{
    bool all = true;
    for (auto& s : qtl::acceptance::suites()) {
        if (argc > 1 && std::string(argv[1]) != s.name && std::string(argv[1]) != std::to_string(s.id)) continue;
        auto r = qtl::acceptance::run(s);
        all &= r.pass;
        std::printf("criterion %2d %-16s %s  %.2fs  %s\n", r.id, s.name.c_str(), r.pass ? "PASS" : "FAIL", r.seconds,
                    qtl::acceptance::to_json(r)["detail"].dump().c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
