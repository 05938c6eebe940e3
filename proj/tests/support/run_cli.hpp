#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace testsupport {

struct CliResult {
    int exit_code = -1;
    std::string out;  // stdout only
};

inline std::string cli_binary() {
    const char* path = std::getenv("RADSPEC_CLI");
    if (!path || !*path)
        throw std::runtime_error("RADSPEC_CLI is not set; run through ctest or export it");
    return path;
}

inline CliResult run_cli(const std::string& args) {
    const std::string cmd = cli_binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult res;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace testsupport
