#pragma once

// Minimal subprocess capture for driving the CLI binary from tests.

#include <cstdio>
#include <string>
#include <vector>

struct CliResult {
    int code = -1;
    std::string out;
};

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'') q += "'\\''";
        else q += c;
    }
    return q + "'";
}

inline CliResult run_cli(const std::string& binary, const std::vector<std::string>& args) {
    std::string cmd = shell_quote(binary);
    for (const std::string& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = status >= 0 ? WEXITSTATUS(status) : -1;
    return r;
}
