#pragma once

// popen-based driver for the installed-style CLI binary. The binary path is
// injected at compile time (GWZERO_CLI_PATH); stderr is folded into stdout
// so diagnostics are assertable.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace clitest {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline CliResult run_cmd(const std::string& full_command) {
    CliResult r;
    FILE* pipe = ::popen((full_command + " 2>&1").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

inline CliResult run_cli(const std::string& args) {
    return run_cmd(std::string(GWZERO_CLI_PATH) + " " + args);
}

inline std::string manifest_path(const std::string& file) {
    return std::string(GWZERO_MANIFEST_DIR) + "/" + file;
}

// Writes content to a unique temp file and returns its path; the caller
// removes it (or leaves it for the OS -- the directory is tmpfs).
inline std::string write_temp(const std::string& stem, const std::string& content) {
    const auto path =
        std::filesystem::temp_directory_path() / (stem + "-" + std::to_string(::getpid()) + ".json");
    std::ofstream out(path);
    out << content;
    return path.string();
}

}  // namespace clitest
