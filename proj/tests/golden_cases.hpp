#pragma once

// Golden-file CLI cases: each tests/golden/<name>.golden holds
//   args: <arguments>
//   exit: <code>
//   --- stdout
//   <bytes>
//   --- stderr
//   <bytes>

#include "xbinom/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

struct Case {
    std::string name;
    std::vector<std::string> args;
    int exit_code = 0;
    std::string out;
    std::string err;
};

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline std::vector<std::string> split_words(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;) {
        words.push_back(w);
    }
    return words;
}

inline Case read_case(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto bad = [&](const char* what) {
        return std::runtime_error(path.string() + ": " + what);
    };

    Case c;
    c.name = path.stem().string();
    std::size_t end = text.find('\n');
    if (end == std::string::npos || text.rfind("args:", 0) != 0) {
        throw bad("missing args line");
    }
    c.args = split_words(text.substr(5, end - 5));

    std::size_t pos = end + 1;
    end = text.find('\n', pos);
    if (end == std::string::npos || text.compare(pos, 6, "exit: ") != 0) {
        throw bad("missing exit line");
    }
    c.exit_code = std::stoi(text.substr(pos + 6, end - pos - 6));

    const std::string out_marker = "--- stdout\n";
    const std::string err_marker = "--- stderr\n";
    pos = end + 1;
    if (text.compare(pos, out_marker.size(), out_marker) != 0) {
        throw bad("missing stdout marker");
    }
    const std::size_t out_begin = pos + out_marker.size();
    const std::size_t err_at = text.rfind(err_marker);
    if (err_at == std::string::npos || err_at < out_begin) {
        throw bad("missing stderr marker");
    }
    c.out = text.substr(out_begin, err_at - out_begin);
    c.err = text.substr(err_at + err_marker.size());
    return c;
}

inline std::vector<Case> load_all(const std::filesystem::path& dir)
{
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".golden") {
            paths.push_back(entry.path());
        }
    }
    std::sort(paths.begin(), paths.end());
    std::vector<Case> out;
    for (const auto& p : paths) {
        out.push_back(read_case(p));
    }
    return out;
}

inline RunResult run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = xbinom::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

inline bool matches(const Case& c, const RunResult& r)
{
    return r.exit_code == c.exit_code && r.out == c.out && r.err == c.err;
}

inline std::string format_of(const std::vector<std::string>& args)
{
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] == "--format") {
            return args[i + 1];
        }
    }
    return "text";
}

}  // namespace golden
