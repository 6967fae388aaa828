#include "gcf/sequence_file.hpp"

#include <fstream>
#include <stdexcept>

#include "gcf/errors.hpp"

namespace gcf {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<ExactInt> read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path);

    std::vector<ExactInt> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip(line);
        if (body.empty() || body[0] == '#') continue;
        try {
            out.emplace_back(body);
        } catch (const std::invalid_argument&) {
            throw ParseError(path, lineno, "not an integer: \"" + body + "\"");
        }
    }
    return out;
}

}  // namespace gcf
