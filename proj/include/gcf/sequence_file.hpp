#ifndef GCF_SEQUENCE_FILE_HPP
#define GCF_SEQUENCE_FILE_HPP

#include <string>
#include <vector>

#include "gcf/exact.hpp"

namespace gcf {

// One exact decimal integer per line, optional '-' sign; lines starting
// with '#' are comments; blank lines carry no meaning. Throws IoError when
// the file cannot be opened and ParseError (with a 1-based line number) on
// malformed content.
std::vector<ExactInt> read_sequence_file(const std::string& path);

}  // namespace gcf

#endif
