#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "treecentral/tree.hpp"

namespace treecentral {

/// Parse failure with the 1-based line it was detected on (0 when the input ended early).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Reads "n" followed by n-1 lines "u v" (0-based). Blank lines and lines
/// starting with '#' are skipped. Non-tree inputs raise ParseError.
Tree read_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);

/// Writes the format read_edge_list accepts, edges ascending with u < v.
void write_edge_list(std::ostream& out, const Tree& t);

}  // namespace treecentral
