#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "signed_spectra/canonical.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

/// Malformed text input; `line` and `column` are 1-based (0 when unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column = 0);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/**
 * sg1 text format:
 *
 *     sg1 <n> <m>
 *     <u> <v> <+|->      (m lines, 0-indexed, sorted)
 */
std::string to_sg1(const SignedGraph& g);
SignedGraph parse_sg1(std::string_view text);

std::string to_graph6(const SimpleGraph& g);
SimpleGraph parse_graph6(std::string_view text);

/// Underlying graph from graph6 plus one signature character per sorted edge ('-'/'1' negative, '+'/'0' positive).
SignedGraph from_graph6(std::string_view graph6, std::string_view signature);

/// One graph6 string per non-empty line; '>>graph6<<' headers are skipped.
std::vector<SimpleGraph> read_graph6_lines(std::istream& in);

}  // namespace signed_spectra
