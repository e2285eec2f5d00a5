#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "oddtown/covers.hpp"
#include "oddtown/set_systems.hpp"

namespace oddtown {

// Malformed input. The message names the offending location: a line/column for syntax
// errors, a JSON pointer such as /families/1/3 for content errors.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SetFamily parse_family(std::string_view text);
TupleSystem parse_tuple(std::string_view text);
Mod2Cover parse_cover(std::string_view text);
GpCover parse_gp_cover(std::string_view text);
OkBicliqueCover parse_ok_biclique_cover(std::string_view text);

// Canonical text: fixed field order, one field per line, sorted elements, trailing newline.
std::string write_family(const SetFamily& family);
std::string write_tuple(const TupleSystem& tuple);
std::string write_cover(const Mod2Cover& cover);
std::string write_gp_cover(const GpCover& cover);
std::string write_ok_biclique_cover(const OkBicliqueCover& cover);
std::string write_report(const VerifyReport& report);

// Throws std::runtime_error when the file cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace oddtown
