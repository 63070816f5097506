#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latcc/layered_code.hpp"

namespace latcc {

enum class CodeFileMode { list, gen };

// Text description of a layered code: '#' comment lines, then `n=<int>
// L=<int>`, then `mode=list|gen`, then one bitstring of length n*L per line.
// list mode must spell out the complete codeword set; gen mode rows may be
// dependent.
struct CodeFile {
  int n = 0;
  int levels = 0;
  CodeFileMode mode = CodeFileMode::gen;
  std::vector<BitWord> words;
};

CodeFile parse_code_file(std::istream& in);
CodeFile parse_code_file_text(const std::string& text);
CodeFile load_code_file(const std::string& path);

// list mode validates span equality and rejects a non-code list naming an
// XOR of listed words that the list lacks.
LayeredCode to_layered_code(const CodeFile& f);

// Embedded codes so the stock examples need no external files:
// ex1, ex2, ex5 (tiny jointly coded examples), leech, golay24.
LayeredCode builtin_code(const std::string& name);
const std::vector<std::string>& builtin_names();

}  // namespace latcc
