#include "latcc/code_file.hpp"

#include <fstream>
#include <sstream>

#include "latcc/code_library.hpp"
#include "latcc/errors.hpp"
#include "latcc/leech.hpp"

namespace latcc {

namespace {

std::string trimmed(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

int parse_field(const std::string& token, const std::string& key, int line_no) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0)
    throw ParseError(line_no, "expected " + prefix + "<int>, got '" + token + "'");
  const std::string digits = token.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line_no, "bad integer in '" + token + "'");
  long v = 0;
  try {
    v = std::stol(digits);
  } catch (const std::exception&) {
    throw ParseError(line_no, "bad integer in '" + token + "'");
  }
  if (v <= 0) throw ParseError(line_no, key + " must be positive");
  return static_cast<int>(v);
}

}  // namespace

CodeFile parse_code_file(std::istream& in) {
  CodeFile f;
  enum { want_header, want_mode, want_words } state = want_header;
  std::string raw;
  int line_no = 0;
  int width = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    switch (state) {
      case want_header: {
        std::istringstream ss(line);
        std::string tn, tl, extra;
        ss >> tn >> tl;
        if (ss >> extra) throw ParseError(line_no, "trailing token '" + extra + "' in header");
        f.n = parse_field(tn, "n", line_no);
        f.levels = parse_field(tl, "L", line_no);
        if (f.levels > 62) throw ParseError(line_no, "L too large (max 62)");
        if (static_cast<long long>(f.n) * f.levels > 1'000'000)
          throw ParseError(line_no, "n*L too large (max 1000000)");
        width = f.n * f.levels;
        state = want_mode;
        break;
      }
      case want_mode: {
        if (line == "mode=list")
          f.mode = CodeFileMode::list;
        else if (line == "mode=gen")
          f.mode = CodeFileMode::gen;
        else
          throw ParseError(line_no, "expected mode=list or mode=gen, got '" + line + "'");
        state = want_words;
        break;
      }
      case want_words: {
        if (static_cast<int>(line.size()) != width)
          throw ParseError(line_no, "bitstring length " + std::to_string(line.size()) +
                                        ", expected " + std::to_string(width));
        if (line.find_first_not_of("01") != std::string::npos)
          throw ParseError(line_no, "bitstring may contain only 0 and 1");
        f.words.push_back(BitWord::parse(line));
        break;
      }
    }
  }
  if (state == want_header) throw ParseError(line_no, "missing 'n=<int> L=<int>' header");
  if (state == want_mode) throw ParseError(line_no, "missing 'mode=list|gen' line");
  if (f.mode == CodeFileMode::list && f.words.empty())
    throw ParseError(line_no, "list mode needs at least the zero word");
  return f;
}

CodeFile parse_code_file_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_code_file(ss);
}

CodeFile load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open code file: " + path);
  return parse_code_file(in);
}

LayeredCode to_layered_code(const CodeFile& f) {
  const int width = f.n * f.levels;
  LinearCode code = f.mode == CodeFileMode::list ? LinearCode::from_word_list(width, f.words)
                                                 : LinearCode(width, f.words);
  return LayeredCode(std::move(code), f.n, f.levels);
}

LayeredCode builtin_code(const std::string& name) {
  if (name == "ex1") {
    return to_layered_code(
        {2, 2, CodeFileMode::list,
         {BitWord::parse("0000"), BitWord::parse("1001"), BitWord::parse("1010"),
          BitWord::parse("0011")}});
  }
  if (name == "ex2") {
    return to_layered_code(
        {2, 2, CodeFileMode::list,
         {BitWord::parse("0000"), BitWord::parse("0010"), BitWord::parse("1001"),
          BitWord::parse("1011")}});
  }
  if (name == "ex5") {
    return to_layered_code(
        {2, 3, CodeFileMode::list,
         {BitWord::parse("000000"), BitWord::parse("101101"), BitWord::parse("001011"),
          BitWord::parse("100110"), BitWord::parse("000010"), BitWord::parse("001001"),
          BitWord::parse("100100"), BitWord::parse("101111")}});
  }
  if (name == "leech") return build_leech_layered_code();
  if (name == "golay24") return LayeredCode(golay24(), 24, 1);
  throw Error("unknown builtin code: " + name);
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"ex1", "ex2", "ex5", "leech", "golay24"};
  return names;
}

}  // namespace latcc
