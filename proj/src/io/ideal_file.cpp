#include "nagata/io/ideal_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace nagata {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

std::string keyword(const std::string& line, std::size_t& rest) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  std::size_t start = i;
  while (i < line.size() && std::isalpha(static_cast<unsigned char>(line[i]))) ++i;
  rest = i;
  // "vars" followed by a letter would be a generator such as "varsx^2"; require a break
  if (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) return "";
  return line.substr(start, i - start);
}

}  // namespace

IdealFile parse_ideal_text(std::string_view text) {
  IdealFile f;
  bool have_field = false, have_vars = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw.substr(0, raw.find('#'));
    if (!s.empty() && s.back() == '\r') s.pop_back();
    if (s.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t rest = 0;
    std::string kw = keyword(s, rest);
    if (kw == "field") {
      if (have_field) throw ParseError("field declared twice", line, 1);
      if (have_vars || !f.generators.empty()) throw ParseError("field must come before vars and generators", line, 1);
      try {
        f.field = FieldSpec::parse(s.substr(rest));
      } catch (const std::exception& e) {
        throw ParseError(e.what(), line, static_cast<int>(rest) + 1);
      }
      have_field = true;
    } else if (kw == "vars") {
      if (have_vars) throw ParseError("vars declared twice", line, 1);
      std::istringstream ws(s.substr(rest));
      std::set<std::string> seen;
      std::string name;
      while (ws >> name) {
        int col = static_cast<int>(rest + s.substr(rest).find(name)) + 1;
        if (!valid_name(name)) throw ParseError("invalid variable name '" + name + "'", line, col);
        if (!seen.insert(name).second) throw ParseError("variable '" + name + "' declared twice", line, col);
        f.vars.push_back(name);
      }
      if (f.vars.empty()) throw ParseError("vars needs at least one name", line, static_cast<int>(rest) + 1);
      have_vars = true;
    } else {
      if (!have_vars) throw ParseError("generator before the vars line", line, 1);
      f.generators.push_back(s);
      f.generator_lines.push_back(line);
    }
  }
  if (!have_vars) throw ParseError("missing vars line", line + 1, 1);
  return f;
}

void validate_ideal_file(const IdealFile& f) {
  visit_field(f.field, [&](const auto& K) { to_presentation(f, K); });
}

IdealFile parse_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto f = parse_ideal_text(buf.str());
  validate_ideal_file(f);
  return f;
}

std::string format_ideal_file(const IdealFile& f, const std::string& comment) {
  std::string s;
  if (!comment.empty()) {
    std::istringstream in(comment);
    std::string l;
    while (std::getline(in, l)) s += "# " + l + "\n";
  }
  s += "field " + f.field.to_string() + "\nvars";
  for (const auto& v : f.vars) s += " " + v;
  s += "\n";
  for (const auto& g : f.generators) s += g + "\n";
  return s;
}

}  // namespace nagata
