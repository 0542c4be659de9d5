#include "unisynt/common.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace unisynt {

Props make_props(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

bool props_contains(const Props& ps, const std::string& name) {
  return std::binary_search(ps.begin(), ps.end(), name);
}

Props props_union(const Props& a, const Props& b) {
  Props out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string props_format(const Props& ps) {
  if (ps.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += ps[i];
  }
  return out;
}

std::vector<Line> tokenize_lines(const std::string& text) {
  std::vector<Line> out;
  std::stringstream ss(text);
  std::string raw;
  int number = 0;
  while (std::getline(ss, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::stringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnisyntError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UnisyntError("cannot write file: " + path);
  out << content;
  if (!out) throw UnisyntError("write failed: " + path);
}

Props props_parse(const std::string& text) {
  if (text == "-" || text.empty()) return {};
  std::vector<std::string> names;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) names.push_back(item);
  }
  return make_props(std::move(names));
}

}  // namespace unisynt
