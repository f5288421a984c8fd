#include "resnet/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "resnet/errors.hpp"

namespace resnet {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

unsigned long long parse_id(std::string_view token, std::size_t line) {
  if (token.empty() || token.size() > 18) throw ParseError(line, "bad vertex id '" + std::string(token) + "'");
  unsigned long long value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') throw ParseError(line, "bad vertex id '" + std::string(token) + "'");
    value = value * 10 + static_cast<unsigned long long>(c - '0');
  }
  return value;
}

struct RawEdge {
  unsigned long long u, v;
  Rational r;
  bool gadget;
  std::size_t line;
};

}  // namespace

ResistorNetwork parse_network(std::string_view text) {
  std::map<unsigned long long, std::optional<std::string>> vertices;
  std::map<unsigned long long, std::size_t> declared_at;
  std::vector<RawEdge> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_tokens(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (tok[0] == "vertex") {
      if (tok.size() < 2 || tok.size() > 3) {
        throw ParseError(line_no, "expected 'vertex <id> [label]'");
      }
      auto id = parse_id(tok[1], line_no);
      if (declared_at.count(id)) {
        throw ParseError(line_no, "duplicate vertex declaration for id " + std::to_string(id) +
                                      " (first on line " + std::to_string(declared_at[id]) + ")");
      }
      declared_at[id] = line_no;
      std::optional<std::string> label;
      if (tok.size() == 3) label = std::string(tok[2]);
      vertices[id] = label;
    } else {
      if (tok.size() < 3 || tok.size() > 4) {
        throw ParseError(line_no, "expected 'u v r [gadget]'");
      }
      bool gadget = false;
      if (tok.size() == 4) {
        if (tok[3] != "gadget") throw ParseError(line_no, "unknown flag '" + std::string(tok[3]) + "'");
        gadget = true;
      }
      auto u = parse_id(tok[0], line_no);
      auto v = parse_id(tok[1], line_no);
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      Rational r;
      try {
        r = parse_rational(tok[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, std::string("bad resistance: ") + e.what());
      }
      if (r == 0) throw ParseError(line_no, "zero resistance");
      if (r < 0 && !gadget) throw ParseError(line_no, "negative resistance requires the gadget flag");
      vertices.try_emplace(u);
      vertices.try_emplace(v);
      raw.push_back(RawEdge{u, v, std::move(r), gadget, line_no});
    }
    if (end == text.size()) break;
  }

  ResistorNetwork net;
  std::map<unsigned long long, VertexId> canonical;
  for (const auto& [id, label] : vertices) {
    try {
      canonical[id] = net.add_vertex(label.value_or(std::to_string(id)));
    } catch (const MalformedNetwork& e) {
      auto it = declared_at.find(id);
      throw ParseError(it == declared_at.end() ? 0 : it->second, e.what());
    }
  }
  for (const auto& e : raw) {
    net.add_edge(canonical.at(e.u), canonical.at(e.v), e.r, e.gadget);
  }
  return net;
}

ResistorNetwork parse_network(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_network(buffer.str());
}

ResistorNetwork read_network_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_network(in);
}

std::string render_network(const ResistorNetwork& net) {
  std::ostringstream out;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (net.label(v) != std::to_string(v) || net.degree(v) == 0) {
      out << "vertex " << v << ' ' << net.label(v) << '\n';
    }
  }
  for (const auto& e : net.edges()) {
    out << e.u << ' ' << e.v << ' ' << to_string(e.r);
    if (e.gadget) out << " gadget";
    out << '\n';
  }
  return out.str();
}

}  // namespace resnet
