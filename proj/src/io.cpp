#include "wfloer/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace wfloer {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const std::string& s, int line, const std::string& what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) throw ParseError(line, "bad integer for " + what + ": '" + s + "'");
  return v;
}

bool valid_id(const std::string& s) {
  if (s.empty() || s == "-") return false;
  for (char c : s)
    if (c == ',' || c == '=' || c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::map<std::string, std::string> fields(const std::vector<std::string>& tok, std::size_t from, int line,
                                          const std::set<std::string>& allowed) {
  std::map<std::string, std::string> out;
  for (std::size_t k = from; k < tok.size(); ++k) {
    auto eq = tok[k].find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + tok[k] + "'");
    std::string key = tok[k].substr(0, eq), val = tok[k].substr(eq + 1);
    if (!allowed.count(key)) throw ParseError(line, "unknown field '" + key + "'");
    if (!out.emplace(key, val).second) throw ParseError(line, "duplicate field '" + key + "'");
  }
  return out;
}

const std::string& require(const std::map<std::string, std::string>& f, const std::string& key, int line) {
  auto it = f.find(key);
  if (it == f.end()) throw ParseError(line, "missing field '" + key + "'");
  return it->second;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k];
  return s;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  if (text.empty() || text == "-") return {};
  std::vector<int> out;
  for (const auto& s : split(text, ',')) out.push_back(to_int(s, 0, "list"));
  return out;
}

Document parse_document(const std::string& text) {
  Document doc;
  bool seen_field = false, seen_data = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    if (kind == "field") {
      if (seen_field || seen_data) throw ParseError(line, "field must come first and only once");
      if (tok.size() != 2) throw ParseError(line, "expected 'field Q' or 'field <prime>'");
      if (tok[1] == "Q") {
        doc.field = Field::rationals();
      } else {
        int p = to_int(tok[1], line, "field");
        if (p < 2) throw ParseError(line, "field characteristic must be a prime");
        try {
          doc.field = Field::prime(static_cast<std::uint32_t>(p));
        } catch (const std::exception& e) {
          throw ParseError(line, e.what());
        }
      }
      doc.table.field = doc.field;
      seen_field = true;
    } else if (kind == "chord") {
      seen_data = true;
      if (tok.size() < 2 || !valid_id(tok[1])) throw ParseError(line, "chord needs an id");
      auto f = fields(tok, 2, line, {"weight", "degree", "action", "from", "to", "winding", "location"});
      Chord c;
      c.id = tok[1];
      c.weight = to_int(require(f, "weight", line), line, "weight");
      if (c.weight < 1) throw ParseError(line, "weight must be positive");
      c.degree = to_int(require(f, "degree", line), line, "degree");
      if (auto it = f.find("action"); it != f.end()) {
        try {
          c.action = Scalar::parse(it->second, Field::rationals()).value();
        } catch (const std::exception& e) {
          throw ParseError(line, "bad action '" + it->second + "'");
        }
      }
      if (auto it = f.find("from"); it != f.end()) c.from = it->second;
      if (auto it = f.find("to"); it != f.end()) c.to = it->second;
      if (auto it = f.find("winding"); it != f.end()) c.winding = to_int(it->second, line, "winding");
      if (auto it = f.find("location"); it != f.end()) {
        if (it->second == "inside") c.location = Location::inside;
        else if (it->second == "outside") c.location = Location::outside;
        else throw ParseError(line, "location must be inside or outside");
      }
      if (doc.chords.find(c.id)) throw ParseError(line, "duplicate chord " + c.id);
      doc.chords.add(std::move(c));
    } else if (kind == "const") {
      seen_data = true;
      auto f = fields(tok, 1, line, {"d", "F", "w", "in", "out", "value"});
      ConstantKey key;
      key.d = to_int(require(f, "d", line), line, "d");
      const auto& Fs = require(f, "F", line);
      if (Fs != "-")
        for (const auto& s : split(Fs, ',')) key.F.push_back(to_int(s, line, "F"));
      for (const auto& s : split(require(f, "w", line), ',')) key.weights.push_back(to_int(s, line, "w"));
      for (const auto& s : split(require(f, "in", line), ',')) {
        if (!valid_id(s)) throw ParseError(line, "bad input id '" + s + "'");
        key.inputs.push_back(s);
      }
      key.output = require(f, "out", line);
      if (!valid_id(key.output)) throw ParseError(line, "bad output id");
      Scalar v;
      try {
        v = Scalar::parse(require(f, "value", line), doc.field);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(line, std::string("bad value: ") + e.what());
      }
      if (doc.table.entries.count(key)) throw ParseError(line, "duplicate constant " + key.to_string());
      doc.table.entries.emplace(key, v);
    } else if (kind == "empty") {
      seen_data = true;
      if (tok.size() != 2 || !valid_id(tok[1])) throw ParseError(line, "expected 'empty <id>'");
      if (!doc.formal_points.insert(tok[1]).second) throw ParseError(line, "duplicate formal point " + tok[1]);
    } else {
      throw ParseError(line, "unknown record '" + kind + "'");
    }
  }
  return doc;
}

Document read_document(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_document(ss.str());
}

std::string serialize(const Document& doc) {
  std::ostringstream os;
  os << "field " << (doc.field.is_rational() ? std::string("Q") : std::to_string(doc.field.characteristic())) << "\n";
  for (const auto& c : doc.chords.chords()) {
    os << "chord " << c.id << " weight=" << c.weight << " degree=" << c.degree;
    if (c.action) os << " action=" << c.action->get_str();
    if (c.from) os << " from=" << *c.from;
    if (c.to) os << " to=" << *c.to;
    if (c.winding) os << " winding=" << *c.winding;
    if (c.location) os << " location=" << (*c.location == Location::inside ? "inside" : "outside");
    os << "\n";
  }
  for (const auto& [k, v] : doc.table.entries) {
    os << "const d=" << k.d << " F=" << (k.F.empty() ? std::string("-") : join(k.F)) << " w=" << join(k.weights)
       << " in=" << join(k.inputs) << " out=" << k.output << " value=" << v.to_string() << "\n";
  }
  for (const auto& id : doc.formal_points) os << "empty " << id << "\n";
  return os.str();
}

bool same_document(const Document& a, const Document& b) {
  if (!(a.field == b.field) || a.formal_points != b.formal_points || a.chords.size() != b.chords.size()) return false;
  for (std::size_t k = 0; k < a.chords.size(); ++k) {
    const auto &x = a.chords[k], &y = b.chords[k];
    if (x.id != y.id || x.weight != y.weight || x.degree != y.degree || x.action != y.action || x.from != y.from ||
        x.to != y.to || x.winding != y.winding || x.location != y.location)
      return false;
  }
  return a.table.entries == b.table.entries;
}

}  // namespace wfloer
