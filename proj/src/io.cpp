#include "stanley/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace stanley {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename Int>
Int parse_integer(std::string_view s, std::string_view what) {
  s = trim(s);
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

// Index of a default variable name `x<i>`, or 0 when `name` has another shape.
std::size_t default_index(std::string_view name) {
  if (name.size() < 2 || name.front() != 'x') return 0;
  std::size_t i = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), i);
  if (ec != std::errc() || ptr != name.data() + name.size()) return 0;
  return i;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

}  // namespace

Monomial parse_monomial(const Ring& ring, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty monomial");
  Monomial m(ring.size());
  if (text == "1") return m;
  for (std::string_view factor : split(text, '*')) {
    factor = trim(factor);
    if (factor.empty()) throw ParseError("empty factor in monomial '" + std::string(text) + "'");
    std::string_view name = factor;
    Exponent e = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      name = trim(factor.substr(0, caret));
      e = parse_integer<Exponent>(factor.substr(caret + 1), "exponent");
    }
    const std::size_t i = ring.index_of(name);
    if (i == ring.size()) throw ParseError("unknown variable '" + std::string(name) + "'");
    m[i] = checked_add(m[i], e);
  }
  return m;
}

std::string format_monomial(const Ring& ring, const Monomial& m) {
  if (m.size() != ring.size()) throw RingMismatch("format_monomial: ring mismatch");
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_monomial(const Monomial& m) {
  if (m.size() == 0) return "1";
  return format_monomial(Ring(m.size()), m);
}

MonomialIdeal parse_ideal_text(std::string_view text) {
  std::size_t n = 0;
  bool have_header = false;
  std::vector<std::string_view> lines;
  for (std::string_view raw : split(text, '\n')) {
    std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.substr(0, 2) == "n=") {
      if (have_header || !lines.empty()) throw ParseError("the n= header must come first and only once");
      n = parse_integer<std::size_t>(line.substr(2), "ring size");
      if (n == 0 || n > kMaxVariables) throw ParseError("ring size must lie in 1..64");
      have_header = true;
      continue;
    }
    lines.push_back(line);
  }
  if (!have_header) {
    for (std::string_view line : lines) {
      for (std::string_view factor : split(line, '*')) {
        std::string_view name = trim(factor.substr(0, factor.find('^')));
        if (name == "1") continue;
        const std::size_t i = default_index(name);
        if (i == 0) throw ParseError("cannot infer ring size from variable '" + std::string(name) + "'");
        n = std::max(n, i);
      }
    }
    if (n == 0) throw ParseError("ideal text has no n= header and no variables");
  }
  const Ring ring(n);
  std::vector<Monomial> gens;
  for (std::string_view line : lines) gens.push_back(parse_monomial(ring, line));
  return MonomialIdeal(n, std::move(gens));
}

std::string format_ideal_text(const MonomialIdeal& ideal) {
  const Ring ring(ideal.ring_size());
  std::string out = "n=" + std::to_string(ideal.ring_size()) + "\n";
  for (const auto& g : ideal.generators()) out += format_monomial(ring, g) + "\n";
  return out;
}

Monomial monomial_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("exponent vector must be a JSON array");
  if (j.size() != n) {
    throw ParseError("exponent vector has length " + std::to_string(j.size()) + ", expected " + std::to_string(n));
  }
  std::vector<Exponent> e;
  e.reserve(n);
  for (const auto& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0)) {
      throw ParseError("exponents must be nonnegative integers");
    }
    const auto v = x.get<unsigned long long>();
    if (v > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large");
    e.push_back(static_cast<Exponent>(v));
  }
  return Monomial(std::move(e));
}

nlohmann::json monomial_to_json(const Monomial& m) {
  auto j = nlohmann::json::array();
  for (Exponent e : m.exponents()) j.push_back(e);
  return j;
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n")) throw ParseError("ideal JSON must be an object with an \"n\" field");
  const auto& nj = j.at("n");
  if (!nj.is_number_integer() || nj.get<long long>() < 1) throw ParseError("\"n\" must be a positive integer");
  const auto n = nj.get<std::size_t>();
  if (n > kMaxVariables) throw ParseError("at most 64 variables are supported");
  std::vector<Monomial> gens;
  if (j.contains("generators")) {
    const auto& g = j.at("generators");
    if (!g.is_array()) throw ParseError("\"generators\" must be an array");
    for (const auto& e : g) gens.push_back(monomial_from_json(e, n));
  }
  return MonomialIdeal(n, std::move(gens));
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json j;
  j["n"] = ideal.ring_size();
  auto gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) gens.push_back(monomial_to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

MonomialIdeal parse_ideal_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return ideal_from_json(j);
}

std::string format_ideal_json(const MonomialIdeal& ideal) { return ideal_to_json(ideal).dump(); }

MonomialIdeal parse_ideal(std::string_view text) {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_ideal_json(t);
  return parse_ideal_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace stanley
