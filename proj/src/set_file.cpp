#include "hrds/set_file.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "hrds/errors.hpp"

namespace hrds {

void write_set(std::ostream& os, const RankSet& u) {
  const FieldSpec& f = *u.field();
  os << "HRDS 1\n";
  os << "p=" << f.p() << " e=" << f.e() << " n=" << u.n() << " k=" << u.k() << "\n";
  os << "mod=";
  const auto& m = f.modulus_q2();
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << "\n";
  for (const auto& a : u.members()) {
    const auto& d = a.matrix().data();
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << d[i].index;
    os << "\n";
  }
}

std::string serialize_set(const RankSet& u) {
  std::ostringstream os;
  write_set(os, u);
  return os.str();
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  // Trailing blank lines carry no records.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

unsigned long long parse_uint(std::string_view s, std::size_t line, const std::string& what) {
  unsigned long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw ParseError(line, "bad " + what + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

unsigned long long header_field(std::string_view tok, std::string_view key) {
  if (tok.substr(0, key.size()) != key || tok.size() <= key.size() || tok[key.size()] != '=')
    throw ParseError(2, "expected " + std::string(key) + "=<int>, got '" + std::string(tok) + "'");
  return parse_uint(tok.substr(key.size() + 1), 2, std::string(key));
}

}  // namespace

RankSet parse_set(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "HRDS 1") throw ParseError(1, "expected 'HRDS 1'");
  if (lines.size() < 2) throw ParseError(2, "missing parameter line");
  const auto params = split(lines[1], ' ');
  if (params.size() != 4) throw ParseError(2, "expected 'p=<int> e=<int> n=<int> k=<int>'");
  const auto p = header_field(params[0], "p");
  const auto e = header_field(params[1], "e");
  const auto n = header_field(params[2], "n");
  const auto k = header_field(params[3], "k");
  if (n == 0 || n > 64) throw ParseError(2, "n out of range");
  if (k == 0 || k > n) throw ParseError(2, "k must satisfy 1 <= k <= n");
  if (p < 2 || p > 1024 || e == 0 || e > 10) throw ParseError(2, "p or e out of range");

  if (lines.size() < 3) throw ParseError(3, "missing modulus line");
  if (lines[2].substr(0, 4) != "mod=") throw ParseError(3, "expected 'mod=<c0>,...'");
  Poly modulus;
  for (auto c : split(lines[2].substr(4), ',')) modulus.push_back(static_cast<unsigned>(parse_uint(c, 3, "coefficient")));
  if (modulus.size() != 2 * e + 1) throw ParseError(3, "modulus must have 2e + 1 coefficients");
  FieldPtr field;
  try {
    field = FieldSpec::create(static_cast<unsigned>(p), static_cast<unsigned>(e), modulus);
  } catch (const UsageError& ex) {
    throw ParseError(3, ex.what());
  }

  RankSet u(field, n, k);
  for (std::size_t li = 3; li < lines.size(); ++li) {
    const std::size_t line = li + 1;
    const std::size_t record = li - 2;
    const auto toks = split(lines[li], ' ');
    if (toks.size() != n * n)
      throw ParseError(line, "expected " + std::to_string(n * n) + " entries, got " + std::to_string(toks.size()),
                       record);
    std::vector<Elem> data;
    data.reserve(n * n);
    for (auto t : toks) {
      const auto v = parse_uint(t, line, "entry");
      if (v >= field->q2())
        throw ParseError(line, "entry " + std::to_string(v) + " is not below q^2 = " + std::to_string(field->q2()),
                         record);
      data.push_back(Elem{static_cast<std::uint32_t>(v)});
    }
    Matrix m(n, n, std::move(data));
    if (!is_hermitian(*field, m)) throw ParseError(line, "matrix is not hermitian", record);
    HermMatrix h(*field, std::move(m));
    if (u.contains(h)) throw ParseError(line, "repeated matrix", record);
    u.insert(std::move(h));
  }
  return u;
}

RankSet parse_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_set(ss.str());
}

}  // namespace hrds
