#include "emptri/epts.hpp"

#include <fstream>
#include <sstream>

namespace emptri {

namespace {

bool parse_integer(const std::string& tok, Integer& out) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (std::size_t j = i; j < tok.size(); ++j)
    if (tok[j] < '0' || tok[j] > '9') return false;
  return out.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) == 0;
}

}  // namespace

void write_epts(std::ostream& out, const PointSet& s) {
  Integer d = 1;
  for (const auto& p : s.points) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), p.x.get_den_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), p.y.get_den_mpz_t());
  }
  out << "EPTS v1 " << s.size() << ' ' << family_name(s.family) << ' ' << d.get_str() << '\n';
  for (const auto& [k, v] : s.params) {
    if (k.find('=') != std::string::npos || k.find('\n') != std::string::npos || v.find('\n') != std::string::npos)
      throw std::invalid_argument("metadata key or value cannot be written: " + k);
    out << "# " << k << '=' << v << '\n';
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Rational x = s[i].x * d, y = s[i].y * d;
    out << x.get_num().get_str() << ' ' << y.get_num().get_str();
    if (s.family == Family::DiamondSquaredHorton) out << ' ' << s.diamond_id.at(i);
    out << '\n';
  }
}

std::string to_epts(const PointSet& s) {
  std::ostringstream out;
  write_epts(out, s);
  return out.str();
}

PointSet read_epts(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty input");
  ++lineno;
  std::istringstream hs(line);
  std::string magic, version, family, dtok, extra;
  std::string ntok;
  if (!(hs >> magic >> version >> ntok >> family >> dtok) || (hs >> extra))
    throw ParseError(lineno, "expected 'EPTS v1 <n> <family> <D>'");
  if (magic != "EPTS" || version != "v1") throw ParseError(lineno, "not an EPTS v1 file");
  Integer nz, d;
  if (!parse_integer(ntok, nz) || nz < 0 || !nz.fits_ulong_p()) throw ParseError(lineno, "bad point count");
  if (!parse_integer(dtok, d) || d <= 0) throw ParseError(lineno, "denominator must be a positive integer");
  const auto fam = parse_family(family);
  if (!fam) throw ParseError(lineno, "unknown family '" + family + "'");

  PointSet s;
  s.family = *fam;
  const std::size_t n = nz.get_ui();
  const bool with_id = s.family == Family::DiamondSquaredHorton;
  while (s.points.size() < n) {
    if (!std::getline(in, line)) throw ParseError(lineno + 1, "expected " + std::to_string(n) + " points, got " +
                                                                  std::to_string(s.points.size()));
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!s.points.empty()) throw ParseError(lineno, "metadata after the first point");
      const std::string body = line.substr(line.find_first_not_of("# ") == std::string::npos
                                               ? line.size()
                                               : line.find_first_not_of("# "));
      const auto eq = body.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError(lineno, "expected '# key=value'");
      s.params[body.substr(0, eq)] = body.substr(eq + 1);
      continue;
    }
    std::istringstream ls(line);
    std::string xt, yt, it;
    if (!(ls >> xt >> yt)) throw ParseError(lineno, "expected 'X Y'");
    Integer x, y;
    if (!parse_integer(xt, x) || !parse_integer(yt, y)) throw ParseError(lineno, "coordinates must be integers");
    if (with_id) {
      Integer id;
      if (!(ls >> it) || !parse_integer(it, id) || id < 0 || !id.fits_ulong_p())
        throw ParseError(lineno, "missing or bad diamond id");
      s.diamond_id.push_back(id.get_ui());
    }
    if (ls >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
    s.points.emplace_back(Rational(x, d), Rational(y, d));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError(lineno, "trailing content");
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
  return s;
}

PointSet parse_epts(const std::string& text) {
  std::istringstream in(text);
  return read_epts(in);
}

PointSet load_epts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_epts(in);
}

void save_epts(const std::string& path, const PointSet& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_epts(out, s);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace emptri
