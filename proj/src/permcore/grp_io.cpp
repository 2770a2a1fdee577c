#include "groupfact/permcore/grp_io.hpp"

#include <fstream>
#include <sstream>

#include "groupfact/errors.hpp"

namespace groupfact::permcore {

namespace {

bool skippable(std::string const &line)
{
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

PermGroup parse_grp(std::string const &text, std::string const &source)
{
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::size_t degree = 0;
  bool have_header = false;
  std::vector<Permutation> gens;

  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line))
      continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string word;
      long long d = -1;
      std::string rest;
      if (!(ls >> word >> d) || word != "perm" || d < 1 || (ls >> rest))
        throw ParseError(source, lineno, "expected header 'perm <degree>'");
      degree = static_cast<std::size_t>(d);
      have_header = true;
      continue;
    }
    std::vector<Point> images;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (std::exception const &) {
        used = 0;
      }
      if (used != tok.size() || v < 0 || static_cast<std::size_t>(v) >= degree)
        throw ParseError(source, lineno, "bad image '" + tok + "'");
      images.push_back(static_cast<Point>(v));
    }
    if (images.size() != degree)
      throw ParseError(source, lineno,
                       "expected " + std::to_string(degree) + " images, got " +
                           std::to_string(images.size()));
    std::vector<char> hit(degree, 0);
    for (Point p : images) {
      if (hit[p])
        throw ParseError(source, lineno, "not a bijection (image " + std::to_string(p) + " repeated)");
      hit[p] = 1;
    }
    gens.push_back(Permutation::unchecked(std::move(images)));
  }
  if (!have_header)
    throw ParseError(source, lineno, "missing header 'perm <degree>'");
  return PermGroup(degree, std::move(gens));
}

PermGroup load_grp(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_grp(ss.str(), path);
}

std::string to_grp(PermGroup const &g)
{
  std::ostringstream out;
  out << "perm " << g.degree() << "\n";
  for (auto const &s : g.generators()) {
    for (std::size_t i = 0; i < s.degree(); ++i)
      out << (i ? " " : "") << s[static_cast<Point>(i)];
    out << "\n";
  }
  return out.str();
}

void save_grp(PermGroup const &g, std::string const &path)
{
  std::ofstream out(path);
  if (!out)
    throw PreconditionError("cannot write " + path);
  out << to_grp(g);
}

}  // namespace groupfact::permcore
