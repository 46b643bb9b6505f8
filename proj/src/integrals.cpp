#include "integrals.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace fermiq {

namespace {
constexpr double kValueTol = 1e-12;
}

IntegralTable::IntegralTable(int n_spin_orbitals, bool real_orbital_symmetry)
    : n_(n_spin_orbitals), real8_(real_orbital_symmetry) {
  if (n_ < 1)
    throw ContractError("spin-orbital count must be positive");
  spins_.resize(static_cast<std::size_t>(n_));
  for (int p = 1; p <= n_; ++p)
    spins_[static_cast<std::size_t>(p - 1)] =
        (p % 2 == 1) ? Spin::Alpha : Spin::Beta;
}

void IntegralTable::check_index(int p) const {
  if (p < 1 || p > n_)
    throw ContractError("orbital index " + std::to_string(p) +
                        " out of range 1.." + std::to_string(n_));
}

Spin IntegralTable::spin(int p) const {
  check_index(p);
  return spins_[static_cast<std::size_t>(p - 1)];
}

void IntegralTable::set_spin(int p, Spin s) {
  check_index(p);
  spins_[static_cast<std::size_t>(p - 1)] = s;
}

void IntegralTable::set_h1(int p, int q, double v) {
  check_index(p);
  check_index(q);
  for (auto key : {std::pair{p, q}, std::pair{q, p}}) {
    auto it = h1_.find(key);
    if (it != h1_.end() && std::abs(it->second - v) > kValueTol)
      throw ContractError("conflicting h1 value for (" +
                          std::to_string(key.first) + "," +
                          std::to_string(key.second) + ")");
    h1_[key] = v;
  }
}

std::vector<IntegralTable::Quad> IntegralTable::symmetry_orbit(Quad t) const {
  std::set<Quad> seen{t};
  std::vector<Quad> frontier{t};
  while (!frontier.empty()) {
    auto [p, q, r, s] = frontier.back();
    frontier.pop_back();
    std::vector<Quad> next;
    next.push_back({q, p, s, r});  // particle exchange
    next.push_back({s, r, q, p});  // Hermitian partner (real values)
    if (real8_) {
      next.push_back({s, q, r, p});  // real orbitals: p <-> s
      next.push_back({p, r, q, s});  // real orbitals: q <-> r
    }
    for (const auto& u : next)
      if (seen.insert(u).second) frontier.push_back(u);
  }
  return {seen.begin(), seen.end()};
}

void IntegralTable::set_h2(int p, int q, int r, int s, double v) {
  for (int i : {p, q, r, s}) check_index(i);
  for (const auto& u : symmetry_orbit({p, q, r, s})) {
    auto it = h2_.find(u);
    if (it != h2_.end() && std::abs(it->second - v) > kValueTol)
      throw ContractError("conflicting h2 value for (" + std::to_string(u[0]) +
                          "," + std::to_string(u[1]) + "," +
                          std::to_string(u[2]) + "," + std::to_string(u[3]) +
                          ")");
    h2_[u] = v;
  }
}

double IntegralTable::h1(int p, int q) const {
  check_index(p);
  check_index(q);
  auto it = h1_.find({p, q});
  return it == h1_.end() ? 0.0 : it->second;
}

double IntegralTable::h2(int p, int q, int r, int s) const {
  for (int i : {p, q, r, s}) check_index(i);
  auto it = h2_.find({p, q, r, s});
  return it == h2_.end() ? 0.0 : it->second;
}

double IntegralTable::h2_screened(int p, int q, int r, int s) const {
  if (spin(p) != spin(s) || spin(q) != spin(r)) return 0.0;
  return h2(p, q, r, s);
}

namespace {

struct RawLine {
  int number;
  std::vector<std::string> tokens;
};

double parse_real(const std::string& tok, int line) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected a real number, got '" + tok + "'", line);
  }
  if (pos != tok.size() || !std::isfinite(v))
    throw ParseError("expected a real number, got '" + tok + "'", line);
  return v;
}

int parse_index(const std::string& tok, int line) {
  std::size_t pos = 0;
  long v;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an orbital index, got '" + tok + "'", line);
  }
  if (pos != tok.size())
    throw ParseError("expected an orbital index, got '" + tok + "'", line);
  return static_cast<int>(v);
}

}  // namespace

IntegralTable load_integrals(std::istream& in) {
  std::vector<RawLine> lines;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream ls(raw);
    RawLine rl{lineno, {}};
    std::string tok;
    while (ls >> tok) rl.tokens.push_back(tok);
    if (!rl.tokens.empty()) lines.push_back(std::move(rl));
  }
  if (lines.empty()) throw ParseError("empty integrals file", 0);
  if (lines.front().tokens[0] != "norb")
    throw ParseError("first directive must be 'norb'", lines.front().number);

  // Pre-scan for the symmetry directive so completion is independent of
  // where it appears in the file.
  bool real8 = false;
  for (const auto& l : lines) {
    if (l.tokens[0] == "symmetry") {
      if (l.tokens.size() != 2 || l.tokens[1] != "real8")
        throw ParseError("unknown symmetry mode", l.number);
      real8 = true;
    }
  }

  const auto& first = lines.front();
  if (first.tokens.size() != 2)
    throw ParseError("norb takes one argument", first.number);
  int norb = parse_index(first.tokens[1], first.number);
  if (norb < 1) throw ParseError("norb must be positive", first.number);
  if (norb > 64) throw ParseError("norb too large (max 64)", first.number);
  IntegralTable table(norb, real8);

  bool have_eshift = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const auto& t = l.tokens;
    try {
      if (t[0] == "norb") {
        throw ParseError("duplicate norb directive", l.number);
      } else if (t[0] == "spin") {
        if (t.size() != 3) throw ParseError("spin takes <p> <a|b>", l.number);
        int p = parse_index(t[1], l.number);
        if (p < 1 || p > norb)
          throw ParseError("orbital index " + t[1] + " out of range 1.." +
                               std::to_string(norb),
                           l.number);
        if (t[2] == "a")
          table.set_spin(p, Spin::Alpha);
        else if (t[2] == "b")
          table.set_spin(p, Spin::Beta);
        else
          throw ParseError("spin label must be 'a' or 'b'", l.number);
      } else if (t[0] == "eshift") {
        if (t.size() != 2) throw ParseError("eshift takes one value", l.number);
        double v = parse_real(t[1], l.number);
        if (have_eshift && std::abs(v - table.energy_shift()) > kValueTol)
          throw ParseError("conflicting eshift values", l.number);
        table.set_energy_shift(v);
        have_eshift = true;
      } else if (t[0] == "symmetry") {
        // handled in the pre-scan
      } else if (t[0] == "h1") {
        if (t.size() != 4) throw ParseError("h1 takes <p> <q> <value>", l.number);
        table.set_h1(parse_index(t[1], l.number), parse_index(t[2], l.number),
                     parse_real(t[3], l.number));
      } else if (t[0] == "h2") {
        if (t.size() != 6)
          throw ParseError("h2 takes <p> <q> <r> <s> <value>", l.number);
        table.set_h2(parse_index(t[1], l.number), parse_index(t[2], l.number),
                     parse_index(t[3], l.number), parse_index(t[4], l.number),
                     parse_real(t[5], l.number));
      } else {
        throw ParseError("unknown directive '" + t[0] + "'", l.number);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const ContractError& e) {
      throw ParseError(e.what(), l.number);
    }
  }
  return table;
}

IntegralTable load_integrals_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open integrals file: " + path);
  return load_integrals(in);
}

IntegralTable load_integrals_string(const std::string& text) {
  std::istringstream in(text);
  return load_integrals(in);
}

}  // namespace fermiq
