// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "kadapt/integrals.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>

#include "kadapt/error.hpp"

namespace kadapt {

MolecularIntegrals::MolecularIntegrals(int n_spatial_orbitals, int n_electrons, int ms2)
    : norb_(n_spatial_orbitals), nelec_(n_electrons), ms2_(ms2) {
  if (norb_ <= 0) throw StructureError("NORB must be positive");
  if (nelec_ < 0 || nelec_ > 2 * norb_) {
    throw StructureError("NELEC=" + std::to_string(nelec_) + " exceeds 2*NORB=" +
                         std::to_string(2 * norb_));
  }
  const auto n = static_cast<std::size_t>(norb_);
  h1_.assign(n * n, 0.0);
  h2_.assign(n * n * n * n, 0.0);
}

std::size_t MolecularIntegrals::index2(int p, int q) const {
  if (p < 0 || q < 0 || p >= norb_ || q >= norb_) {
    throw DimensionError("orbital index outside [0, NORB)");
  }
  return static_cast<std::size_t>(p) * norb_ + q;
}

std::size_t MolecularIntegrals::index4(int p, int q, int r, int s) const {
  return index2(p, q) * norb_ * norb_ + index2(r, s);
}

void MolecularIntegrals::set_one_body(int p, int q, double value) {
  h1_[index2(p, q)] = value;
  h1_[index2(q, p)] = value;
}

void MolecularIntegrals::set_two_body(int p, int q, int r, int s, double value) {
  // (pq|rs) = (qp|rs) = (pq|sr) = (qp|sr) = (rs|pq) = (sr|pq) = (rs|qp) = (sr|qp)
  for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
    for (auto [c, d] : {std::pair{r, s}, std::pair{s, r}}) {
      h2_[index4(a, b, c, d)] = value;
      h2_[index4(c, d, a, b)] = value;
    }
  }
}

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::optional<int> header_int(const std::string& header, const std::string& key) {
  const std::regex re("\\b" + key + "\\s*=\\s*(-?\\d+)");
  std::smatch m;
  if (!std::regex_search(header, m, re)) return std::nullopt;
  return std::stoi(m[1].str());
}

bool ends_header(const std::string& line_upper) {
  if (line_upper.find("&END") != std::string::npos) return true;
  auto last = line_upper.find_last_not_of(" \t\r");
  return last != std::string::npos && line_upper[last] == '/';
}

double parse_value(std::string tok, std::size_t line_no) {
  if (!tok.empty() && tok.front() == '(') {
    throw ParseError(line_no, "complex integrals are not supported: '" + tok + "'");
  }
  std::replace(tok.begin(), tok.end(), 'D', 'E');
  std::replace(tok.begin(), tok.end(), 'd', 'e');
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw ParseError(line_no, "non-numeric integral value '" + tok + "'");
  }
  return v;
}

int parse_index(const std::string& tok, int norb, std::size_t line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "non-integer orbital index '" + tok + "'");
  }
  if (v < 0 || v > norb) {
    throw ParseError(line_no, "orbital index " + tok + " outside [0, " + std::to_string(norb) + "]");
  }
  return v;
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

MolecularIntegrals parse_fcidump(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::string header;
  std::size_t header_start = 0;
  bool in_header = false;
  bool header_done = false;

  while (!header_done && std::getline(in, line)) {
    ++line_no;
    const std::string u = upper(line);
    if (!in_header) {
      if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (u.find("&FCI") == std::string::npos) {
        throw ParseError(line_no, "expected '&FCI' namelist header");
      }
      in_header = true;
      header_start = line_no;
    }
    header += u + ' ';
    if (ends_header(u)) header_done = true;
  }
  if (!header_done) {
    throw ParseError(line_no == 0 ? 1 : line_no, "unterminated or missing FCIDUMP header");
  }
  if (header.find("COMPLEX") != std::string::npos && header.find("COMPLEX=.FALSE.") == std::string::npos) {
    throw ParseError(header_start, "complex FCIDUMP files are not supported");
  }
  const auto norb = header_int(header, "NORB");
  const auto nelec = header_int(header, "NELEC");
  if (!norb || *norb <= 0) throw ParseError(header_start, "header lacks a positive NORB");
  if (!nelec || *nelec < 0) throw ParseError(header_start, "header lacks NELEC");
  if (*nelec > 2 * *norb) throw ParseError(header_start, "NELEC exceeds 2*NORB");
  const int ms2 = header_int(header, "MS2").value_or(0);

  MolecularIntegrals m(*norb, *nelec, ms2);
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 5) {
      throw ParseError(line_no, "expected 'value i j k l', found " + std::to_string(tok.size()) +
                                    " fields");
    }
    const double v = parse_value(tok[0], line_no);
    const int i = parse_index(tok[1], *norb, line_no);
    const int j = parse_index(tok[2], *norb, line_no);
    const int k = parse_index(tok[3], *norb, line_no);
    const int l = parse_index(tok[4], *norb, line_no);

    if (i == 0 && j == 0 && k == 0 && l == 0) {
      m.set_core_energy(v);
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      m.set_two_body(i - 1, j - 1, k - 1, l - 1, v);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      m.set_one_body(i - 1, j - 1, v);
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy; not needed to build the Hamiltonian
    } else {
      throw ParseError(line_no, "unrecognised index pattern");
    }
  }
  return m;
}

MolecularIntegrals parse_fcidump_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open FCIDUMP file '" + path.string() + "'");
  try {
    return parse_fcidump(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

void write_fcidump(std::ostream& out, const MolecularIntegrals& m, double tol) {
  const int n = m.n_spatial_orbitals();
  out << " &FCI NORB=" << n << ",NELEC=" << m.n_electrons() << ",MS2=" << m.ms2() << ",\n";
  out << "  ORBSYM=";
  for (int p = 0; p < n; ++p) out << "1,";
  out << "\n  ISYM=1,\n &END\n";
  auto emit = [&](double v, int i, int j, int k, int l) {
    if (std::abs(v) <= tol && !(i == 0 && j == 0 && k == 0 && l == 0)) return;
    out << ' ' << shortest(v) << ' ' << i << ' ' << j << ' ' << k << ' ' << l << '\n';
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = m.two_body(i, j, k, l);
          if (v != 0.0) emit(v, i + 1, j + 1, k + 1, l + 1);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = m.one_body(i, j);
      if (v != 0.0) emit(v, i + 1, j + 1, 0, 0);
    }
  }
  emit(m.core_energy(), 0, 0, 0, 0);
}

FermionOperator build_fermionic_hamiltonian(const MolecularIntegrals& m) {
  const int n = m.n_spatial_orbitals();
  std::vector<FermionTerm> terms;
  if (m.core_energy() != 0.0) terms.push_back({m.core_energy(), {}});

  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double h = m.one_body(p, q);
      if (h == 0.0) continue;
      for (bool down : {false, true}) {
        terms.push_back({h, {{spin_orbital(p, down), true}, {spin_orbital(q, down), false}}});
      }
    }
  }

  // ½ Σ (pq|rs) a†_{pσ} a†_{rτ} a_{sτ} a_{qσ}: the chemists' pair (pq) belongs
  // to electron 1 with spin σ, (rs) to electron 2 with spin τ.
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          const double v = m.two_body(p, q, r, s);
          if (v == 0.0) continue;
          for (bool sigma : {false, true}) {
            for (bool tau : {false, true}) {
              const int P = spin_orbital(p, sigma);
              const int Q = spin_orbital(r, tau);
              const int R = spin_orbital(s, tau);
              const int S = spin_orbital(q, sigma);
              if (P == Q || R == S) continue;
              terms.push_back({0.5 * v, {{P, true}, {Q, true}, {R, false}, {S, false}}});
            }
          }
        }
      }
    }
  }
  return FermionOperator(std::move(terms));
}

}  // namespace kadapt
