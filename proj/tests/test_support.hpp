// Copyright 2026 The opendata-egt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EGT_TESTS_TEST_SUPPORT_HPP_
#define EGT_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "egt/model.hpp"
#include "egt/stability.hpp"

// Independent oracles shared by the unit, property and acceptance tests.
// Nothing here calls into the formulas under test except where a test
// explicitly compares against them.
namespace egt::testing {

inline GameParameters Fig2aParams() {
  GameParameters g;
  g.c1 = 8; g.c2 = 10; g.c3 = 6; g.v1 = 5; g.v2 = 3; g.r1 = 2;
  g.r2 = 5; g.l1 = 2; g.l2 = 2; g.p = 8; g.f = 3; g.alpha = 0.7;
  return g;
}

// Constructed so that (0.5, 0.5, 0.5) is an interior rest point.
inline GameParameters InteriorParams() {
  GameParameters g;
  g.c1 = 3; g.c2 = 4.5; g.c3 = 4; g.alpha = 0.5; g.v1 = 4; g.v2 = 2;
  g.r1 = 2; g.l1 = 2; g.l2 = 2; g.p = 3; g.r2 = 4; g.f = 1;
  return g;
}

inline GameParameters Fig3BaseParams() {
  GameParameters g;
  g.c1 = 6; g.c3 = 5; g.v2 = 1; g.r1 = 2; g.l1 = 5; g.l2 = 7; g.p = 3;
  g.r2 = 4; g.c2 = 4; g.v1 = 3; g.f = 1; g.alpha = 0.6;
  return g;
}

// Fields uniform in [0, scale], alpha uniform in [0, 1].
inline GameParameters RandomParams(std::mt19937_64& rng, double scale = 10.0) {
  std::uniform_real_distribution<double> field(0.0, scale);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  GameParameters g;
  g.c1 = field(rng); g.c2 = field(rng); g.c3 = field(rng); g.v1 = field(rng);
  g.v2 = field(rng); g.r1 = field(rng); g.r2 = field(rng); g.l1 = field(rng);
  g.l2 = field(rng); g.p = field(rng); g.f = field(rng);
  g.alpha = unit(rng);
  return g;
}

inline PopulationState RandomState(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(rng), u(rng), u(rng)};
}

// Payoff table written out cell by cell: (provider, user, regulator) for
// provider H/L, user A/N, regulator R/N.
inline void TableCell(const GameParameters& g, bool high, bool acquire, bool regulate,
                      double out[3]) {
  const double a = g.alpha;
  if (regulate) {
    if (high && acquire) {
      out[0] = g.r1 + g.f - g.c1; out[1] = g.r1 + g.f + a * g.v1 - g.c2; out[2] = g.p + g.r2 - g.c3;
    } else if (high) {
      out[0] = g.f - g.c1; out[1] = -g.f - g.l2; out[2] = g.p - g.c3;
    } else if (acquire) {
      out[0] = -g.f - g.l1; out[1] = g.f + a * g.v2 - g.c2; out[2] = g.p - g.c3;
    } else {
      out[0] = -g.f; out[1] = -g.f; out[2] = g.p - g.c3;
    }
  } else {
    if (high && acquire) {
      out[0] = g.r1 - g.c1; out[1] = g.r1 + a * g.v1 - g.c2; out[2] = 0;
    } else if (high) {
      out[0] = -g.c1; out[1] = -g.l2; out[2] = 0;
    } else if (acquire) {
      out[0] = -g.l1; out[1] = a * g.v2 - g.c2; out[2] = 0;
    } else {
      out[0] = 0; out[1] = 0; out[2] = 0;
    }
  }
}

// Brute-force expected payoffs: average each player's cell payoff over the
// other two players' mixed strategies.
struct BruteForcePayoffs {
  double e_p1, e_p2, e_u1, e_u2, e_r1, e_r2;
};

inline BruteForcePayoffs BruteForceExpected(const GameParameters& g, const PopulationState& s) {
  BruteForcePayoffs r{0, 0, 0, 0, 0, 0};
  const double px[2] = {1 - s.x, s.x};
  const double py[2] = {1 - s.y, s.y};
  const double pz[2] = {1 - s.z, s.z};
  double cell[3];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        TableCell(g, i, j, k, cell);
        if (i == 1) r.e_p1 += py[j] * pz[k] * cell[0]; else r.e_p2 += py[j] * pz[k] * cell[0];
        if (j == 1) r.e_u1 += px[i] * pz[k] * cell[1]; else r.e_u2 += px[i] * pz[k] * cell[1];
        if (k == 1) r.e_r1 += px[i] * py[j] * cell[2]; else r.e_r2 += px[i] * py[j] * cell[2];
      }
    }
  }
  return r;
}

// Replicator velocity built from the brute-force payoffs.
inline ReplicatorVelocity BruteForceRhs(const GameParameters& g, const PopulationState& s) {
  const BruteForcePayoffs e = BruteForceExpected(g, s);
  return {s.x * (1 - s.x) * (e.e_p1 - e.e_p2), s.y * (1 - s.y) * (e.e_u1 - e.e_u2),
          s.z * (1 - s.z) * (e.e_r1 - e.e_r2)};
}

inline double Component(const ReplicatorVelocity& v, int i) {
  return i == 0 ? v.dx_dt : i == 1 ? v.dy_dt : v.dz_dt;
}

inline double& Coord(PopulationState& s, int i) { return i == 0 ? s.x : i == 1 ? s.y : s.z; }

// Central finite-difference Jacobian of the replicator RHS.
inline JacobianMatrix FiniteDifferenceJacobian(const GameParameters& g, const PopulationState& s,
                                               double h = 1e-6) {
  JacobianMatrix j;
  for (int col = 0; col < 3; ++col) {
    PopulationState plus = s, minus = s;
    Coord(plus, col) += h;
    Coord(minus, col) -= h;
    const ReplicatorVelocity a = ReplicatorRhs(g, plus);
    const ReplicatorVelocity b = ReplicatorRhs(g, minus);
    for (int row = 0; row < 3; ++row) {
      j(row, col) = (Component(a, row) - Component(b, row)) / (2 * h);
    }
  }
  return j;
}

// det(J - lambda I) by cofactor expansion, in complex arithmetic.
inline std::complex<double> CharPoly(const JacobianMatrix& j, std::complex<double> lambda) {
  using C = std::complex<double>;
  C m[3][3];
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m[r][c] = C(j(r, c)) - (r == c ? lambda : C(0));
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline double MaxAbsDiff(const PopulationState& a, const PopulationState& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline double FrobeniusNorm(const JacobianMatrix& j) {
  double s = 0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) s += j(r, c) * j(r, c);
  }
  return std::sqrt(s);
}

inline bool RelClose(double a, double b, double rel, double abs_floor = 0.0) {
  return std::abs(a - b) <= std::max(abs_floor, rel * std::max({1.0, std::abs(a), std::abs(b)}));
}

// Label implied purely by eigenvalue signs at a corner.
inline bool EigenSaysStable(const EigenTriple& e) {
  return std::all_of(e.values.begin(), e.values.end(),
                     [](const std::complex<double>& v) { return v.real() < 0; });
}

// Minimal XML well-formedness check: balanced tags, quoted attributes,
// no external references. Enough for the SVG files the tool emits.
inline bool WellFormedSvg(const std::string& text, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why != nullptr) *why = msg;
    return false;
  };
  if (text.find("<svg") == std::string::npos) return fail("no <svg> element");
  if (text.find("href=\"http") != std::string::npos || text.find("<image") != std::string::npos ||
      text.find("@import") != std::string::npos || text.find("url(http") != std::string::npos) {
    return fail("external reference");
  }
  std::vector<std::string> stack;
  std::size_t i = 0;
  bool seen_root = false;
  while (i < text.size()) {
    const std::size_t open = text.find('<', i);
    // Text content between tags must not contain a raw '&' that starts no entity.
    const std::string chunk = text.substr(i, open == std::string::npos ? std::string::npos : open - i);
    for (std::size_t a = chunk.find('&'); a != std::string::npos; a = chunk.find('&', a + 1)) {
      if (chunk.find(';', a) == std::string::npos) return fail("bare ampersand");
    }
    if (chunk.find('>') != std::string::npos) return fail("stray '>'");
    if (open == std::string::npos) break;
    if (text.compare(open, 4, "<!--") == 0) {
      const std::size_t end = text.find("-->", open);
      if (end == std::string::npos) return fail("unterminated comment");
      i = end + 3;
      continue;
    }
    if (text.compare(open, 2, "<?") == 0) {
      const std::size_t end = text.find("?>", open);
      if (end == std::string::npos) return fail("unterminated prolog");
      i = end + 2;
      continue;
    }
    // Scan to the closing '>' honoring quoted attribute values.
    std::size_t k = open + 1;
    char quote = 0;
    for (; k < text.size(); ++k) {
      if (quote != 0) {
        if (text[k] == quote) quote = 0;
        else if (text[k] == '<') return fail("'<' inside attribute");
      } else if (text[k] == '"' || text[k] == '\'') {
        quote = text[k];
      } else if (text[k] == '>') {
        break;
      }
    }
    if (k >= text.size()) return fail("unterminated tag");
    std::string tag = text.substr(open + 1, k - open - 1);
    i = k + 1;
    if (!tag.empty() && tag[0] == '/') {
      const std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
      stack.pop_back();
      continue;
    }
    const bool self_closing = !tag.empty() && tag.back() == '/';
    const std::size_t name_end = tag.find_first_of(" \t\n/");
    const std::string name = tag.substr(0, name_end);
    if (name.empty()) return fail("empty tag name");
    if (stack.empty()) {
      if (seen_root) return fail("multiple root elements");
      seen_root = true;
    }
    if (!self_closing) stack.push_back(name);
  }
  if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
  if (!seen_root) return fail("no root element");
  return true;
}

}  // namespace egt::testing

#endif  // EGT_TESTS_TEST_SUPPORT_HPP_
