#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "singknot/singknot.hpp"

namespace testutil {

inline std::string corpus_dir() { return SINGKNOT_CORPUS_DIR; }

inline std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string corpus_path(const std::string& name) { return corpus_dir() + "/" + name + ".knot"; }

inline singknot::SingularDiagram load(const std::string& name) { return singknot::parse_diagram(read(corpus_path(name))); }

/// Corpus file stems, sorted.
inline std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir()))
    if (entry.path().extension() == ".knot") out.push_back(entry.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

/// PD code read directly from a classical diagram file, without the library
/// parser. The end edge of a long knot is renamed to its start edge.
inline oracle::PD pd_from_text(const std::string& text) {
  oracle::PD pd;
  int start = 0, end = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "LONG") {
      ls >> start >> end;
      continue;
    }
    std::array<int, 4> x{};
    for (int& e : x) ls >> e;
    pd.push_back(x);
  }
  for (auto& x : pd)
    for (int& e : x)
      if (end != 0 && e == end) e = start;
  return pd;
}

inline bool is_classical_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok && tok == "V") return false;
  }
  return true;
}

/// A-only view of a library polynomial whose B exponents are all zero.
inline oracle::Poly to_oracle(const singknot::LaurentPoly& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) {
    for (int b : e.b)
      if (b != 0) throw std::runtime_error("polynomial depends on B");
    out += oracle::Poly::mono(static_cast<long long>(c), e.a);
  }
  return out;
}

inline singknot::LaurentPoly A(int k, std::size_t arity) { return singknot::LaurentPoly::a_power(k, arity); }
inline singknot::LaurentPoly Bv(std::size_t i, int e, std::size_t arity) { return singknot::LaurentPoly::b_power(i, e, arity); }

/// Reference indexed Jones value of the long singular trefoil T.
inline singknot::LaurentPoly expected_jones_T() {
  const std::size_t n = 2;
  return A(-6, n) * Bv(1, -1, n) * Bv(2, -1, n) + (-A(4, n) - A(-4, n)) * Bv(1, 1, n) * Bv(2, -1, n) +
         (-A(-4, n) - A(-8, n)) * Bv(1, -1, n) * Bv(2, 1, n) +
         (A(6, n) + A(2, n) + A(-2, n) + A(-6, n)) * Bv(1, 1, n) * Bv(2, 1, n);
}

/// Reference Alexander values: T carries B1, its inverse carries B2.
inline singknot::LaurentPoly expected_alexander(std::size_t index) {
  const std::size_t n = 2;
  return A(-2, n) + (A(1, n) - A(-1, n)) * Bv(index, 1, n);
}

}  // namespace testutil
