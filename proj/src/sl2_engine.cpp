#include "amci/sl2_engine.hpp"

#include "amci/exact_linalg.hpp"

#include <stdexcept>

namespace amci {

std::vector<long long> hilbert(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("hilbert needs n >= 1 and d >= 1");
  std::vector<long long> coeff{1};
  for (int v = 0; v < n; ++v) {
    std::vector<long long> next(coeff.size() + d - 1, 0);
    for (size_t i = 0; i < coeff.size(); ++i)
      for (int e = 0; e < d; ++e) next[i + e] += coeff[i];
    coeff = std::move(next);
  }
  return coeff;
}

long long Sl2Decomposition::total_dim() const {
  int m = socle_degree();
  long long total = 0;
  for (size_t j = 0; j < mults.size(); ++j)
    total += mults[j] * (m - 2 * static_cast<long long>(j) + 1);
  return total;
}

Sl2Decomposition sl2_decompose(int n, int d) {
  auto dims = hilbert(n, d);
  Sl2Decomposition dec;
  dec.n = n;
  dec.d = d;
  int m = n * (d - 1);
  for (int j = 0; j <= m / 2; ++j) {
    long long a = dims[j] - (j > 0 ? dims[j - 1] : 0);
    if (a < 0) throw std::logic_error("Hilbert function not unimodal");
    dec.mults.push_back(a);
  }
  return dec;
}

std::vector<int> clebsch_gordan(int m, int k) {
  if (k < 0 || m < k)
    throw std::invalid_argument("clebsch_gordan needs m >= k >= 0");
  std::vector<int> out;
  for (int w = m + k; w >= m - k; w -= 2) out.push_back(w);
  return out;
}

std::map<int, long long> iterated_tensor_mults(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  std::map<int, long long> weights{{d - 1, 1}};
  for (int step = 1; step < n; ++step) {
    std::map<int, long long> next;
    for (const auto& [w, cnt] : weights) {
      int hi = std::max(w, d - 1), lo = std::min(w, d - 1);
      for (int label : clebsch_gordan(hi, lo)) next[label] += cnt;
    }
    weights = std::move(next);
  }
  return weights;
}

bool LefschetzReport::all_bijective() const {
  for (const auto& e : entries)
    if (e.rank != e.expected) return false;
  return !entries.empty();
}

LefschetzReport lefschetz_check(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    size *= d;
    if (size > 20000) throw std::out_of_range("lefschetz_check: d^n exceeds 20000");
  }

  AlgebraParams p{n, d};
  const int m = p.socle_degree();
  LefschetzReport report;
  report.n = n;
  report.d = d;
  for (int j = 0; j <= m / 2; ++j) {
    auto dom = monomial_basis(p, j);
    auto codom = monomial_basis(p, m - j);
    std::map<Monomial, int, MonomialDescLex> index;
    for (size_t i = 0; i < codom.size(); ++i) index[codom[i]] = static_cast<int>(i);

    IMatrix mat(codom.size(), std::vector<Int>(dom.size(), Int(0)));
    for (size_t col = 0; col < dom.size(); ++col) {
      QuotientPolynomial image = make_monomial(p, dom[col]);
      for (int step = 0; step < m - 2 * j; ++step) image = apply_F(image);
      for (const auto& [mono, c] : image.terms)
        mat[index.at(mono)][col] = Int(c.get_num());  // F keeps coefficients integral
    }
    LefschetzEntry entry;
    entry.j = j;
    entry.expected = static_cast<long long>(dom.size());
    entry.rank = rank_bareiss(std::move(mat));
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace amci
