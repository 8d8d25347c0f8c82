#include "dsrx/quotient.hpp"

#include <cmath>
#include <stdexcept>

#include "dsrx/errors.hpp"
#include "dsrx/spectral.hpp"

namespace dsrx {

std::vector<std::vector<int>> block_parts(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> parts;
  parts.reserve(sizes.size());
  int v = 0;
  for (int s : sizes) {
    if (s <= 0) throw std::invalid_argument("block sizes must be positive");
    std::vector<int> part(s);
    for (int i = 0; i < s; ++i) part[i] = v++;
    parts.push_back(std::move(part));
  }
  return parts;
}

QuotientSystem verify_equitable(const DistanceMatrix& d,
                                const std::vector<std::vector<int>>& parts) {
  std::vector<int> owner(d.n, -1);
  for (size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw std::invalid_argument("partition has an empty part");
    for (int v : parts[p]) {
      if (v < 0 || v >= d.n)
        throw std::invalid_argument("part vertex " + std::to_string(v) +
                                    " out of range");
      if (owner[v] != -1)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " appears in two parts");
      owner[v] = static_cast<int>(p);
    }
  }
  for (int v = 0; v < d.n; ++v)
    if (owner[v] == -1)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " missing from the partition");

  const size_t m = parts.size();
  QuotientSystem qs;
  qs.parts = parts;
  qs.quotient.assign(m, std::vector<long long>(m, 0));
  for (size_t pi = 0; pi < m; ++pi) {
    for (size_t pj = 0; pj < m; ++pj) {
      long long expected = 0;
      for (size_t idx = 0; idx < parts[pi].size(); ++idx) {
        int i = parts[pi][idx];
        long long s = 0;
        for (int j : parts[pj]) s += d.at(i, j);
        if (idx == 0)
          expected = s;
        else if (s != expected)
          throw not_equitable_error(
              static_cast<int>(pi), i,
              "has row sum " + std::to_string(s) + " into part " +
                  std::to_string(pj) + " where " + std::to_string(expected) +
                  " was expected");
      }
      qs.quotient[pi][pj] = expected;
    }
  }
  qs.charpoly = charpoly_int(qs.quotient);
  return qs;
}

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("characteristic polynomial overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("characteristic polynomial overflow");
  return r;
}

using Mat = std::vector<std::vector<long long>>;

Mat mat_mul(const Mat& a, const Mat& b) {
  const size_t n = a.size();
  Mat r(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j)
        r[i][j] = checked_add(r[i][j], checked_mul(a[i][k], b[k][j]));
  return r;
}

}  // namespace

Polynomial charpoly_int(const Mat& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  if (n == 0) return Polynomial({1});

  // Faddeev-LeVerrier: M_1 = I, c_1 = -tr(A); then M_{j+1} = A M_j + c_j I
  // and c_{j+1} = -tr(A M_{j+1})/(j+1).  The trace divisions are exact by
  // Newton's identities, so integer arithmetic never truncates.
  std::vector<long long> coeff(n + 1, 0);
  coeff[n] = 1;  // monic
  Mat mk(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) mk[i][i] = 1;
  long long ck = 0;
  for (size_t j = 1; j <= n; ++j) {
    if (j > 1) {
      mk = mat_mul(m, mk);
      for (size_t i = 0; i < n; ++i) mk[i][i] = checked_add(mk[i][i], ck);
    }
    Mat am = mat_mul(m, mk);
    long long tr = 0;
    for (size_t i = 0; i < n; ++i) tr = checked_add(tr, am[i][i]);
    ck = -tr / static_cast<long long>(j);
    coeff[n - j] = ck;
  }
  return Polynomial(std::move(coeff));
}

std::vector<double> perron_part_values(const Graph& g,
                                       const std::vector<std::vector<int>>& parts,
                                       double tol) {
  SpectralResult sr = graph_radius(g, tol);
  std::vector<double> values;
  values.reserve(parts.size());
  for (size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw std::invalid_argument("partition has an empty part");
    double sum = 0;
    for (int v : parts[p]) sum += sr.perron[v];
    double mean = sum / static_cast<double>(parts[p].size());
    for (int v : parts[p])
      if (std::abs(sr.perron[v] - mean) > 10 * tol)
        throw not_equitable_error(
            static_cast<int>(p), v,
            "has eigenvector value " + std::to_string(sr.perron[v]) +
                " away from the part mean " + std::to_string(mean));
    values.push_back(mean);
  }
  return values;
}

Graph family_graph(QuotientFamily f, long long k) {
  if (k < 1) throw std::invalid_argument("family parameter k must be at least 1");
  const int ki = static_cast<int>(k);
  switch (f) {
    case QuotientFamily::phi:
      return clique_configuration(2 * ki, {3, 1});
    case QuotientFamily::phi_s:
      return clique_configuration(2 * ki + 1, {1, 1, 1});
    case QuotientFamily::phi1:
      return diamond(3, ki + 2, ki, 1);
    case QuotientFamily::phi2:
      return diamond(2, ki + 1, ki + 1, 2);
  }
  throw std::invalid_argument("unknown quotient family");
}

std::vector<std::vector<int>> family_parts(QuotientFamily f, long long k) {
  const int ki = static_cast<int>(k);
  switch (f) {
    case QuotientFamily::phi:
      return block_parts({2 * ki, 3, 1});
    case QuotientFamily::phi_s:
      // The three isolated vertices are interchangeable, so they form one
      // part even though the constructor lays them out as three blocks.
      return block_parts({2 * ki + 1, 3});
    case QuotientFamily::phi1:
      return block_parts({3, ki + 2, ki, 1});
    case QuotientFamily::phi2:
      return block_parts({2, ki + 1, ki + 1, 2});
  }
  throw std::invalid_argument("unknown quotient family");
}

Polynomial reference_charpoly(QuotientFamily f, long long k) {
  if (k < 1) throw std::invalid_argument("family parameter k must be at least 1");
  switch (f) {
    case QuotientFamily::phi:
      return Polynomial({4 * k - 12, -(4 * k + 14), -(2 * k + 1), 1});
    case QuotientFamily::phi_s:
      return Polynomial({2 * k - 3, -(2 * k + 4), 1});
    case QuotientFamily::phi1:
      return Polynomial({-24 * k * k + 64 * k + 28, 12 * k * k + 72 * k - 52,
                         3 * k * k - 6 * k - 45, -(4 * k + 4), 1});
    case QuotientFamily::phi2:
      return Polynomial({-36 * k * k + 72 * k - 20, 12 * k * k + 88 * k - 68,
                         3 * k * k - 6 * k - 53, -(4 * k + 4), 1});
  }
  throw std::invalid_argument("unknown quotient family");
}

bool charpoly_matches_reference(QuotientFamily f, long long k, Polynomial* diff) {
  QuotientSystem qs =
      verify_equitable(distance_matrix(family_graph(f, k)), family_parts(f, k));
  Polynomial ref = reference_charpoly(f, k);
  if (diff) *diff = qs.charpoly - ref;
  return qs.charpoly == ref;
}

std::optional<QuotientFamily> quotient_family_from_name(std::string_view name) {
  if (name == "phi") return QuotientFamily::phi;
  if (name == "phi-s") return QuotientFamily::phi_s;
  if (name == "phi1") return QuotientFamily::phi1;
  if (name == "phi2") return QuotientFamily::phi2;
  return std::nullopt;
}

std::string_view quotient_family_name(QuotientFamily f) {
  switch (f) {
    case QuotientFamily::phi: return "phi";
    case QuotientFamily::phi_s: return "phi-s";
    case QuotientFamily::phi1: return "phi1";
    case QuotientFamily::phi2: return "phi2";
  }
  return "unknown";
}

}  // namespace dsrx
