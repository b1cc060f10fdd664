#include "domino/transfer.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace domino {

BigMatrix BigMatrix::identity(int dim) {
  BigMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::multiply(const BigMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw Error("matrix dimension mismatch");
  BigMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const mpz_class& lik = at(i, k);
      if (lik == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        const mpz_class& rkj = rhs.at(k, j);
        if (rkj == 0) continue;
        mpz_addmul(out.at(i, j).get_mpz_t(), lik.get_mpz_t(), rkj.get_mpz_t());
      }
    }
  }
  return out;
}

bool BigMatrix::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const mpz_class& v) { return v == 0; });
}

BigMatrix matrix_power(const BigMatrix& m, std::uint64_t n,
                       PowerStats* stats) {
  if (stats) stats->multiplications = 0;
  if (n == 0) return BigMatrix::identity(m.dim());
  // Left-to-right binary exponentiation: one squaring per bit below the top,
  // one extra multiply per set bit.
  int top = 63;
  while (!((n >> top) & 1u)) --top;
  BigMatrix acc = m;
  for (int bit = top - 1; bit >= 0; --bit) {
    acc = acc.multiply(acc);
    if (stats) ++stats->multiplications;
    if ((n >> bit) & 1u) {
      acc = acc.multiply(m);
      if (stats) ++stats->multiplications;
    }
  }
  return acc;
}

mpz_class matrix_power_entry(const BigMatrix& m, std::uint64_t n, int i, int j,
                             PowerStats* stats) {
  return matrix_power(m, n, stats).at(i, j);
}

mpz_class determinant(const BigMatrix& m) {
  // Bareiss fraction-free elimination; every division is exact.
  const int n = m.dim();
  BigMatrix a = m;
  mpz_class sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a.at(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      for (int c = k; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

// Enumerates all outgoing protrusion sets reachable from `incoming` by
// covering the column's free cells with verticals or next-column protrusions.
void fill_column(int width, int cell, std::uint32_t covered,
                 std::uint32_t outgoing, std::vector<std::uint32_t>& out) {
  if (cell == width) {
    out.push_back(outgoing);
    return;
  }
  if (covered & (1u << cell)) {
    fill_column(width, cell + 1, covered, outgoing, out);
    return;
  }
  // protrude into the next column
  fill_column(width, cell + 1, covered | (1u << cell), outgoing | (1u << cell),
              out);
  // vertical domino with the cell above
  if (cell + 1 < width && !(covered & (1u << (cell + 1))))
    fill_column(width, cell + 2, covered | (3u << cell), outgoing, out);
}

}  // namespace

ProfileMatrix build_column_transfer(int width) {
  if (width < 1 || width > kMaxProfileWidth)
    throw WidthTooLargeError("profile width " + std::to_string(width) +
                             " outside 1.." + std::to_string(kMaxProfileWidth));
  ProfileMatrix t(width);
  const int size = 1 << width;
  t.rows_.resize(static_cast<std::size_t>(size));
  for (int a = 0; a < size; ++a) {
    auto& row = t.rows_[static_cast<std::size_t>(a)];
    fill_column(width, 0, static_cast<std::uint32_t>(a), 0, row);
    std::sort(row.begin(), row.end());
  }
  return t;
}

std::uint32_t ProfileMatrix::entry(int incoming, int outgoing) const {
  if (incoming < 0 || incoming >= size() || outgoing < 0 ||
      outgoing >= size())
    throw IndexOutOfRangeError("profile index out of range");
  const auto& row = rows_[static_cast<std::size_t>(incoming)];
  return std::binary_search(row.begin(), row.end(),
                            static_cast<std::uint32_t>(outgoing))
             ? 1
             : 0;
}

BigMatrix ProfileMatrix::to_big_matrix() const {
  BigMatrix m(size());
  for (int a = 0; a < size(); ++a)
    for (std::uint32_t b : rows_[static_cast<std::size_t>(a)])
      m.at(a, static_cast<int>(b)) = 1;
  return m;
}

mpz_class count_via_transfer(int width, int cols) {
  if (cols < 0) throw Error("column count must be nonnegative");
  ProfileMatrix t = build_column_transfer(width);
  const int size = t.size();
  std::vector<mpz_class> v(static_cast<std::size_t>(size)), w(v.size());
  v[0] = 1;
  for (int step = 0; step < cols; ++step) {
    for (auto& x : w) x = 0;
    for (int a = 0; a < size; ++a) {
      if (v[static_cast<std::size_t>(a)] == 0) continue;
      for (std::uint32_t b : t.successors(a))
        w[b] += v[static_cast<std::size_t>(a)];
    }
    v.swap(w);
  }
  return v[0];
}

bool CompactMatrix::is_symmetric() const {
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      if (entries_[i][j] != entries_[j][i]) return false;
  return true;
}

long CompactMatrix::trace() const {
  long t = 0;
  for (int i = 0; i < kDim; ++i) t += entries_[i][i];
  return t;
}

BigMatrix CompactMatrix::to_big_matrix() const {
  BigMatrix m(kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) m.at(i, j) = entries_[i][j];
  return m;
}

namespace {

// Row 0 is reconstructed from column 0 via the matrix's symmetry.
constexpr int kCompactEntries[CompactMatrix::kDim][CompactMatrix::kDim] = {
    {13, 5, 3, 4, 3, 5, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1, 1},
    {5, 5, 0, 2, 1, 2, 2, 0, 1, 1, 2, 0, 1, 1, 2, 1, 0, 0, 1, 1},
    {3, 0, 3, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0},
    {4, 2, 0, 4, 0, 2, 2, 0, 2, 1, 2, 0, 2, 1, 1, 1, 0, 0, 0, 1},
    {3, 1, 1, 0, 3, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0},
    {5, 2, 1, 2, 0, 5, 1, 0, 2, 1, 1, 0, 2, 1, 2, 1, 1, 0, 0, 1},
    {2, 2, 0, 2, 0, 1, 4, 0, 1, 2, 2, 0, 1, 2, 1, 1, 0, 0, 0, 1},
    {1, 0, 1, 0, 1, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 1, 0, 2, 0, 2, 1, 0, 4, 2, 1, 0, 2, 1, 1, 2, 0, 0, 0, 1},
    {1, 1, 0, 1, 0, 1, 2, 0, 2, 5, 1, 0, 1, 2, 1, 2, 0, 1, 0, 1},
    {2, 2, 0, 2, 0, 1, 2, 0, 1, 1, 2, 0, 1, 1, 1, 1, 0, 0, 0, 1},
    {1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 1, 0, 2, 0, 2, 1, 0, 2, 1, 1, 0, 2, 1, 1, 1, 0, 0, 0, 1},
    {1, 1, 0, 1, 0, 1, 2, 0, 1, 2, 1, 0, 1, 2, 1, 1, 0, 0, 0, 1},
    {2, 2, 0, 1, 0, 2, 1, 0, 1, 1, 1, 0, 1, 1, 2, 1, 0, 0, 0, 1},
    {1, 1, 0, 1, 0, 1, 1, 0, 2, 2, 1, 0, 1, 1, 1, 2, 0, 0, 0, 1},
    {1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {1, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 0, 1},
};

constexpr char kFixtureHeader[] = "domino-forge compact-matrix v1";

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string matrix_body(const CompactMatrix& c) {
  std::string body;
  for (int i = 0; i < CompactMatrix::kDim; ++i) {
    for (int j = 0; j < CompactMatrix::kDim; ++j) {
      if (j) body += ' ';
      body += std::to_string(c.at(i, j));
    }
    body += '\n';
  }
  return body;
}

}  // namespace

CompactMatrix compact_matrix() {
  CompactMatrix c;
  for (int i = 0; i < CompactMatrix::kDim; ++i)
    for (int j = 0; j < CompactMatrix::kDim; ++j)
      c.set(i, j, kCompactEntries[i][j]);
  return c;
}

std::string compact_matrix_to_fixture(const CompactMatrix& c) {
  std::string body = matrix_body(c);
  char sum[32];
  std::snprintf(sum, sizeof(sum), "%016llx",
                static_cast<unsigned long long>(fnv1a64(body)));
  return std::string(kFixtureHeader) + "\n" + body + "checksum fnv1a64 " +
         sum + "\n";
}

CompactMatrix compact_matrix_from_fixture(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kFixtureHeader)
    throw FixtureError("bad fixture header");
  std::string body;
  CompactMatrix c;
  for (int i = 0; i < CompactMatrix::kDim; ++i) {
    if (!std::getline(in, line))
      throw FixtureError("fixture truncated at row " + std::to_string(i + 1));
    body += line;
    body += '\n';
    std::istringstream row(line);
    for (int j = 0; j < CompactMatrix::kDim; ++j) {
      long v;
      if (!(row >> v) || v < 0)
        throw FixtureError("row " + std::to_string(i + 1) +
                           " is not 20 nonnegative integers");
      c.set(i, j, static_cast<int>(v));
    }
    long extra;
    if (row >> extra)
      throw FixtureError("row " + std::to_string(i + 1) + " has extra entries");
  }
  std::string tag, algo, sum;
  if (!(in >> tag >> algo >> sum) || tag != "checksum" || algo != "fnv1a64")
    throw FixtureError("missing checksum line");
  char expect[32];
  std::snprintf(expect, sizeof(expect), "%016llx",
                static_cast<unsigned long long>(fnv1a64(body)));
  if (sum != expect) throw FixtureError("checksum mismatch");
  return c;
}

CompactMatrix load_compact_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError("cannot open fixture: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return compact_matrix_from_fixture(buf.str());
}

VerifyReport verify_compact(const CompactMatrix& c, int max_index) {
  if (max_index < 1) throw Error("max_index must be at least 1");
  VerifyReport report;
  const BigMatrix base = c.to_big_matrix();
  BigMatrix power = base;
  for (int n = 1; n <= max_index; ++n) {
    if (n > 1) power = power.multiply(base);
    mpz_class expected = count_via_transfer(6, 2 * n);
    const mpz_class& actual = power.at(0, 0);
    ++report.checked;
    if (actual != expected) {
      report.ok = false;
      report.first_mismatch = n;
      report.expected = expected.get_str();
      report.actual = actual.get_str();
      return report;
    }
  }
  return report;
}

}  // namespace domino
