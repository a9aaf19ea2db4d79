#include "cmrt/integer_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cmrt/error.hpp"

namespace cmrt {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  std::size_t lead = s.find_first_not_of(" \t");
  s = lead == std::string::npos ? "" : s.substr(lead);
  std::size_t digits = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits) throw InputError("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = digits; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InputError("not an integer: '" + std::string(text) + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Integer(0));
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.front().size()) : 0;
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Integer>> big;
  for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
  return from_rows(big);
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntegerMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(int target, int source, const Integer& factor) {
  if (factor == 0) return;
  for (int j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntegerMatrix::add_col_multiple(int target, int source, const Integer& factor) {
  if (factor == 0) return;
  for (int i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix dimension mismatch in product");
  IntegerMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::ostream& operator<<(std::ostream& out, const IntegerMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  return out;
}

namespace {

// Tracks the unimodular transforms alongside the working matrix.
struct SmithWork {
  IntegerMatrix a, left, right;
  bool track;

  void swap_rows(int i, int j) {
    a.swap_rows(i, j);
    if (track) left.swap_rows(i, j);
  }
  void swap_cols(int i, int j) {
    a.swap_cols(i, j);
    if (track) right.swap_cols(i, j);
  }
  void add_row(int target, int source, const Integer& f) {
    a.add_row_multiple(target, source, f);
    if (track) left.add_row_multiple(target, source, f);
  }
  void add_col(int target, int source, const Integer& f) {
    a.add_col_multiple(target, source, f);
    if (track) right.add_col_multiple(target, source, f);
  }
  void negate_row(int i) {
    for (int j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
    if (track)
      for (int j = 0; j < left.cols(); ++j) left(i, j) = -left(i, j);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool place_pivot(int t) {
    int best_i = -1, best_j = -1;
    for (int i = t; i < a.rows(); ++i)
      for (int j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        if (best_i < 0 || abs(a(i, j)) < abs(a(best_i, best_j))) {
          best_i = i;
          best_j = j;
        }
      }
    if (best_i < 0) return false;
    swap_rows(t, best_i);
    swap_cols(t, best_j);
    return true;
  }

  void diagonalize() {
    const int n = std::min(a.rows(), a.cols());
    for (int t = 0; t < n; ++t) {
      if (!place_pivot(t)) break;
      while (true) {
        bool clean = true;
        for (int i = t + 1; i < a.rows(); ++i) {
          if (a(i, t) == 0) continue;
          add_row(i, t, -(a(i, t) / a(t, t)));
          if (a(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < a.cols(); ++j) {
          if (a(t, j) == 0) continue;
          add_col(j, t, -(a(t, j) / a(t, t)));
          if (a(t, j) != 0) clean = false;
        }
        if (!clean) {
          // A remainder smaller than the pivot survived; it becomes the new pivot.
          place_pivot(t);
          continue;
        }
        // Row t and column t are clear; enforce divisibility of the remaining block.
        int bad_row = -1;
        for (int i = t + 1; i < a.rows() && bad_row < 0; ++i)
          for (int j = t + 1; j < a.cols(); ++j) {
            if (a(i, j) % a(t, t) != 0) {
              bad_row = i;
              break;
            }
          }
        if (bad_row < 0) break;
        add_row(t, bad_row, 1);
      }
      if (a(t, t) < 0) negate_row(t);
    }
  }
};

SNFResult collect(const IntegerMatrix& a) {
  SNFResult out;
  const int n = std::min(a.rows(), a.cols());
  for (int t = 0; t < n; ++t) {
    out.divisors.push_back(a(t, t));
    if (a(t, t) != 0) {
      ++out.rank;
      out.torsion_order *= a(t, t);
    }
  }
  return out;
}

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& m) {
  SmithWork w{m, {}, {}, false};
  w.diagonalize();
  return collect(w.a);
}

SNFDecomposition smith_decomposition(const IntegerMatrix& m) {
  SmithWork w{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols()), true};
  w.diagonalize();
  return {collect(w.a), std::move(w.left), std::move(w.right)};
}

namespace {

// Bareiss elimination in place; returns the rank and the sign of row swaps.
int bareiss(IntegerMatrix& a, int& swap_sign) {
  swap_sign = 1;
  Integer prev = 1;
  int rank = 0;
  for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      a.swap_rows(pivot, rank);
      swap_sign = -swap_sign;
    }
    for (int i = rank + 1; i < a.rows(); ++i) {
      for (int j = col + 1; j < a.cols(); ++j) {
        a(i, j) = (a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / prev;
      }
      a(i, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace

int matrix_rank(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  int sign;
  return bareiss(a, sign);
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerMatrix a = m;
  int sign;
  if (bareiss(a, sign) < m.rows()) return 0;
  return sign * a(m.rows() - 1, m.cols() - 1);
}

IntegerMatrix read_matrix(std::istream& in) {
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw InputError("matrix input is empty");
  std::istringstream header(lines.front());
  int rows = 0, cols = 0;
  std::string extra;
  if (!(header >> rows >> cols) || rows < 1 || cols < 1 || (header >> extra)) {
    throw InputError("matrix header must be 'rows cols' with positive dimensions");
  }
  if (static_cast<int>(lines.size()) - 1 != rows) {
    throw InputError("expected " + std::to_string(rows) + " matrix rows, got " +
                     std::to_string(lines.size() - 1));
  }
  IntegerMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    std::istringstream ls(lines[i + 1]);
    std::string token;
    int j = 0;
    while (ls >> token) {
      if (j >= cols) throw InputError("too many entries in matrix row " + std::to_string(i + 1));
      m(i, j++) = parse_integer(token);
    }
    if (j != cols) throw InputError("too few entries in matrix row " + std::to_string(i + 1));
  }
  return m;
}

}  // namespace cmrt
