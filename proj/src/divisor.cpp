#include "gtcomb/divisor.hpp"

#include <stdexcept>
#include <utility>

namespace gtcomb {

DivisorBasis::DivisorBasis(std::string name, int complex_dim,
                           std::vector<DivisorClass> classes,
                           std::vector<std::vector<Rat>> pairing)
    : name_(std::move(name)),
      complex_dim_(complex_dim),
      classes_(std::move(classes)),
      pairing_(std::move(pairing)) {
  const size_t n = classes_.size();
  if (pairing_.size() != n)
    throw std::invalid_argument("DivisorBasis: pairing matrix has wrong size");
  for (size_t i = 0; i < n; ++i) {
    if (pairing_[i].size() != n)
      throw std::invalid_argument("DivisorBasis: pairing matrix is not square");
    for (size_t j = 0; j < n; ++j) {
      if (pairing_[i][j] != pairing_[j][i])
        throw std::invalid_argument("DivisorBasis: pairing is not symmetric");
      if (pairing_[i][j] != 0 &&
          classes_[i].degree + classes_[j].degree != complex_dim_)
        throw std::invalid_argument(
            "DivisorBasis: nonzero pairing between classes of non-complementary "
            "degree");
    }
  }
}

const Rat& DivisorBasis::pairing(int i, int j) const {
  return pairing_.at(i).at(j);
}

int DivisorBasis::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (classes_[i].label == label) return i;
  throw std::invalid_argument("DivisorBasis '" + name_ + "': no class '" +
                              label + "'");
}

const DivisorBasis& DivisorBasis::point() {
  static const DivisorBasis b("point", 0, {{"pt", 0}}, {{Rat(1)}});
  return b;
}

const DivisorBasis& DivisorBasis::line() {
  static const DivisorBasis b("line", 1, {{"pt", 0}, {"L", 1}},
                              {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  return b;
}

HomologyWord make_word(const DivisorBasis& basis,
                       const std::vector<std::string>& labels) {
  HomologyWord w;
  w.basis = &basis;
  w.letters.reserve(labels.size());
  for (const auto& l : labels) w.letters.push_back(basis.index_of(l));
  return w;
}

ClassPairSum kunneth_diagonal(const DivisorBasis& basis) {
  const int n = basis.size();
  // Invert the pairing matrix by Gauss-Jordan over exact rationals.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = basis.pairing(i, j);
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0)
      throw std::domain_error("kunneth_diagonal: singular pairing on basis '" +
                              basis.name() + "'");
    std::swap(m[col], m[pivot]);
    Rat lead = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= lead;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat factor = m[row][col];
      for (int j = 0; j < 2 * n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  // e_i^dual = sum_j inv[j][i] e_j, so that pairing(e_i^dual, e_k) = delta_ik.
  ClassPairSum out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat c = m[j][n + i];
      if (c != 0) out.push_back({i, j, c});
    }
  return out;
}

}  // namespace gtcomb
