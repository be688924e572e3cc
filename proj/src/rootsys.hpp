#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linalg.hpp"

namespace alcoved {

enum class RootType { A, B, C, D, E, F, G };

RootType parse_root_type(std::string_view label);
char type_letter(RootType type);

/// Immutable tables for one irreducible crystallographic root system.
///
/// Roots are integer vectors in the simple-root basis. Coweights are vectors
/// in the fundamental-coweight basis, so pairing a coweight with a root is the
/// plain dot product of coordinates. Positive roots are indexed in order of
/// height, then by decreasing lexicographic order, so index i < rank is the
/// simple root alpha_{i+1}.
class RootSystem {
 public:
  /// Throws InvalidArgument for (type, rank) pairs that are not irreducible
  /// crystallographic types (A_n n>=1, B_n n>=2, C_n n>=2, D_n n>=4, E_6..8,
  /// F_4, G_2).
  static RootSystem build(RootType type, int rank);
  static RootSystem build(std::string_view type, int rank);

  RootType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;

  /// cartan()(i, j) = (alpha_i, alpha_j^vee).
  const IntMatrix& cartan() const { return cartan_; }
  /// Integer Gram matrix of the simple roots under an invariant form,
  /// scaled so that every entry is integral.
  const IntMatrix& gram() const { return gram_; }
  /// d_i with d_i * A(i, j) = d_j * A(j, i).
  const std::vector<std::int64_t>& symmetrizer() const { return symmetrizer_; }

  const std::vector<IntVector>& positive_roots() const { return positive_roots_; }
  std::size_t num_positive_roots() const { return positive_roots_.size(); }
  const IntVector& root(std::size_t index) const { return positive_roots_.at(index); }
  std::optional<std::size_t> root_index(const IntVector& root) const;
  /// Throws InvalidArgument if `root` is not a positive root.
  std::size_t require_positive_root(const IntVector& root) const;
  /// True iff `v` is a root (positive or negative).
  bool is_root(const IntVector& v) const;

  const IntVector& theta() const { return theta_; }
  std::size_t theta_index() const { return theta_index_; }
  /// a_i for i in [0, rank]; a_0 = 1.
  std::int64_t mark(int i) const;
  /// a_1..a_r as a vector (length rank).
  const IntVector& marks() const { return marks_; }
  /// 1 + sum of marks.
  std::int64_t h_star() const { return h_star_; }
  /// |det cartan|.
  std::int64_t index_of_connection() const { return index_of_connection_; }

  /// Coweight coordinates of theta^vee.
  const IntVector& theta_covector() const { return theta_covector_; }
  /// Coweight coordinates of alpha^vee for the positive root at `index`.
  const IntVector& coroot(std::size_t index) const { return coroots_.at(index); }
  /// Coweight coordinates of alpha_i^vee (column i of the Cartan matrix), 0-based.
  IntVector simple_coroot(int i) const { return cartan_.col(i); }

  /// Symmetric invariant form on root coordinates.
  std::int64_t form(const IntVector& a, const IntVector& b) const;

  Rational pairing(const QVector& coweight, const IntVector& root) const;
  std::int64_t pairing(const IntVector& coweight, const IntVector& root) const;

  /// Solves cartan * x = y; x are coroot-basis coordinates of the coweight y.
  QVector coroot_coordinates(const QVector& coweight) const;
  QVector coroot_coordinates(const IntVector& coweight) const;

  /// (1, ..., 1) in coweight coordinates.
  IntVector rho() const { return IntVector::Ones(rank_); }
  IntVector fundamental_coweight(int i) const;  // 1-based

  /// Known number of positive roots for the type, used as a consistency check.
  static std::size_t expected_positive_root_count(RootType type, int rank);

 private:
  RootSystem() = default;
  void generate_roots();

  RootType type_ = RootType::A;
  int rank_ = 0;
  IntMatrix gram_;
  IntMatrix cartan_;
  std::vector<std::int64_t> symmetrizer_;
  std::vector<IntVector> positive_roots_;
  std::unordered_map<IntVector, std::size_t, IntVectorHash, IntVectorEqual> root_lookup_;
  IntVector theta_;
  std::size_t theta_index_ = 0;
  IntVector marks_;
  std::int64_t h_star_ = 0;
  std::int64_t index_of_connection_ = 0;
  IntVector theta_covector_;
  std::vector<IntVector> coroots_;
  QMatrix cartan_inverse_;
};

}  // namespace alcoved
