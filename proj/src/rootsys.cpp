#include "rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

#include "errors.hpp"

namespace alcoved {

namespace {

using Edge = std::pair<int, int>;  // 1-based node labels, Bourbaki numbering

IntMatrix simply_laced_gram(int rank, const std::vector<Edge>& edges) {
  IntMatrix g = IntMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) g(i, i) = 2;
  for (auto [a, b] : edges) g(a - 1, b - 1) = g(b - 1, a - 1) = -1;
  return g;
}

std::vector<Edge> chain(int rank) {
  std::vector<Edge> edges;
  for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

bool valid_rank(RootType type, int rank) {
  switch (type) {
    case RootType::A: return rank >= 1;
    case RootType::B: return rank >= 2;
    case RootType::C: return rank >= 2;
    case RootType::D: return rank >= 4;
    case RootType::E: return rank >= 6 && rank <= 8;
    case RootType::F: return rank == 4;
    case RootType::G: return rank == 2;
  }
  return false;
}

IntMatrix gram_matrix(RootType type, int r) {
  switch (type) {
    case RootType::A:
      return simply_laced_gram(r, chain(r));
    case RootType::B: {
      // alpha_1..alpha_{r-1} long (length^2 4), alpha_r short (length^2 2).
      IntMatrix g = IntMatrix::Zero(r, r);
      for (int i = 0; i < r; ++i) g(i, i) = (i == r - 1) ? 2 : 4;
      for (int i = 0; i + 1 < r; ++i) g(i, i + 1) = g(i + 1, i) = -2;
      return g;
    }
    case RootType::C: {
      // alpha_1..alpha_{r-1} short (length^2 2), alpha_r long (length^2 4).
      IntMatrix g = IntMatrix::Zero(r, r);
      for (int i = 0; i < r; ++i) g(i, i) = (i == r - 1) ? 4 : 2;
      for (int i = 0; i + 1 < r; ++i) g(i, i + 1) = g(i + 1, i) = (i + 1 == r - 1) ? -2 : -1;
      return g;
    }
    case RootType::D: {
      auto edges = chain(r - 1);
      edges.emplace_back(r - 2, r);
      return simply_laced_gram(r, edges);
    }
    case RootType::E: {
      std::vector<Edge> edges{{1, 3}, {3, 4}, {4, 5}, {2, 4}};
      for (int i = 5; i < r; ++i) edges.emplace_back(i, i + 1);
      return simply_laced_gram(r, edges);
    }
    case RootType::F: {
      IntMatrix g = IntMatrix::Zero(4, 4);
      g(0, 0) = g(1, 1) = 4;
      g(2, 2) = g(3, 3) = 2;
      g(0, 1) = g(1, 0) = -2;
      g(1, 2) = g(2, 1) = -2;
      g(2, 3) = g(3, 2) = -1;
      return g;
    }
    case RootType::G: {
      IntMatrix g(2, 2);
      g << 2, -3, -3, 6;
      return g;
    }
  }
  throw InvalidArgument("unknown root system type");
}

std::int64_t height(const IntVector& v) { return v.sum(); }

}  // namespace

RootType parse_root_type(std::string_view label) {
  if (label.size() != 1) throw InvalidArgument("root system type must be one letter A-G, got '" + std::string(label) + "'");
  switch (std::toupper(static_cast<unsigned char>(label[0]))) {
    case 'A': return RootType::A;
    case 'B': return RootType::B;
    case 'C': return RootType::C;
    case 'D': return RootType::D;
    case 'E': return RootType::E;
    case 'F': return RootType::F;
    case 'G': return RootType::G;
    default: break;
  }
  throw InvalidArgument("unknown root system type '" + std::string(label) + "'");
}

char type_letter(RootType type) { return "ABCDEFG"[static_cast<int>(type)]; }

std::size_t RootSystem::expected_positive_root_count(RootType type, int n) {
  const auto r = static_cast<std::size_t>(n);
  switch (type) {
    case RootType::A: return r * (r + 1) / 2;
    case RootType::B:
    case RootType::C: return r * r;
    case RootType::D: return r * (r - 1);
    case RootType::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case RootType::F: return 24;
    case RootType::G: return 6;
  }
  return 0;
}

RootSystem RootSystem::build(std::string_view type, int rank) { return build(parse_root_type(type), rank); }

RootSystem RootSystem::build(RootType type, int rank) {
  if (!valid_rank(type, rank))
    throw InvalidArgument(std::string("invalid root system ") + type_letter(type) + std::to_string(rank) +
                          ": not an irreducible crystallographic type");
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.gram_ = gram_matrix(type, rank);
  rs.cartan_ = IntMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const auto num = 2 * rs.gram_(i, j);
      if (num % rs.gram_(j, j) != 0) throw DefectError("non-integral Cartan entry");
      rs.cartan_(i, j) = num / rs.gram_(j, j);
    }

  std::int64_t longest = rs.gram_.diagonal().maxCoeff();
  rs.symmetrizer_.resize(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) rs.symmetrizer_[static_cast<std::size_t>(i)] = longest / rs.gram_(i, i);

  rs.generate_roots();
  if (rs.positive_roots_.size() != expected_positive_root_count(type, rank))
    throw DefectError("positive root count mismatch for " + rs.label());

  rs.theta_index_ = rs.positive_roots_.size() - 1;
  rs.theta_ = rs.positive_roots_.back();
  for (std::size_t i = 0; i + 1 < rs.positive_roots_.size(); ++i)
    if (height(rs.positive_roots_[i]) == height(rs.theta_)) throw DefectError("highest root is not unique");
  rs.marks_ = rs.theta_;
  rs.h_star_ = 1 + rs.marks_.sum();
  rs.index_of_connection_ = std::abs(determinant(rs.cartan_));

  const auto ones = 1 + (rs.marks_.array() == 1).count();
  if (ones != rs.index_of_connection_) throw DefectError("index of connection disagrees with the count of unit marks");

  rs.coroots_.reserve(rs.positive_roots_.size());
  for (const auto& alpha : rs.positive_roots_) {
    const auto norm = rs.form(alpha, alpha);
    IntVector co(rank);
    for (int j = 0; j < rank; ++j) {
      const auto num = 2 * rs.form(alpha, IntVector::Unit(rank, j));
      if (num % norm != 0) throw DefectError("non-integral coroot");
      co(j) = num / norm;
    }
    rs.coroots_.push_back(co);
  }
  rs.theta_covector_ = rs.coroots_[rs.theta_index_];
  rs.cartan_inverse_ = rational_inverse(rs.cartan_);
  return rs;
}

void RootSystem::generate_roots() {
  // Upward closure by root strings: beta + alpha_i is a root iff q > 0 where
  // p - q = <beta, alpha_i^vee> and p is the length of the downward string.
  std::vector<IntVector> all;
  std::unordered_map<IntVector, std::size_t, IntVectorHash, IntVectorEqual> seen;
  std::vector<IntVector> layer;
  for (int i = 0; i < rank_; ++i) {
    IntVector e = IntVector::Unit(rank_, i);
    seen.emplace(e, all.size());
    all.push_back(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<IntVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < rank_; ++i) {
        std::int64_t p = 0;
        IntVector down = beta;
        while (true) {
          down(i) -= 1;
          if (!seen.contains(down)) break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (int k = 0; k < rank_; ++k) pairing += beta(k) * cartan_(k, i);
        if (p - pairing <= 0) continue;
        IntVector up = beta;
        up(i) += 1;
        if (seen.contains(up)) continue;
        seen.emplace(up, all.size());
        all.push_back(up);
        next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const IntVector& a, const IntVector& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return lex_less(b, a);
  });
  positive_roots_ = std::move(all);
  root_lookup_.clear();
  for (std::size_t i = 0; i < positive_roots_.size(); ++i) root_lookup_.emplace(positive_roots_[i], i);
}

std::string RootSystem::label() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

std::int64_t RootSystem::mark(int i) const {
  if (i < 0 || i > rank_) throw InvalidArgument("mark index out of range");
  return i == 0 ? 1 : marks_(i - 1);
}

std::optional<std::size_t> RootSystem::root_index(const IntVector& root) const {
  if (root.size() != rank_) return std::nullopt;
  auto it = root_lookup_.find(root);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::require_positive_root(const IntVector& root) const {
  if (root.size() != rank_) throw InvalidArgument("root has wrong dimension");
  auto idx = root_index(root);
  if (!idx) throw InvalidArgument("not a positive root of " + label());
  return *idx;
}

bool RootSystem::is_root(const IntVector& v) const {
  if (v.size() != rank_) return false;
  if (root_index(v)) return true;
  return root_index(IntVector(-v)).has_value();
}

std::int64_t RootSystem::form(const IntVector& a, const IntVector& b) const { return a.dot(gram_ * b); }

Rational RootSystem::pairing(const QVector& coweight, const IntVector& root) const {
  if (coweight.size() != static_cast<std::size_t>(rank_) || root.size() != rank_)
    throw InvalidArgument("dimension mismatch in pairing");
  return dot(coweight, root);
}

std::int64_t RootSystem::pairing(const IntVector& coweight, const IntVector& root) const {
  if (coweight.size() != rank_ || root.size() != rank_) throw InvalidArgument("dimension mismatch in pairing");
  return coweight.dot(root);
}

QVector RootSystem::coroot_coordinates(const QVector& coweight) const {
  if (coweight.size() != static_cast<std::size_t>(rank_)) throw InvalidArgument("dimension mismatch");
  return apply(cartan_inverse_, coweight);
}

QVector RootSystem::coroot_coordinates(const IntVector& coweight) const {
  return coroot_coordinates(to_rational(coweight));
}

IntVector RootSystem::fundamental_coweight(int i) const {
  if (i < 1 || i > rank_) throw InvalidArgument("fundamental coweight index out of range");
  return IntVector::Unit(rank_, i - 1);
}

}  // namespace alcoved
