#pragma once

#include <string>
#include <vector>

#include "common/matrix.hpp"
#include "tensor_core/ops.hpp"
#include "tensor_core/signature.hpp"

namespace holant {

// left[i] corresponds to right[correspondence[i]]; corresponding arities agree.
template <Scalar T>
class SimilarPair {
 public:
  SimilarPair() = default;
  SimilarPair(std::vector<Signature<T>> left, std::vector<Signature<T>> right, std::vector<int> correspondence = {})
      : left_(std::move(left)), right_(std::move(right)), correspondence_(std::move(correspondence)) {
    if (correspondence_.empty()) {
      for (std::size_t i = 0; i < left_.size(); ++i) correspondence_.push_back(static_cast<int>(i));
    }
    validate();
  }

  const std::vector<Signature<T>>& left() const { return left_; }
  const std::vector<Signature<T>>& right() const { return right_; }
  const std::vector<int>& correspondence() const { return correspondence_; }
  std::size_t size() const { return left_.size(); }
  int domain() const { return left_.empty() ? (right_.empty() ? 1 : right_[0].domain()) : left_[0].domain(); }

  const Signature<T>& partner(std::size_t i) const { return right_[static_cast<std::size_t>(correspondence_[i])]; }

  // right side reordered so that index i on both sides corresponds
  std::vector<Signature<T>> aligned_right() const {
    std::vector<Signature<T>> out;
    for (std::size_t i = 0; i < left_.size(); ++i) out.push_back(partner(i));
    return out;
  }

  SimilarPair swapped() const { return SimilarPair(aligned_right(), left_); }

 private:
  void validate() const {
    require(left_.size() == right_.size(), ErrorCode::invariant,
            "similar-pair violation: sides have " + std::to_string(left_.size()) + " and " +
                std::to_string(right_.size()) + " signatures");
    validate_permutation(correspondence_, static_cast<int>(left_.size()));
    const int q = domain();
    for (std::size_t i = 0; i < left_.size(); ++i) {
      require(left_[i].domain() == q && partner(i).domain() == q, ErrorCode::invariant,
              "similar-pair violation: signatures over different domains");
      require(left_[i].arity() == partner(i).arity(), ErrorCode::invariant,
              "similar-pair violation: signature " + std::to_string(i) + " has arity " +
                  std::to_string(left_[i].arity()) + " but its partner has arity " +
                  std::to_string(partner(i).arity()));
    }
  }

  std::vector<Signature<T>> left_;
  std::vector<Signature<T>> right_;
  std::vector<int> correspondence_;
};

template <Scalar To, Scalar From>
SimilarPair<To> convert(const SimilarPair<From>& p) {
  return SimilarPair<To>(convert<To>(p.left()), convert<To>(p.right()), p.correspondence());
}

// q x q with ‖HᵀH − I‖_max ≤ tol.
struct OrthogonalMap {
  Matrix<double> matrix;
  double tol = kDefaultTol;

  static OrthogonalMap checked(Matrix<double> h, double tol = kDefaultTol) {
    require(h.square(), ErrorCode::dimension_mismatch, "orthogonal map must be square");
    require(orthogonality_error(h) <= tol, ErrorCode::invariant, "matrix is not orthogonal within tolerance");
    return OrthogonalMap{std::move(h), tol};
  }

  int domain() const { return static_cast<int>(matrix.rows()); }
};

}  // namespace holant
