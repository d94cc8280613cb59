#pragma once

#include <complex>
#include <vector>

namespace blowup {

// Dense square complex matrix, row-major.
class ComplexMatrix {
  public:
    using value_type = std::complex<double>;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

    int dim() const { return dim_; }
    value_type& at(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const value_type& at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    // Max absolute row sum.
    double norm_inf() const;

    std::vector<value_type> apply(const std::vector<value_type>& x) const;

    bool all_finite() const;

  private:
    int dim_ = 0;
    std::vector<value_type> a_;
};

}  // namespace blowup
