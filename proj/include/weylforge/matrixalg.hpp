#pragma once

#include "weylforge/algebra.hpp"

#include <optional>
#include <vector>

namespace weylforge {

/// Matrix over CSD_n(K). Entries do not commute; products keep the
/// left-to-right entry order of the matrix product.
class NCMatrix {
public:
    NCMatrix(std::size_t rows, std::size_t cols, SignaturePtr sig);
    static NCMatrix identity(std::size_t k, SignaturePtr sig);
    static NCMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<NCPoly> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SignaturePtr& sig() const { return sig_; }
    NCPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const NCPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const NCMatrix& a, const NCMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    SignaturePtr sig_;
    std::vector<NCPoly> entries_;
};

/// Entry (i,k) = sum_j A(i,j)*B(j,k), products taken in that order.
NCMatrix mat_mul(const NCMatrix& a, const NCMatrix& b);

/// The 2x2 matrix [[b(t), p_1+...+p_n x^{n-1}],[d(t), q_1+...+q_n x^{n-1}]]
/// when t divides both x^0 parts (p_0 = b(t)t, q_0 = d(t)t); nullopt when the
/// divisibility condition fails.
std::optional<NCMatrix> build_condition_iii_matrix(const NCPoly& p, const NCPoly& q);

/// Left-inverse search with bounded-degree unknown entries: N*M = I is linear
/// in the unknown coefficients; on success M*N = I is verified before
/// returning (one-sided inverses are two-sided here).
std::optional<NCMatrix> left_inverse_ansatz(const NCMatrix& m, const std::vector<unsigned>& bounds);

/// (Minv row 1).(p,q) and (Minv row 2).(p,q); verified to normalize to the
/// generators (t, x); throws when the claimed inverse fails that check.
std::pair<NCPoly, NCPoly> recover_generators(const NCPoly& p, const NCPoly& q,
                                             const NCMatrix& minv);

}  // namespace weylforge
