#include "gtc/matrix.hpp"

#include <algorithm>

#include "gtc/errors.hpp"

namespace gtc {

FqMatrix transpose(const FqMatrix& A) {
    FqMatrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

FqMatrix mat_mul(const Field& F, const FqMatrix& A, const FqMatrix& B) {
    if (A.cols != B.rows) throw LengthMismatch("matrix product shape mismatch");
    FqMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Elem aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

bool is_zero(const FqMatrix& A) {
    return std::all_of(A.a.begin(), A.a.end(), [](Elem x) { return x == 0; });
}

int row_echelon(const Field& F, FqMatrix& A) {
    int rank = 0;
    for (int col = 0; col < A.cols && rank < A.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < A.rows; ++i)
            if (A.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = col; j < A.cols; ++j) std::swap(A.at(pivot, j), A.at(rank, j));
        const Elem pinv = F.inv(A.at(rank, col));
        for (int j = col; j < A.cols; ++j) A.at(rank, j) = F.mul(pinv, A.at(rank, j));
        for (int i = 0; i < A.rows; ++i) {
            if (i == rank) continue;
            const Elem c = A.at(i, col);
            if (c == 0) continue;
            for (int j = col; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(c, A.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

int rank(const Field& F, FqMatrix A) { return row_echelon(F, A); }

bool in_row_space(const Field& F, const FqMatrix& A, const std::vector<Elem>& v) {
    if (static_cast<int>(v.size()) != A.cols) throw LengthMismatch("vector length != column count");
    FqMatrix stacked(A.rows + 1, A.cols);
    std::copy(A.a.begin(), A.a.end(), stacked.a.begin());
    std::copy(v.begin(), v.end(), stacked.a.begin() + A.a.size());
    return rank(F, stacked) == rank(F, A);
}

bool same_row_space(const Field& F, const FqMatrix& A, const FqMatrix& B) {
    if (A.cols != B.cols) return false;
    FqMatrix stacked(A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), stacked.a.begin());
    std::copy(B.a.begin(), B.a.end(), stacked.a.begin() + A.a.size());
    const int rs = rank(F, stacked);
    return rs == rank(F, A) && rs == rank(F, B);
}

}  // namespace gtc
