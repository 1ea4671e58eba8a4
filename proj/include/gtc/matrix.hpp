#pragma once

#include <vector>

#include "gtc/field.hpp"

namespace gtc {

// Dense row-major matrix of field element indices.  Rows/cols may be zero.
struct FqMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    FqMatrix() = default;
    FqMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    Elem at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const FqMatrix&) const = default;
};

FqMatrix transpose(const FqMatrix& A);
FqMatrix mat_mul(const Field& F, const FqMatrix& A, const FqMatrix& B);
bool is_zero(const FqMatrix& A);

// In-place reduction to row echelon form; returns the rank.
int row_echelon(const Field& F, FqMatrix& A);
int rank(const Field& F, FqMatrix A);

// Membership of v in the row space of A.
bool in_row_space(const Field& F, const FqMatrix& A, const std::vector<Elem>& v);
bool same_row_space(const Field& F, const FqMatrix& A, const FqMatrix& B);

}  // namespace gtc
