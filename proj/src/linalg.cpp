#include "qd/linalg.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace qd {

namespace {

struct Echelon {
    std::vector<std::vector<mpz_class>> m;  // row echelon, integer entries
    std::vector<int> pivot_cols;            // ascending
    int rows = 0;
    int cols = 0;
};

/* Fraction-free (Bareiss) row echelon form. Rows are first scaled by the
 * lcm of their denominators so all arithmetic stays in Z; the two-step
 * update (a*p - b*c)/prev divides exactly by Sylvester's identity. */
Echelon echelon_form(const RatMat& A) {
    Echelon e;
    e.rows = static_cast<int>(A.size());
    e.cols = e.rows ? static_cast<int>(A[0].size()) : 0;
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != e.cols)
            throw std::invalid_argument("echelon_form: ragged matrix");

    e.m.assign(static_cast<size_t>(e.rows), {});
    for (int i = 0; i < e.rows; ++i) {
        mpz_class l = 1;
        for (const auto& v : A[static_cast<size_t>(i)]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
        auto& out = e.m[static_cast<size_t>(i)];
        out.resize(static_cast<size_t>(e.cols));
        for (int j = 0; j < e.cols; ++j) {
            const Rational& v = A[static_cast<size_t>(i)][static_cast<size_t>(j)];
            out[static_cast<size_t>(j)] = v.num() * (l / v.den());
        }
    }

    mpz_class prev = 1;
    int rank = 0;
    for (int col = 0; col < e.cols && rank < e.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < e.rows; ++i)
            if (e.m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(e.m[static_cast<size_t>(rank)], e.m[static_cast<size_t>(piv)]);
        const auto& prow = e.m[static_cast<size_t>(rank)];
        for (int i = rank + 1; i < e.rows; ++i) {
            auto& row = e.m[static_cast<size_t>(i)];
            mpz_class head = row[static_cast<size_t>(col)];
            for (int j = col + 1; j < e.cols; ++j) {
                mpz_class t = prow[static_cast<size_t>(col)] * row[static_cast<size_t>(j)]
                            - head * prow[static_cast<size_t>(j)];
                mpz_divexact(row[static_cast<size_t>(j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            row[static_cast<size_t>(col)] = 0;
        }
        prev = prow[static_cast<size_t>(col)];
        e.pivot_cols.push_back(col);
        ++rank;
    }
    return e;
}

/* Solve the echelon rows for the pivot variables given fixed values of
 * the free variables already placed in v. */
void back_substitute(const Echelon& e, RatVec& v) {
    for (int t = static_cast<int>(e.pivot_cols.size()) - 1; t >= 0; --t) {
        int pc = e.pivot_cols[static_cast<size_t>(t)];
        const auto& row = e.m[static_cast<size_t>(t)];
        Rational acc(0);
        for (int j = pc + 1; j < e.cols; ++j) {
            if (row[static_cast<size_t>(j)] == 0) continue;
            acc += Rational(mpq_class(row[static_cast<size_t>(j)])) * v[static_cast<size_t>(j)];
        }
        v[static_cast<size_t>(pc)] = -acc / Rational(mpq_class(row[static_cast<size_t>(pc)]));
    }
}

}  // namespace

std::vector<RatVec> kernel_basis(const RatMat& A) {
    if (A.empty()) return {};
    Echelon e = echelon_form(A);
    std::vector<bool> is_pivot(static_cast<size_t>(e.cols), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<RatVec> basis;
    for (int f = 0; f < e.cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        RatVec v(static_cast<size_t>(e.cols), Rational(0));
        v[static_cast<size_t>(f)] = Rational(1);
        back_substitute(e, v);
        basis.push_back(std::move(v));
    }
    return basis;
}

int matrix_rank(const RatMat& A) {
    if (A.empty()) return 0;
    return static_cast<int>(echelon_form(A).pivot_cols.size());
}

std::optional<RatVec> solve_particular(const RatMat& A, const RatVec& b) {
    if (A.size() != b.size()) throw std::invalid_argument("solve_particular: size mismatch");
    if (A.empty()) return RatVec{};
    int n = static_cast<int>(A[0].size());
    RatMat aug = A;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon e = echelon_form(aug);
    /* a pivot in the appended column means the system is inconsistent */
    for (int c : e.pivot_cols)
        if (c == n) return std::nullopt;
    RatVec full(static_cast<size_t>(n) + 1, Rational(0));
    full[static_cast<size_t>(n)] = Rational(-1);  // move b to the left-hand side
    back_substitute(e, full);
    full.pop_back();
    return full;
}

}  // namespace qd
