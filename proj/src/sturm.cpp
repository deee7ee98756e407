#include "qd/sturm.hpp"

#include <stdexcept>

#include "qd/linalg.hpp"

namespace qd {

SturmOperator::SturmOperator(UniPoly p2_, UniPoly r_, Rational kappa_)
    : p2(std::move(p2_)), r(std::move(r_)), kappa(std::move(kappa_)) {
    if (p2.degree() > 2) throw std::invalid_argument("SturmOperator: deg p2 > 2");
    if (r.degree() > 1) throw std::invalid_argument("SturmOperator: deg r > 1");
    if (p2.is_zero()) throw std::invalid_argument("SturmOperator: p2 = 0");
    if (kappa.is_zero()) throw std::invalid_argument("SturmOperator: kappa = 0");
}

UniPoly SturmOperator::apply(const UniPoly& w) const {
    return p2 * w.derivative().derivative() + r * w.derivative() + w * kappa;
}

Rational admissible_kappa(const UniPoly& p2, const UniPoly& r, int n) {
    if (n < 1) throw std::invalid_argument("admissible_kappa: n >= 1 required");
    Rational nn(static_cast<long>(n));
    return -(nn * Rational(static_cast<long>(n - 1)) * p2.coeff(2) + nn * r.coeff(1));
}

std::vector<KernelEntry> polynomial_kernel(const SturmOperator& op, int nmax) {
    if (nmax < 1 || nmax > 512)
        throw std::invalid_argument("polynomial_kernel: nmax must be in 1..512");

    std::vector<KernelEntry> out;
    for (int n = 1; n <= nmax; ++n) {
        if (admissible_kappa(op.p2, op.r, n) != op.kappa) continue;

        /* rows: coefficient of x^j in L[w]; cols: w_i */
        RatMat A(static_cast<size_t>(n) + 1, RatVec(static_cast<size_t>(n) + 1, Rational(0)));
        for (int i = 0; i <= n; ++i) {
            Rational ii(static_cast<long>(i));
            Rational i2 = ii * Rational(static_cast<long>(i - 1));
            auto set = [&](int j, const Rational& v) -> void {
                if (j >= 0 && j <= n) A[static_cast<size_t>(j)][static_cast<size_t>(i)] += v;
            };
            set(i, i2 * op.p22() + ii * op.r1() + op.kappa);
            set(i - 1, i2 * op.p21() + ii * op.r0());
            set(i - 2, i2 * op.p20());
        }

        std::vector<UniPoly> found;
        for (const auto& v : kernel_basis(A)) {
            UniPoly w{std::vector<Rational>(v)};
            if (w.degree() != n) continue;  // lower-degree duplicates surface at their own n
            w = w * (Rational(1) / w.leading());
            if (!op.apply(w).is_zero())
                throw std::logic_error("polynomial_kernel: candidate fails substitution");
            found.push_back(std::move(w));
        }
        for (auto& w : found)
            out.push_back(KernelEntry{n, std::move(w), static_cast<int>(found.size())});
    }
    return out;
}

}  // namespace qd
