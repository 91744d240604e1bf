#include "weylforge/matrixalg.hpp"

#include "weylforge/systems.hpp"

#include <functional>

#include <stdexcept>

namespace weylforge {

NCMatrix::NCMatrix(std::size_t rows, std::size_t cols, SignaturePtr sig)
    : rows_(rows), cols_(cols), sig_(std::move(sig)) {
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("NCMatrix: empty shape");
    entries_.assign(rows_ * cols_, NCPoly(sig_));
}

NCMatrix NCMatrix::identity(std::size_t k, SignaturePtr sig) {
    NCMatrix m(k, k, sig);
    for (std::size_t i = 0; i < k; ++i)
        m.at(i, i) = NCPoly::scalar(sig, FracElem(Rational(1)));
    return m;
}

NCMatrix NCMatrix::from_entries(std::size_t rows, std::size_t cols, std::vector<NCPoly> entries) {
    if (entries.empty() || entries.size() != rows * cols)
        throw std::invalid_argument("NCMatrix: entry count mismatch");
    NCMatrix m(rows, cols, entries.front().sig());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (!(*entries[k].sig() == *m.sig_))
            throw std::invalid_argument("NCMatrix: signature mismatch among entries");
        m.entries_[k] = std::move(entries[k]);
    }
    return m;
}

NCMatrix mat_mul(const NCMatrix& a, const NCMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    if (!(*a.sig() == *b.sig())) throw std::invalid_argument("mat_mul: signature mismatch");
    NCMatrix out(a.rows(), b.cols(), a.sig());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < b.cols(); ++k) {
            NCPoly acc(a.sig());
            for (std::size_t j = 0; j < a.cols(); ++j) acc += nc_mul(a.at(i, j), b.at(j, k));
            out.at(i, k) = std::move(acc);
        }
    return out;
}

std::optional<NCMatrix> build_condition_iii_matrix(const NCPoly& p, const NCPoly& q) {
    if (!p.sig()->is_weyl())
        throw std::invalid_argument("build_condition_iii_matrix: Signature must be A_1");
    SignaturePtr sig = p.sig();
    NCPoly b(sig), rp(sig), d(sig), rq(sig);
    auto split = [&](const NCPoly& f, NCPoly& head, NCPoly& rest) -> bool {
        for (const auto& [e, c] : f.terms()) {
            if (e[1] == 0) {
                if (e[0] == 0) return false;  // t does not divide the x^0 part
                head.add_term(ExpVec{e[0] - 1, 0}, c);
            } else {
                rest.add_term(ExpVec{e[0], e[1] - 1}, c);
            }
        }
        return true;
    };
    if (!split(p, b, rp) || !split(q, d, rq)) return std::nullopt;
    return NCMatrix::from_entries(2, 2, {b, rp, d, rq});
}

std::optional<NCMatrix> left_inverse_ansatz(const NCMatrix& m, const std::vector<unsigned>& bounds) {
    if (m.rows() != m.cols()) throw std::invalid_argument("left_inverse_ansatz: matrix not square");
    const std::size_t k = m.rows();
    const SignaturePtr& sig = m.sig();
    const int n = sig->n();
    if (bounds.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("left_inverse_ansatz: one degree cap per variable");

    // bounded standard monomials
    std::vector<ExpVec> monos;
    {
        ExpVec cur(static_cast<std::size_t>(n), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t idx) {
            if (idx == bounds.size()) {
                monos.push_back(cur);
                return;
            }
            for (unsigned e = 0; e <= bounds[idx]; ++e) {
                cur[idx] = e;
                rec(idx + 1);
            }
            cur[idx] = 0;
        };
        rec(0);
    }

    NCMatrix inverse(k, k, sig);
    // row i of N solves sum_j N(i,j) M(j,c) = delta_ic; rows are independent
    for (std::size_t i = 0; i < k; ++i) {
        UnknownCatalog catalog;
        std::vector<std::pair<std::size_t, ExpVec>> slots;  // (column j, monomial)
        std::vector<NCPoly> residuals;
        for (std::size_t c = 0; c < k; ++c) {
            NCPoly r(sig);
            if (i == c) r -= NCPoly::scalar(sig, FracElem(Rational(1)));
            residuals.push_back(std::move(r));
        }
        for (std::size_t j = 0; j < k; ++j) {
            for (const ExpVec& mono : monos) {
                std::string name = "u" + std::to_string(catalog.names.size());
                catalog.names.push_back(name);
                slots.emplace_back(j, mono);
                NCPoly base = NCPoly::monomial(sig, mono, FracElem::parameter(name));
                for (std::size_t c = 0; c < k; ++c)
                    residuals[c] += nc_mul(base, m.at(j, c));
            }
        }
        EqSystem sys;
        for (const NCPoly& r : residuals)
            for (const auto& [e, coef] : r.terms()) sys.equations.push_back(coef.num());
        SolveResult sol = linear_solve_exact(sys, catalog);
        if (!sol.is_assignment()) return std::nullopt;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            auto it = sol.assignment().values.find(catalog.names[s]);
            FracElem value = it != sol.assignment().values.end() ? it->second
                                                                 : FracElem(Rational(0));
            for (const std::string& freev : sol.free)
                value = value.substitute({{freev, Rational(0)}});
            inverse.at(i, slots[s].first).add_term(slots[s].second, value);
        }
    }
    NCMatrix id = NCMatrix::identity(k, sig);
    if (!(mat_mul(inverse, m) == id)) return std::nullopt;
    if (!(mat_mul(m, inverse) == id)) return std::nullopt;  // two-sidedness, asserted
    return inverse;
}

std::pair<NCPoly, NCPoly> recover_generators(const NCPoly& p, const NCPoly& q,
                                             const NCMatrix& minv) {
    if (minv.rows() != 2 || minv.cols() != 2)
        throw std::invalid_argument("recover_generators: need a 2x2 inverse");
    SignaturePtr sig = p.sig();
    NCPoly t_rec = nc_mul(minv.at(0, 0), p) + nc_mul(minv.at(0, 1), q);
    NCPoly x_rec = nc_mul(minv.at(1, 0), p) + nc_mul(minv.at(1, 1), q);
    if (t_rec != NCPoly::generator(sig, 0) || x_rec != NCPoly::generator(sig, 1))
        throw std::runtime_error("recover_generators: claimed inverse does not recover (t, x)");
    return {t_rec, x_rec};
}

}  // namespace weylforge
