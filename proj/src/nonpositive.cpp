#include "tropical/nonpositive.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "tropical/errors.hpp"
#include "tropical/graph.hpp"

namespace tropical {

std::vector<int> free_variables(const Matrix& a) {
    if (a.rows() != a.cols()) throw dimension_error("free_variables requires a square matrix");
    std::vector<int> out;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.row_is_unit(i)) out.push_back(static_cast<int>(i));
    return out;
}

namespace detail {

std::vector<LinRow> rows_of(const Matrix& a) {
    std::vector<LinRow> rows;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.row_is_unit(i)) continue;
        LinRow r;
        r.lhs = static_cast<int>(i);
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_bottom()) r.terms.emplace_back(static_cast<int>(j), a.at(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<LinRow> rows_of(const std::vector<Atom>& atoms, const std::vector<int>* var_to_slot) {
    std::vector<LinRow> rows;
    rows.reserve(atoms.size());
    for (const Atom& a : atoms) {
        LinRow r;
        r.lhs = var_to_slot ? (*var_to_slot)[a.lhs] : a.lhs;
        for (int v : a.rhs)
            r.terms.emplace_back(var_to_slot ? (*var_to_slot)[v] : v, Scalar(a.offset));
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

Scalar row_bound(const LinRow& r, const std::vector<Scalar>& x) {
    Scalar b = Scalar::bottom();
    for (const auto& [v, w] : r.terms) b = b + w * x[v];
    return b;
}

}  // namespace

bool satisfies(const std::vector<Scalar>& x, const std::vector<LinRow>& rows) {
    for (const LinRow& r : rows)
        if (x[r.lhs] > row_bound(r, x)) return false;
    return true;
}

std::vector<Scalar> greatest_subsolution(std::vector<Scalar> x, const std::vector<LinRow>& rows) {
    // Any finite value of the greatest subsolution is reachable from a finite
    // entry of x by an acyclic chain of constraints, so it cannot lie below
    // min(x) minus the total constraint weight. Updates below that line are
    // exact BOTTOMs.
    Scalar base = Scalar::bottom();
    for (const Scalar& v : x) {
        if (v.is_bottom()) continue;
        base = base.is_bottom() ? v : min(base, v);
    }
    if (base.is_bottom()) return x;
    Rational span(1);
    for (const LinRow& r : rows)
        for (const auto& [v, w] : r.terms)
            if (!w.is_bottom()) span = span + w.rational().abs();
    const Scalar floor_value = Scalar(base.rational() - span);

    std::uint64_t updates = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const LinRow& r : rows) {
            Scalar b = row_bound(r, x);
            if (x[r.lhs] > b) {
                x[r.lhs] = b < floor_value ? Scalar::bottom() : b;
                changed = true;
                if (++updates > 20'000'000)
                    throw internal_error("greatest_subsolution failed to converge");
            }
        }
    }
    return x;
}

Matrix permute(const Matrix& a, const std::vector<int>& perm) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t q = 0; q < a.cols(); ++q) out.at(p, q) = a.at(perm[p], perm[q]);
    return out;
}

}  // namespace detail

namespace {

bool has_block_shape(const Matrix& a, std::size_t k) {
    for (std::size_t p = 0; p < k; ++p)
        if (!a.row_is_unit(p)) return false;
    return true;
}

bool vec_leq(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

Stage1Result stage1(const MatrixSystem& ms) {
    if (ms.negative.empty()) throw precondition_error("stage1 requires at least one matrix");
    const Matrix& a1 = ms.negative.front();
    const std::size_t n = a1.rows();

    Stage1Result res;
    res.n = n;
    if (a1.is_identity()) {
        res.outcome = Stage1Result::Outcome::identity_system;
        return res;
    }
    std::vector<int> free = free_variables(a1);
    if (free.empty()) {
        res.outcome = Stage1Result::Outcome::only_bottom;
        return res;
    }

    const std::size_t k = free.size();
    res.k = k;
    res.perm = free;
    std::vector<bool> is_free(n, false);
    for (int v : free) is_free[v] = true;
    for (std::size_t v = 0; v < n; ++v)
        if (!is_free[v]) res.perm.push_back(static_cast<int>(v));

    for (const Matrix& m : ms.negative) {
        Matrix p = detail::permute(m, res.perm);
        if (!has_block_shape(p, k))
            throw internal_error("negative matrix without the free-variable block shape");
        res.folded.push_back(std::move(p));
    }
    res.positive_folded.assign(ms.positive.size(), false);
    for (std::size_t i = 0; i < ms.positive.size(); ++i) {
        Matrix p = detail::permute(ms.positive[i], res.perm);
        if (!has_block_shape(p, k)) continue;
        Matrix c = submatrix(p, k, n, k, n);
        if (has_positive_circuit(c)) continue;
        res.positive_folded[i] = true;
        res.folded.push_back(std::move(p));
    }
    res.folded_count = res.folded.size();

    // Per-matrix saturation C_i* B_i. A unit row imposes nothing within its
    // matrix, and neither does a row whose support chain only leads to unit
    // rows; both must stay neutral in the min instead of contributing the
    // spurious BOTTOM the raw product would produce. The star already encodes
    // reachability, so the affected rows can be read off it.
    UpperMatrix acc(n - k, k);
    for (std::size_t r = 0; r < n - k; ++r)
        for (std::size_t c = 0; c < k; ++c) acc.at(r, c) = UpperScalar::top();
    for (const Matrix& m : res.folded) {
        Matrix b = submatrix(m, k, n, 0, k);
        Matrix c = submatrix(m, k, n, k, n);
        auto star = kleene_star(c);
        if (!star) throw internal_error("folded matrix with no Kleene star");
        Matrix j = *star * b;
        std::vector<bool> unconstrained(n - k, false);
        for (std::size_t r = 0; r < n - k; ++r) unconstrained[r] = m.row_is_unit(k + r);
        for (std::size_t r = 0; r < n - k; ++r) {
            if (unconstrained[r]) continue;
            for (std::size_t w = 0; w < n - k && !unconstrained[r]; ++w)
                if (m.row_is_unit(k + w) && !star->at(r, w).is_bottom()) unconstrained[r] = true;
        }
        for (std::size_t r = 0; r < n - k; ++r) {
            if (unconstrained[r]) continue;
            for (std::size_t col = 0; col < k; ++col)
                acc.at(r, col) = min(acc.at(r, col), UpperScalar::of(j.at(r, col)));
        }
    }
    Matrix jw(n - k, k);
    for (std::size_t r = 0; r < n - k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            if (acc.at(r, c).is_top())
                throw internal_error("bound variable without a constraint in the negative part");
            jw.at(r, c) = acc.at(r, c).clamp(Scalar::bottom());
        }

    // The per-matrix saturations need not solve the folded matrices jointly
    // once the negative part spans several of them; project each column down
    // to the greatest simultaneous solution below it.
    std::vector<detail::LinRow> rows;
    for (const Matrix& m : res.folded) {
        auto r = detail::rows_of(m);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    const std::int64_t kk = static_cast<std::int64_t>(k);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (kk > 1)
    for (std::int64_t j = 0; j < kk; ++j) {
        try {
            std::vector<Scalar> col(n, Scalar::bottom());
            col[j] = Scalar::one();
            for (std::size_t r = 0; r < n - k; ++r) col[k + r] = jw.at(r, j);
            col = detail::greatest_subsolution(std::move(col), rows);
            for (std::size_t p = 0; p < k; ++p)
                if (col[p] != (p == static_cast<std::size_t>(j) ? Scalar::one() : Scalar::bottom()))
                    throw internal_error("projection moved a free component");
            for (std::size_t r = 0; r < n - k; ++r) jw.at(r, j) = col[k + r];
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    res.t_wedge = vstack(Matrix::identity(k), jw);
    for (const Matrix& m : res.folded)
        if (!leq(res.t_wedge, m * res.t_wedge))
            throw internal_error("stage-1 fold is not a solution of the folded subsystem");
    return res;
}

namespace {

std::vector<Scalar> formula_column(const SolutionDescription& d, std::size_t i,
                                   const std::vector<Scalar>& f_col) {
    // [e_i; f; J e_i + K f] as a full permuted vector.
    std::vector<Scalar> x(d.n, Scalar::bottom());
    x[i] = Scalar::one();
    for (std::size_t r = 0; r < d.k - d.k_prime; ++r) x[d.k_prime + r] = f_col[r];
    for (std::size_t r = 0; r < d.n - d.k; ++r) {
        Scalar v = d.j_block.at(r, i);
        for (std::size_t c = 0; c < d.k - d.k_prime; ++c) v = v + d.k_block.at(r, c) * f_col[c];
        x[d.k + r] = v;
    }
    return x;
}

}  // namespace

SolutionDescription stage2(const Stage1Result& s1, const std::vector<Matrix>& positives) {
    if (s1.outcome != Stage1Result::Outcome::ok)
        throw precondition_error("stage2 requires a stage-1 fold");
    const std::size_t n = s1.n, k = s1.k;

    std::vector<Matrix> unfolded;
    for (std::size_t i = 0; i < positives.size(); ++i)
        if (!s1.positive_folded[i]) unfolded.push_back(detail::permute(positives[i], s1.perm));

    // Which stage-1 columns stay free against the unfolded part.
    std::vector<bool> pass(k, true);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Scalar> t = s1.t_wedge.column_vec(i);
        for (const Matrix& a : unfolded) {
            if (vec_leq(t, mul_vec(a, t))) continue;
            pass[i] = false;
            break;
        }
    }
    const std::size_t k_prime = static_cast<std::size_t>(std::count(pass.begin(), pass.end(), true));

    SolutionDescription d;
    d.n = n;
    d.k = k;
    d.k_prime = k_prime;
    d.n_original = n;
    d.kept.resize(n);
    std::iota(d.kept.begin(), d.kept.end(), 0);

    // Free block reordered so surviving columns come first.
    std::vector<int> order2;
    for (std::size_t i = 0; i < k; ++i)
        if (pass[i]) order2.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < k; ++i)
        if (!pass[i]) order2.push_back(static_cast<int>(i));
    d.perm.resize(n);
    for (std::size_t p = 0; p < k; ++p) d.perm[p] = s1.perm[order2[p]];
    for (std::size_t p = k; p < n; ++p) d.perm[p] = s1.perm[p];

    Matrix t(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t p = 0; p < k; ++p)
            t.at(p, c) = s1.t_wedge.at(order2[p], order2[c]);
        for (std::size_t p = k; p < n; ++p) t.at(p, c) = s1.t_wedge.at(p, order2[c]);
    }
    d.t_wedge = t;
    d.j_block = submatrix(t, k, n, 0, k_prime);
    d.k_block = submatrix(t, k, n, k_prime, k);
    d.f_wedge = UpperMatrix(k - k_prime, k_prime);

    auto reorder = [&](const Matrix& a) {
        std::vector<int> full(n);
        for (std::size_t p = 0; p < k; ++p) full[p] = order2[p];
        for (std::size_t p = k; p < n; ++p) full[p] = static_cast<int>(p);
        return detail::permute(a, full);
    };
    for (const Matrix& m : s1.folded) {
        auto r = detail::rows_of(reorder(m));
        d.rows.insert(d.rows.end(), r.begin(), r.end());
    }
    std::vector<Matrix> unfolded2;
    for (const Matrix& m : unfolded) {
        unfolded2.push_back(reorder(m));
        auto r = detail::rows_of(unfolded2.back());
        d.rows.insert(d.rows.end(), r.begin(), r.end());
    }

    Scalar clamp = Scalar::one();
    {
        Rational magnitude(0);
        for (const detail::LinRow& r : d.rows)
            for (const auto& [v, w] : r.terms)
                if (!w.is_bottom()) magnitude = magnitude + w.rational().abs();
        clamp = Scalar(magnitude + Rational(1));
    }
    d.clamp_value = clamp;

    if (k_prime == 0) {
        d.status = SolutionDescription::Status::only_bottom;
        return d;
    }
    if (k_prime == k) {
        d.status = SolutionDescription::Status::complete;
        return d;
    }
    d.status = SolutionDescription::Status::reduced;

    // Greatest parameter bound: per unfolded matrix, block split along
    // (u1 | ubar1 | ubar), stage-2 saturation Z, then the residuated bound
    // [I; K] \ Z, all folded by entrywise min.
    UpperMatrix facc(k - k_prime, k_prime);
    for (std::size_t r = 0; r < k - k_prime; ++r)
        for (std::size_t c = 0; c < k_prime; ++c) facc.at(r, c) = UpperScalar::top();
    const Matrix stacked = vstack(Matrix::identity(k - k_prime), d.k_block);
    for (const Matrix& a : unfolded2) {
        Matrix a21 = submatrix(a, k_prime, k, 0, k_prime);
        Matrix a22 = submatrix(a, k_prime, k, k_prime, k);
        Matrix a23 = submatrix(a, k_prime, k, k, n);
        Matrix a31 = submatrix(a, k, n, 0, k_prime);
        Matrix a32 = submatrix(a, k, n, k_prime, k);
        Matrix a33 = submatrix(a, k, n, k, n);

        Matrix b = vstack(a21 + a23 * d.j_block, a31 + a33 * d.j_block);
        Matrix c(n - k_prime, n - k_prime);
        for (std::size_t i = 0; i < k - k_prime; ++i) {
            for (std::size_t j = 0; j < k - k_prime; ++j) c.at(i, j) = a22.at(i, j);
            for (std::size_t j = 0; j < n - k; ++j) c.at(i, k - k_prime + j) = a23.at(i, j);
        }
        for (std::size_t i = 0; i < n - k; ++i) {
            for (std::size_t j = 0; j < k - k_prime; ++j) c.at(k - k_prime + i, j) = a32.at(i, j);
            for (std::size_t j = 0; j < n - k; ++j)
                c.at(k - k_prime + i, k - k_prime + j) = a33.at(i, j);
        }

        auto star = kleene_star(c);
        Matrix z = star ? *star * b : b;
        facc = entrywise_min(facc, residual(stacked, z));
    }

    // Clamp and project each parameter column so that the column vector
    // [e_i; f_i; J e_i + K f_i] solves the whole system. The all-BOTTOM
    // column always does, which bounds the descent.
    Matrix f(k - k_prime, k_prime);
    for (std::size_t r = 0; r < k - k_prime; ++r)
        for (std::size_t c = 0; c < k_prime; ++c) f.at(r, c) = facc.at(r, c).clamp(clamp);
    for (std::size_t i = 0; i < k_prime; ++i) {
        std::vector<Scalar> f_col(k - k_prime);
        for (std::size_t r = 0; r < k - k_prime; ++r) f_col[r] = f.at(r, i);
        for (int round = 0; round < 64; ++round) {
            std::vector<Scalar> x = formula_column(d, i, f_col);
            if (detail::satisfies(x, d.rows)) break;
            std::vector<Scalar> proj = detail::greatest_subsolution(x, d.rows);
            std::vector<Scalar> next(k - k_prime);
            bool lowered = false;
            for (std::size_t r = 0; r < k - k_prime; ++r) {
                next[r] = proj[k_prime + r];
                if (next[r] < f_col[r]) lowered = true;
            }
            if (!lowered) {
                std::fill(next.begin(), next.end(), Scalar::bottom());
            }
            f_col = std::move(next);
        }
        std::vector<Scalar> x = formula_column(d, i, f_col);
        if (!detail::satisfies(x, d.rows)) {
            std::fill(f_col.begin(), f_col.end(), Scalar::bottom());
            if (!detail::satisfies(formula_column(d, i, f_col), d.rows))
                throw internal_error("surviving column is not a solution");
        }
        for (std::size_t r = 0; r < k - k_prime; ++r)
            d.f_wedge.at(r, i) = UpperScalar::of(f_col[r]);
    }
    return d;
}

namespace {

std::vector<Scalar> to_original(const SolutionDescription& d, const std::vector<Scalar>& x_perm) {
    std::vector<Scalar> reduced(d.n);
    for (std::size_t p = 0; p < d.n; ++p) reduced[d.perm[p]] = x_perm[p];
    if (d.kept.empty() && d.pinned.empty() && d.n_original == d.n) return reduced;
    std::vector<Scalar> out(d.n_original, Scalar::bottom());
    for (std::size_t r = 0; r < d.n; ++r) out[d.kept[r]] = reduced[r];
    return out;
}

}  // namespace

std::vector<Scalar> sup_solution(const SolutionDescription& d, const std::vector<Scalar>& u1) {
    if (d.status == SolutionDescription::Status::only_bottom)
        throw precondition_error("sup_solution on an OnlyBottom system");
    if (u1.size() != d.k_prime) throw dimension_error("sup_solution: wrong parameter arity");

    Matrix f = d.f_wedge.clamp(d.clamp_value);
    std::vector<Scalar> mid = mul_vec(f, u1);
    std::vector<Scalar> x(d.n, Scalar::bottom());
    for (std::size_t i = 0; i < d.k_prime; ++i) x[i] = u1[i];
    for (std::size_t r = 0; r < d.k - d.k_prime; ++r) x[d.k_prime + r] = mid[r];
    std::vector<Scalar> bot_j = mul_vec(d.j_block, u1);
    std::vector<Scalar> bot_k = mul_vec(d.k_block, mid);
    for (std::size_t r = 0; r < d.n - d.k; ++r) x[d.k + r] = bot_j[r] + bot_k[r];
    return to_original(d, x);
}

std::vector<Scalar> sample_solution(const SolutionDescription& d, const std::vector<Scalar>& u1,
                                    const std::vector<Scalar>& diag, const Matrix& f) {
    if (d.status == SolutionDescription::Status::only_bottom)
        throw precondition_error("sample_solution on an OnlyBottom system");
    if (u1.size() != d.k_prime || diag.size() != d.k_prime)
        throw dimension_error("sample_solution: wrong parameter arity");
    if (f.rows() != d.k - d.k_prime || f.cols() != d.k_prime)
        throw dimension_error("sample_solution: wrong parameter shape");
    for (const Scalar& v : diag)
        if (v > Scalar::one()) throw precondition_error("diagonal parameter above the unit");
    if (!leq(f, d.f_wedge)) throw precondition_error("parameter matrix above F^");

    std::vector<Scalar> top(d.k_prime);
    for (std::size_t i = 0; i < d.k_prime; ++i) top[i] = diag[i] * u1[i];
    std::vector<Scalar> mid = mul_vec(f, u1);

    std::vector<Scalar> x(d.n, Scalar::bottom());
    for (std::size_t i = 0; i < d.k_prime; ++i) x[i] = top[i];
    for (std::size_t r = 0; r < d.k - d.k_prime; ++r) x[d.k_prime + r] = mid[r];
    std::vector<Scalar> bot_j = mul_vec(d.j_block, top);
    std::vector<Scalar> bot_k = mul_vec(d.k_block, mid);
    for (std::size_t r = 0; r < d.n - d.k; ++r) x[d.k + r] = bot_j[r] + bot_k[r];

    // Parameters below the bound can still interact (one surviving column's
    // feasibility may lean on another component the draw lowered), so project
    // onto the solution set from above.
    x = detail::greatest_subsolution(std::move(x), d.rows);
    return to_original(d, x);
}

}  // namespace tropical
