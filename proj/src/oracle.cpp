#include "tropical/oracle.hpp"

#include <algorithm>
#include <exception>

#include "tropical/errors.hpp"

namespace tropical {

Grid Grid::integers(std::int64_t m) {
    Grid g;
    g.values.push_back(Scalar::bottom());
    for (std::int64_t v = -m; v <= m; ++v) g.values.push_back(Scalar::of(v));
    return g;
}

Grid Grid::for_system(const MapSystem& sys) {
    Rational worst(0);
    for (const Atom& a : sys.atoms) {
        Rational mag = a.offset.abs();
        if (worst < mag) worst = mag;
    }
    // Round up to an integer and add the dimension.
    std::int64_t m = worst.num() / worst.den() + (worst.num() % worst.den() != 0 ? 1 : 0);
    return integers(m + static_cast<std::int64_t>(sys.n()));
}

std::uint64_t Grid::combinations(std::size_t n, std::uint64_t budget) const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > budget / values.size() + 1) throw budget_error("grid too large for budget");
        total *= values.size();
        if (total > budget) throw budget_error("grid too large for budget");
    }
    return total;
}

bool check(const std::vector<Scalar>& x, const MapSystem& sys) {
    if (x.size() != sys.n()) throw dimension_error("check: vector arity mismatch");
    for (int v : sys.forced_bottom)
        if (!x[v].is_bottom()) return false;
    for (const Atom& a : sys.atoms) {
        Scalar rhs = Scalar::bottom();
        for (int v : a.rhs) rhs = rhs + x[v];
        if (x[a.lhs] > Scalar(a.offset) * rhs) return false;
    }
    return true;
}

namespace {

// Enumerate all vectors with a fixed leading value, in place, lexicographic.
void enumerate_suffix(const MapSystem& sys, const Grid& g, std::vector<Scalar>& x,
                      std::size_t depth, std::vector<std::vector<Scalar>>& out) {
    if (depth == x.size()) {
        if (check(x, sys)) out.push_back(x);
        return;
    }
    for (const Scalar& v : g.values) {
        x[depth] = v;
        enumerate_suffix(sys, g, x, depth + 1, out);
    }
}

}  // namespace

std::vector<std::vector<Scalar>> grid_enumerate_serial(const MapSystem& sys, const Grid& g,
                                                       std::uint64_t budget) {
    g.combinations(sys.n(), budget);
    std::vector<std::vector<Scalar>> out;
    std::vector<Scalar> x(sys.n());
    enumerate_suffix(sys, g, x, 0, out);
    return out;
}

std::vector<std::vector<Scalar>> grid_enumerate(const MapSystem& sys, const Grid& g,
                                                std::uint64_t budget) {
    g.combinations(sys.n(), budget);
    if (sys.n() == 0) return grid_enumerate_serial(sys, g, budget);

    // Stripe on the first coordinate; stripes are independent and already
    // sorted, so concatenation preserves the lexicographic order.
    const std::int64_t stripes = static_cast<std::int64_t>(g.values.size());
    std::vector<std::vector<std::vector<Scalar>>> parts(stripes);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < stripes; ++s) {
        try {
            std::vector<Scalar> x(sys.n());
            x[0] = g.values[s];
            enumerate_suffix(sys, g, x, 1, parts[s]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<std::vector<Scalar>> out;
    for (auto& p : parts) {
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    return out;
}

std::string CompletenessReport::summary() const {
    std::string s = "solutions: " + std::to_string(solutions) +
                    ", dominated: " + std::to_string(dominated) +
                    ", represented: " + std::to_string(represented);
    if (!warning.empty()) s += "\nwarning: " + warning;
    return s;
}

CompletenessReport completeness_report(const SolutionDescription& desc, const MapSystem& sys,
                                       const Grid& g, std::uint64_t budget) {
    CompletenessReport rep;
    std::vector<std::vector<Scalar>> sols = grid_enumerate(sys, g, budget);
    rep.solutions = sols.size();

    if (desc.status == SolutionDescription::Status::only_bottom) {
        std::vector<Scalar> bottom(sys.n(), Scalar::bottom());
        for (const auto& x : sols) {
            if (x == bottom) {
                ++rep.dominated;
                ++rep.represented;
            }
        }
        if (rep.dominated != rep.solutions)
            rep.warning = "grid solutions beyond the claimed unique bottom solution";
        return rep;
    }

    // Largest grid value, used as the free-parameter level of the witness
    // when testing exact membership in the parametric family.
    Scalar top_level = g.values.back();

    for (const auto& x : sols) {
        // Free components of x in permuted order.
        std::vector<Scalar> u1(desc.k_prime);
        bool ok = true;
        for (std::size_t i = 0; i < desc.k_prime; ++i) u1[i] = x[desc.kept[desc.perm[i]]];

        std::vector<Scalar> sup = sup_solution(desc, u1);
        for (std::size_t v = 0; v < x.size() && ok; ++v) ok = x[v] <= sup[v];
        if (ok) ++rep.dominated;

        // Exact membership: the identity rows of T^ pin the whole parameter
        // vector, so x is a member iff its bound block reproduces exactly and
        // the non-surviving free components fit under F^ at some admissible
        // parameter level; the largest grid value dominates every other
        // choice.
        std::vector<Scalar> mid(desc.k - desc.k_prime);
        for (std::size_t r = 0; r < mid.size(); ++r)
            mid[r] = x[desc.kept[desc.perm[desc.k_prime + r]]];
        bool member = true;
        for (std::size_t r = 0; r < mid.size() && member; ++r) {
            if (mid[r].is_bottom()) continue;
            bool supported = false;
            for (std::size_t i = 0; i < desc.k_prime && !supported; ++i)
                supported = UpperScalar::of(mid[r]) <=
                            minplus_mul(UpperScalar::of(top_level), desc.f_wedge.at(r, i).clamp(desc.clamp_value));
            member = supported;
        }
        if (member) {
            std::vector<Scalar> bot_j = mul_vec(desc.j_block, u1);
            std::vector<Scalar> bot_k = mul_vec(desc.k_block, mid);
            for (std::size_t r = 0; r < desc.n - desc.k && member; ++r)
                member = x[desc.kept[desc.perm[desc.k + r]]] == bot_j[r] + bot_k[r];
        }
        if (member) {
            for (int p : desc.pinned)
                if (!x[p].is_bottom()) member = false;
        }
        if (member) ++rep.represented;
    }
    if (rep.represented < rep.solutions)
        rep.warning =
            "parametric family reproduces " + std::to_string(rep.represented) + " of " +
            std::to_string(rep.solutions) +
            " grid solutions exactly; the remainder carry slack in bound coordinates and "
            "are dominated instead";
    return rep;
}

}  // namespace tropical
