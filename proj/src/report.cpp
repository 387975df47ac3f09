#include "tropical/report.hpp"

#include <sstream>

namespace tropical {

namespace {

std::string status_name(const SolutionDescription& d) {
    switch (d.status) {
        case SolutionDescription::Status::only_bottom: return "OnlyBottom";
        case SolutionDescription::Status::complete: return "Complete";
        default: return "Reduced";
    }
}

std::vector<Scalar> bottom_vector(std::size_t n) { return std::vector<Scalar>(n, Scalar::bottom()); }

}  // namespace

OutputReport build_report(const SolveResult& r) {
    OutputReport rep;
    rep.variables = r.preprocessed.names;
    rep.atom_count = r.preprocessed.atoms.size();
    for (int v : r.preprocessed.forced_bottom) rep.pinned.push_back(r.preprocessed.names[v]);
    rep.classification =
        r.classification == Classification::all_positive ? "AllPositive" : "HasNegative";

    if (r.positive) {
        const PositiveSystem& p = *r.positive;
        rep.status = "PositiveSharp";
        rep.nontrivial_columns = p.nontrivial_columns;
        rep.matrices.emplace_back("pseudo_inverse", UpperMatrix::of(p.combined_inverse));
        rep.matrices.emplace_back("inverse_star", UpperMatrix::of(p.inverse_star));
        rep.matrices.emplace_back("sharp", UpperMatrix::of(p.sharp));

        // The all-unit vector solves every positive system; emit it and the
        // non-trivial generator columns, widened back to the original order.
        const std::size_t n = p.sharp.rows();
        std::vector<Scalar> ones(r.preprocessed.n(), Scalar::bottom());
        for (int orig : r.kept) ones[orig] = Scalar::one();
        rep.samples.push_back(ones);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> col = p.sharp.column_vec(j);
            bool trivial = true;
            for (const Scalar& v : col) trivial = trivial && v.is_bottom();
            if (trivial) continue;
            std::vector<Scalar> widened(r.preprocessed.n(), Scalar::bottom());
            for (std::size_t i = 0; i < n; ++i) widened[r.kept[i]] = col[i];
            rep.samples.push_back(widened);
        }
        return rep;
    }

    const SolutionDescription& d = *r.description;
    rep.status = status_name(d);
    for (std::size_t p = 0; p < d.perm.size(); ++p)
        rep.permutation.push_back(r.reduced.names[d.perm[p]]);
    for (std::size_t p = 0; p < d.k; ++p) rep.free_vars.push_back(r.reduced.names[d.perm[p]]);
    for (std::size_t p = 0; p < d.k_prime; ++p)
        rep.surviving.push_back(r.reduced.names[d.perm[p]]);

    if (d.status == SolutionDescription::Status::only_bottom) {
        if (d.k > 0) rep.matrices.emplace_back("T_wedge", UpperMatrix::of(d.t_wedge));
        rep.samples.push_back(bottom_vector(r.preprocessed.n()));
        return rep;
    }

    rep.matrices.emplace_back("T_wedge", UpperMatrix::of(d.t_wedge));
    rep.matrices.emplace_back("J", UpperMatrix::of(d.j_block));
    if (d.status == SolutionDescription::Status::reduced) {
        rep.matrices.emplace_back("K", UpperMatrix::of(d.k_block));
        rep.matrices.emplace_back("F_wedge", d.f_wedge);
    }
    rep.samples.push_back(sup_solution(d, std::vector<Scalar>(d.k_prime, Scalar::one())));
    return rep;
}

nlohmann::json cell_json(const UpperScalar& v) {
    if (v.is_bottom()) return "-inf";
    if (v.is_top()) return "+inf";
    const Rational& q = v.rational();
    if (q.is_integer()) return q.num();
    return q.str();
}

namespace {

nlohmann::json matrix_json(const UpperMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cell_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json vector_json(const std::vector<Scalar>& v) {
    nlohmann::json row = nlohmann::json::array();
    for (const Scalar& s : v) row.push_back(cell_json(UpperScalar::of(s)));
    return row;
}

}  // namespace

nlohmann::json report_json(const OutputReport& rep) {
    nlohmann::json j;
    j["version"] = 1;
    j["classification"] = rep.classification;
    j["status"] = rep.status;
    j["variables"] = rep.variables;
    j["pinned"] = rep.pinned;
    j["permutation"] = rep.permutation;
    j["free"] = rep.free_vars;
    j["surviving"] = rep.surviving;
    j["atom_count"] = rep.atom_count;
    if (rep.status == "PositiveSharp") j["nontrivial_columns"] = rep.nontrivial_columns;
    nlohmann::json mats = nlohmann::json::object();
    for (const auto& [name, m] : rep.matrices) mats[name] = matrix_json(m);
    j["matrices"] = mats;
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : rep.samples) samples.push_back(vector_json(s));
    j["samples"] = samples;
    return j;
}

std::string report_text(const OutputReport& rep) {
    std::ostringstream os;
    os << "classification: " << rep.classification << "\n";
    os << "status: " << rep.status << "\n";
    os << "variables:";
    for (const auto& v : rep.variables) os << " " << v;
    os << "\n";
    os << "atoms: " << rep.atom_count << "\n";
    os << "pinned:";
    if (rep.pinned.empty()) os << " (none)";
    for (const auto& v : rep.pinned) os << " " << v;
    os << "\n";
    if (!rep.free_vars.empty()) {
        os << "free:";
        for (const auto& v : rep.free_vars) os << " " << v;
        os << "\n";
    }
    if (!rep.surviving.empty()) {
        os << "surviving:";
        for (const auto& v : rep.surviving) os << " " << v;
        os << "\n";
    }
    if (!rep.permutation.empty()) {
        os << "permutation:";
        for (const auto& v : rep.permutation) os << " " << v;
        os << "\n";
    }
    if (rep.status == "PositiveSharp")
        os << "nontrivial_columns: " << rep.nontrivial_columns << "\n";
    for (const auto& [name, m] : rep.matrices) {
        os << name << ":\n";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            os << " ";
            for (std::size_t j = 0; j < m.cols(); ++j) os << " " << m.at(i, j).str();
            os << "\n";
        }
    }
    for (const auto& s : rep.samples) {
        os << "sample:";
        for (const Scalar& v : s) os << " " << v.str();
        os << "\n";
    }
    return os.str();
}

}  // namespace tropical
