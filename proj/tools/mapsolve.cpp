#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tropical/errors.hpp"
#include "tropical/oracle.hpp"
#include "tropical/report.hpp"
#include "tropical/solver.hpp"

namespace {

using namespace tropical;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitBudget = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<Scalar> parse_vector(const std::string& text) {
    std::vector<Scalar> out;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find(',', begin);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(begin, end - begin);
        const auto l = item.find_first_not_of(" \t");
        const auto r = item.find_last_not_of(" \t");
        if (l == std::string::npos) throw precondition_error("empty vector component");
        item = item.substr(l, r - l + 1);
        out.push_back(item == "-inf" ? Scalar::bottom() : Scalar(Rational::parse(item)));
        if (end == text.size()) break;
        begin = end + 1;
    }
    return out;
}

std::string vector_str(const std::vector<Scalar>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s;
}

std::uint64_t effective_budget(std::uint64_t flag_value) {
    if (const char* env = std::getenv("TROPICAL_MAP_BUDGET"))
        return std::strtoull(env, nullptr, 10);
    return flag_value;
}

int cmd_solve(const std::string& path, const std::string& format) {
    MapSystem parsed = parse_atoms(read_file(path));
    SolveResult r = solve_system(parsed);
    OutputReport rep = build_report(r);
    if (format == "json")
        std::cout << report_json(rep).dump(2) << "\n";
    else
        std::cout << report_text(rep);
    return kExitOk;
}

int cmd_check(const std::string& path, const std::string& vector_literal,
              const std::string& format) {
    MapSystem parsed = parse_atoms(read_file(path));
    std::vector<Scalar> x = parse_vector(vector_literal);
    if (x.size() != parsed.n())
        throw precondition_error("vector has " + std::to_string(x.size()) + " components, system has " +
                                 std::to_string(parsed.n()));
    bool all_ok = true;
    nlohmann::json violations = nlohmann::json::array();
    std::ostringstream text;
    for (const Atom& a : parsed.atoms) {
        Scalar rhs = Scalar::bottom();
        for (int v : a.rhs) rhs = rhs + x[v];
        Scalar bound = Scalar(a.offset) * rhs;
        if (x[a.lhs] <= bound) continue;
        all_ok = false;
        text << "violated: " << a.str(parsed.names) << "   (" << x[a.lhs].str()
             << " <= " << bound.str() << " fails)\n";
        violations.push_back({{"atom", a.str(parsed.names)},
                              {"lhs", cell_json(UpperScalar::of(x[a.lhs]))},
                              {"bound", cell_json(UpperScalar::of(bound))}});
    }
    if (format == "json") {
        nlohmann::json j;
        j["result"] = all_ok ? "PASS" : "FAIL";
        j["violations"] = violations;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text.str() << (all_ok ? "PASS" : "FAIL") << "\n";
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_sample(const std::string& path, std::size_t count, std::uint64_t seed,
               const std::string& format) {
    MapSystem parsed = parse_atoms(read_file(path));
    SolveResult r = solve_system(parsed);
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Scalar>> vectors;

    if (r.positive) {
        // Random max-plus combinations of the sharp columns.
        const Matrix& sharp = r.positive->sharp;
        std::uniform_int_distribution<int> coeff(-6, 2);
        std::bernoulli_distribution drop(0.4);
        for (std::size_t s = 0; s < count; ++s) {
            std::vector<Scalar> y(sharp.cols(), Scalar::bottom());
            for (std::size_t j = 0; j < y.size(); ++j)
                if (!drop(rng)) y[j] = Scalar::of(coeff(rng));
            std::vector<Scalar> col = mul_vec(sharp, y);
            std::vector<Scalar> widened(parsed.n(), Scalar::bottom());
            for (std::size_t i = 0; i < col.size(); ++i) widened[r.kept[i]] = col[i];
            vectors.push_back(widened);
        }
    } else {
        const SolutionDescription& d = *r.description;
        if (d.status == SolutionDescription::Status::only_bottom) {
            if (count > 0) vectors.push_back(std::vector<Scalar>(parsed.n(), Scalar::bottom()));
        } else {
            std::uniform_int_distribution<int> level(-4, 4);
            std::uniform_int_distribution<int> shift(-3, 0);
            std::bernoulli_distribution drop(0.25);
            for (std::size_t s = 0; s < count; ++s) {
                std::vector<Scalar> u1(d.k_prime), diag(d.k_prime);
                for (std::size_t i = 0; i < d.k_prime; ++i) {
                    u1[i] = drop(rng) ? Scalar::bottom() : Scalar::of(level(rng));
                    diag[i] = Scalar::of(shift(rng));
                }
                Matrix f = d.f_wedge.clamp(d.clamp_value);
                for (std::size_t i = 0; i < f.rows(); ++i)
                    for (std::size_t j = 0; j < f.cols(); ++j)
                        f.at(i, j) = drop(rng) ? Scalar::bottom()
                                               : f.at(i, j) * Scalar::of(shift(rng));
                vectors.push_back(sample_solution(d, u1, diag, f));
            }
        }
    }

    for (const auto& v : vectors)
        if (!check(v, parsed)) throw internal_error("emitted sample fails the direct check");

    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& v : vectors) {
            nlohmann::json row = nlohmann::json::array();
            for (const Scalar& s : v) row.push_back(cell_json(UpperScalar::of(s)));
            j.push_back(row);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& v : vectors) std::cout << vector_str(v) << "\n";
    }
    return kExitOk;
}

int cmd_oracle(const std::string& path, std::int64_t grid_m, std::uint64_t budget,
               const std::string& format) {
    MapSystem parsed = parse_atoms(read_file(path));
    SolveResult r = solve_system(parsed);
    Grid g = grid_m >= 0 ? Grid::integers(grid_m) : Grid::for_system(r.preprocessed);

    if (r.positive) {
        auto sols = grid_enumerate(r.preprocessed, g, budget);
        std::uint64_t column_hits = 0;
        const Matrix& sharp = r.positive->sharp;
        for (std::size_t j = 0; j < sharp.cols(); ++j) {
            std::vector<Scalar> widened(parsed.n(), Scalar::bottom());
            for (std::size_t i = 0; i < sharp.rows(); ++i) widened[r.kept[i]] = sharp.at(i, j).is_bottom() ? Scalar::bottom() : sharp.at(i, j);
            if (check(widened, r.preprocessed)) ++column_hits;
        }
        if (format == "json") {
            nlohmann::json j;
            j["grid_solutions"] = sols.size();
            j["sharp_columns_valid"] = column_hits;
            j["sharp_columns"] = sharp.cols();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "grid solutions: " << sols.size() << "\n"
                      << "sharp columns valid: " << column_hits << "/" << sharp.cols() << "\n";
        }
        return kExitOk;
    }

    CompletenessReport rep = completeness_report(*r.description, r.preprocessed, g, budget);
    if (format == "json") {
        nlohmann::json j;
        j["solutions"] = rep.solutions;
        j["dominated"] = rep.dominated;
        j["represented"] = rep.represented;
        if (!rep.warning.empty()) j["warning"] = rep.warning;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.summary() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"max-plus atom-system solver"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string path, vector_literal;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    std::int64_t grid_m = -1;
    std::uint64_t budget = 10'000'000;

    CLI::App* solve = app.add_subcommand("solve", "solve an atom file");
    solve->fallthrough();
    solve->add_option("file", path)->required();

    CLI::App* chk = app.add_subcommand("check", "check a candidate vector");
    chk->fallthrough();
    chk->add_option("file", path)->required();
    chk->add_option("vector", vector_literal, "comma-separated components, -inf allowed")->required();

    CLI::App* sample = app.add_subcommand("sample", "emit randomized solutions");
    sample->fallthrough();
    sample->add_option("file", path)->required();
    sample->add_option("count", count);
    sample->add_option("--seed", seed);

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive grid comparison");
    oracle->fallthrough();
    oracle->add_option("file", path)->required();
    oracle->add_option("--grid", grid_m, "half-width of the integer grid");
    oracle->add_option("--budget", budget, "enumeration budget");

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return cmd_solve(path, format);
        if (chk->parsed()) return cmd_check(path, vector_literal, format);
        if (sample->parsed()) return cmd_sample(path, count, seed, format);
        return cmd_oracle(path, grid_m, effective_budget(budget), format);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const parse_error& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
