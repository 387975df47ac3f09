#include "tropical/map_model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tropical/errors.hpp"

namespace tropical {

bool Atom::references(int var) const {
    return std::find(rhs.begin(), rhs.end(), var) != rhs.end();
}

std::string Atom::str(const std::vector<std::string>& names) const {
    std::string s = names[lhs] + " <= ";
    if (offset != Rational(0)) s += offset.str() + " + ";
    if (rhs.size() == 1) {
        s += names[rhs[0]];
    } else {
        s += "max(" + names[rhs[0]] + ", " + names[rhs[1]] + ")";
    }
    return s;
}

bool MapSystem::pinned(int var) const {
    return std::binary_search(forced_bottom.begin(), forced_bottom.end(), var);
}

MapSystem::Stats MapSystem::stats() const {
    Stats s;
    s.negative_per_var.assign(n(), 0);
    s.positive_per_var.assign(n(), 0);
    for (const Atom& a : atoms) {
        if (a.strictly_negative())
            ++s.negative_per_var[a.lhs];
        else
            ++s.positive_per_var[a.lhs];
    }
    for (std::size_t c : s.negative_per_var) s.max_negative = std::max(s.max_negative, c);
    return s;
}

namespace {

struct LineScanner {
    std::string_view text;
    std::size_t line_no;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(what, line_no, pos + 1);
    }

    std::string ident() {
        skip_space();
        std::size_t start = pos;
        if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos]))))
            fail("expected a variable name");
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    void expect(std::string_view token) {
        skip_space();
        if (text.substr(pos, token.size()) != token)
            fail("expected '" + std::string(token) + "'");
        pos += token.size();
    }

    bool peek(char c) {
        skip_space();
        return pos < text.size() && text[pos] == c;
    }

    Rational number() {
        skip_space();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
            ++pos;
        try {
            return Rational::parse(text.substr(start, pos - start));
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
};

int intern(std::vector<std::string>& names, const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    names.push_back(name);
    return static_cast<int>(names.size() - 1);
}

void normalize_rhs(Atom& atom) {
    std::sort(atom.rhs.begin(), atom.rhs.end());
    atom.rhs.erase(std::unique(atom.rhs.begin(), atom.rhs.end()), atom.rhs.end());
}

}  // namespace

MapSystem parse_atoms(std::string_view text) {
    MapSystem sys;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(begin, end - begin);
        ++line_no;
        begin = end + 1;

        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        LineScanner sc{raw, line_no};
        if (sc.done()) {
            if (end == text.size()) break;
            continue;
        }

        Atom atom;
        atom.lhs = intern(sys.names, sc.ident());
        sc.expect("<=");

        // A leading sign or digit starts the optional offset.
        sc.skip_space();
        if (sc.pos < raw.size() &&
            (raw[sc.pos] == '+' || raw[sc.pos] == '-' ||
             std::isdigit(static_cast<unsigned char>(raw[sc.pos])))) {
            atom.offset = sc.number();
            sc.expect("+");
        }

        std::string first = sc.ident();
        if (first == "max" && sc.peek('(')) {
            sc.expect("(");
            atom.rhs.push_back(intern(sys.names, sc.ident()));
            if (sc.peek(',')) {
                sc.expect(",");
                atom.rhs.push_back(intern(sys.names, sc.ident()));
            }
            sc.expect(")");
        } else {
            atom.rhs.push_back(intern(sys.names, first));
        }
        if (!sc.done()) sc.fail("unexpected trailing token");

        normalize_rhs(atom);
        sys.atoms.push_back(std::move(atom));
        if (end == text.size()) break;
    }
    return sys;
}

MapSystem preprocess(MapSystem sys) {
    std::set<int> pinned(sys.forced_bottom.begin(), sys.forced_bottom.end());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Atom> kept;
        kept.reserve(sys.atoms.size());
        for (Atom atom : sys.atoms) {
            if (pinned.count(atom.lhs)) {
                changed = true;  // trivially true once the left side is -inf
                continue;
            }
            std::erase_if(atom.rhs, [&](int v) { return pinned.count(v) != 0; });
            if (atom.rhs.empty()) {
                pinned.insert(atom.lhs);
                changed = true;
                continue;
            }
            if (atom.references(atom.lhs)) {
                if (!atom.offset.is_negative()) {
                    changed = true;  // tautology
                    continue;
                }
                std::erase(atom.rhs, atom.lhs);
                if (atom.rhs.empty()) {
                    pinned.insert(atom.lhs);
                    changed = true;
                    continue;
                }
                changed = true;
            }
            kept.push_back(std::move(atom));
        }
        sys.atoms = std::move(kept);
    }
    sys.forced_bottom.assign(pinned.begin(), pinned.end());
    return sys;
}

Classification classify(const MapSystem& sys) {
    return sys.stats().max_negative == 0 ? Classification::all_positive
                                         : Classification::has_negative;
}

MapSystem drop_pinned(const MapSystem& sys, std::vector<int>& kept) {
    kept.clear();
    std::vector<int> to_reduced(sys.n(), -1);
    for (std::size_t v = 0; v < sys.n(); ++v) {
        if (sys.pinned(static_cast<int>(v))) continue;
        to_reduced[v] = static_cast<int>(kept.size());
        kept.push_back(static_cast<int>(v));
    }
    MapSystem out;
    for (int v : kept) out.names.push_back(sys.names[v]);
    for (Atom atom : sys.atoms) {
        if (to_reduced[atom.lhs] < 0)
            throw precondition_error("atom with pinned left side survived preprocessing");
        atom.lhs = to_reduced[atom.lhs];
        for (int& v : atom.rhs) {
            if (to_reduced[v] < 0)
                throw precondition_error("atom references a pinned variable");
            v = to_reduced[v];
        }
        out.atoms.push_back(std::move(atom));
    }
    return out;
}

namespace {

Matrix row_list_matrix(const std::vector<std::vector<const Atom*>>& lists, std::size_t step,
                       std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (step < lists[i].size()) {
            const Atom* a = lists[i][step];
            for (int v : a->rhs) m.at(i, v) = Scalar(a->offset);
        } else {
            m.at(i, i) = Scalar::one();
        }
    }
    return m;
}

}  // namespace

MatrixSystem fill_matrices(const MapSystem& sys) {
    if (!sys.forced_bottom.empty())
        throw precondition_error("fill_matrices requires pinned variables to be dropped first");
    const std::size_t n = sys.n();

    std::vector<std::vector<const Atom*>> neg(n), pos(n);
    for (const Atom& a : sys.atoms) {
        if (a.references(a.lhs))
            throw precondition_error("fill_matrices requires a preprocessed system");
        (a.strictly_negative() ? neg : pos)[a.lhs].push_back(&a);
    }
    auto order = [](const Atom* a, const Atom* b) {
        if (a->offset != b->offset) return a->offset < b->offset;
        return a->rhs < b->rhs;
    };
    auto same_row = [](const Atom* a, const Atom* b) {
        return a->offset == b->offset && a->rhs == b->rhs;
    };
    std::size_t depth_neg = 1, depth_pos = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (auto* lists : {&neg, &pos}) {
            auto& l = (*lists)[i];
            std::sort(l.begin(), l.end(), order);
            l.erase(std::unique(l.begin(), l.end(), same_row), l.end());
        }
        depth_neg = std::max(depth_neg, neg[i].size());
        depth_pos = std::max(depth_pos, pos[i].size());
    }

    MatrixSystem ms;
    for (std::size_t step = 0; step < depth_neg; ++step)
        ms.negative.push_back(row_list_matrix(neg, step, n));
    for (std::size_t step = 0; step < depth_pos; ++step)
        ms.positive.push_back(row_list_matrix(pos, step, n));
    return ms;
}

}  // namespace tropical
