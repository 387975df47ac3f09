#include "tropical/graph.hpp"

#include <algorithm>

#include "tropical/errors.hpp"

namespace tropical {

namespace {

struct Edge {
    int from;
    int to;
    Scalar weight;
};

// Edge j -> i of weight a(i,j) whenever the entry is finite.
std::vector<Edge> edges_of(const Matrix& a) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_bottom())
                edges.push_back({static_cast<int>(j), static_cast<int>(i), a.at(i, j)});
    return edges;
}

// Iterative Tarjan. Returns scc_of with ids in reverse topological order
// (a component is finished before the components it reaches... inverted
// afterwards by the caller).
std::size_t tarjan(const Matrix& a, std::vector<int>& scc_of) {
    const int n = static_cast<int>(a.rows());
    std::vector<std::vector<int>> adj(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (!a.at(i, j).is_bottom()) adj[j].push_back(i);

    scc_of.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    int next_index = 0;
    std::size_t comp = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        scc_of[w] = static_cast<int>(comp);
                    } while (w != f.v);
                    ++comp;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return comp;
}

// Longest-path value iteration restricted to intra-component edges. All
// vertices start at the unit; any improvement after n rounds certifies a
// circuit of positive weight.
bool positive_circuit_by_relaxation(const Matrix& a, const std::vector<int>& scc_of) {
    const std::size_t n = a.rows();
    std::vector<Edge> intra;
    for (const Edge& e : edges_of(a))
        if (scc_of[e.from] == scc_of[e.to]) intra.push_back(e);
    if (intra.empty()) return false;

    std::vector<Scalar> dist(n, Scalar::one());
    for (std::size_t round = 0; round <= n; ++round) {
        bool improved = false;
        for (const Edge& e : intra) {
            Scalar candidate = dist[e.from] * e.weight;
            if (dist[e.to] < candidate) {
                dist[e.to] = candidate;
                improved = true;
            }
        }
        if (!improved) return false;
    }
    return true;
}

// Maximum diagonal entry of A + A^2 + ... + A^n: the weight of the heaviest
// closed walk of length 1..n, whose sign matches the heaviest circuit's.
Scalar heaviest_closed_walk(const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix p = Matrix::identity(n) + a;
    for (std::size_t len = 1; len + 1 < n; len *= 2) p = p * p;
    Matrix walks = a * p;
    Scalar worst = Scalar::bottom();
    for (std::size_t i = 0; i < n; ++i) worst = worst + walks.at(i, i);
    return worst;
}

}  // namespace

bool has_positive_circuit(const Matrix& a) {
    if (a.rows() != a.cols()) throw dimension_error("graph analysis requires a square matrix");
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.at(i, i) > Scalar::one()) return true;
    std::vector<int> scc_of;
    tarjan(a, scc_of);
    return positive_circuit_by_relaxation(a, scc_of);
}

GraphAnalysis analyze_graph(const Matrix& a) {
    if (a.rows() != a.cols()) throw dimension_error("graph analysis requires a square matrix");
    GraphAnalysis g;
    g.scc_count = tarjan(a, g.scc_of);

    // Tarjan finishes sinks first; flip ids so they follow the condensation
    // topologically (sources first).
    for (int& c : g.scc_of) c = static_cast<int>(g.scc_count) - 1 - c;
    g.condensation_order.resize(g.scc_count);
    for (std::size_t c = 0; c < g.scc_count; ++c) g.condensation_order[c] = static_cast<int>(c);

    bool positive = positive_circuit_by_relaxation(a, g.scc_of);
    Scalar worst = a.rows() == 0 ? Scalar::bottom() : heaviest_closed_walk(a);
    if ((worst > Scalar::one()) != positive)
        throw internal_error("circuit-sign detectors disagree");

    if (worst.is_bottom())
        g.circuit_sign = CircuitSign::no_circuit;
    else if (worst > Scalar::one())
        g.circuit_sign = CircuitSign::has_positive;
    else if (worst == Scalar::one())
        g.circuit_sign = CircuitSign::has_zero;
    else
        g.circuit_sign = CircuitSign::all_negative;
    return g;
}

std::optional<Matrix> kleene_star(const Matrix& a) {
    if (a.rows() != a.cols()) throw dimension_error("kleene star requires a square matrix");
    if (has_positive_circuit(a)) return std::nullopt;
    const std::size_t n = a.rows();
    Matrix p = Matrix::identity(n) + a;
    for (std::size_t len = 1; len + 1 < n; len *= 2) p = p * p;
    return p;
}

Matrix saturate(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols()) throw dimension_error("saturate requires a square matrix");
    if (a.rows() != b.rows()) throw dimension_error("saturate: incompatible right-hand side");
    GraphAnalysis g = analyze_graph(a);
    if (g.circuit_sign != CircuitSign::no_circuit && g.circuit_sign != CircuitSign::all_negative)
        throw precondition_error("saturate requires all circuits strictly negative");
    Matrix star = *kleene_star(a);
    Matrix x = star * b;
    if (x != a * x + b) throw internal_error("saturation fixed point check failed");
    return x;
}

}  // namespace tropical
