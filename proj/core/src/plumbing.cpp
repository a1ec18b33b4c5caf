#include "qtl/plumbing/plumbing.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qtl::plumbing {

using json = nlohmann::json;

std::vector<int> PlumbingGraph::degrees() const
{
    std::vector<int> d(weights.size(), 0);
    for (auto [i, j] : edges) {
        ++d[i];
        ++d[j];
    }
    return d;
}

PlumbingGraph make_graph(std::vector<long> weights, std::vector<std::pair<int, int>> edges)
{
    const int n = static_cast<int>(weights.size());
    if (n == 0) fail(ErrorCode::invalid_input, "plumbing graph has no vertices");
    std::set<std::pair<int, int>> seen;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            fail(ErrorCode::invalid_input, "edge [" + std::to_string(i) + "," + std::to_string(j) + "] references a missing vertex");
        if (i == j) fail(ErrorCode::self_loop, "self-loop at vertex " + std::to_string(i));
        auto key = std::minmax(i, j);
        if (!seen.insert(key).second)
            fail(ErrorCode::duplicate_edge, "duplicate edge [" + std::to_string(key.first) + "," + std::to_string(key.second) + "]");
    }
    for (auto [i, j] : edges) {
        int a = find(i), b = find(j);
        if (a == b) fail(ErrorCode::cycle, "cycle detected at edge [" + std::to_string(i) + "," + std::to_string(j) + "]");
        parent[a] = b;
    }
    for (int v = 1; v < n; ++v)
        if (find(v) != find(0)) fail(ErrorCode::disconnected, "graph is disconnected (vertex " + std::to_string(v) + ")");
    return PlumbingGraph{std::move(weights), std::move(edges)};
}

PlumbingGraph parse_plumbing_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::invalid_input, std::string("malformed plumbing JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        fail(ErrorCode::invalid_input, "plumbing JSON needs a \"vertices\" array");
    std::vector<long> weights;
    for (auto& w : doc["vertices"]) {
        if (!w.is_number_integer()) fail(ErrorCode::bad_weight, "vertex weight " + w.dump() + " is not an integer");
        weights.push_back(w.get<long>());
    }
    std::vector<std::pair<int, int>> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) fail(ErrorCode::invalid_input, "\"edges\" must be an array");
        for (auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                fail(ErrorCode::invalid_input, "edge " + e.dump() + " must be a pair of vertex indices");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    return make_graph(std::move(weights), std::move(edges));
}

PlumbingGraph parse_plumbing(std::string_view input)
{
    size_t i = 0;
    while (i < input.size() && std::isspace(static_cast<unsigned char>(input[i]))) ++i;
    if (i < input.size() && input[i] == '{') return parse_plumbing_json(input);
    std::ifstream in{std::string(input)};
    if (!in) fail(ErrorCode::invalid_input, "cannot open plumbing file '" + std::string(input) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_plumbing_json(buf.str());
}

std::string to_json(const PlumbingGraph& g)
{
    json doc;
    doc["vertices"] = g.weights;
    json e = json::array();
    for (auto [i, j] : g.edges) e.push_back({i, j});
    doc["edges"] = e;
    return doc.dump();
}

IntMatrix linking_matrix(const PlumbingGraph& g)
{
    IntMatrix b(g.size(), g.size());
    for (int i = 0; i < g.size(); ++i) b(i, i) = g.weights[i];
    for (auto [i, j] : g.edges) b(i, j) = b(j, i) = 1;
    return b;
}

LinkingData linking_data(const PlumbingGraph& g)
{
    IntMatrix b = linking_matrix(g);
    int bad = failing_minor_index(b);
    if (bad != 0)
        throw DefinitenessError(bad, "linking matrix is not negative definite (leading minor " + std::to_string(bad) + ")");
    return LinkingData(g);
}

LinkingData::LinkingData(const PlumbingGraph& g) : graph_(g), b_(linking_matrix(g))
{
    auto inv = inverse(b_.smith().U);
    u_inverse_ = IntMatrix(size(), size());
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) u_inverse_(i, j) = inv(i, j).get_num();
    delta_ = graph_.degrees();
    trace_ = 0;
    for (long w : graph_.weights) trace_ += w;
}

std::vector<Integer> LinkingData::smith_coordinates(const std::vector<Integer>& x) const { return b_.smith().U.apply(x); }

std::vector<Integer> LinkingData::from_smith_coordinates(const std::vector<Integer>& y) const { return u_inverse_.apply(y); }

namespace {

// Calls fn(z) for every z with 0 <= z_i < bound_i.
void for_each_box(const std::vector<Integer>& bound, const std::function<void(const std::vector<Integer>&)>& fn)
{
    std::vector<Integer> z(bound.size(), 0);
    for (;;) {
        fn(z);
        size_t i = z.size();
        while (i-- > 0) {
            if (++z[i] < bound[i]) break;
            z[i] = 0;
        }
        if (i == size_t(-1)) return;
    }
}

std::vector<Integer> smith_diagonal(const LinkingData& L)
{
    std::vector<Integer> d(L.size());
    for (int i = 0; i < L.size(); ++i) d[i] = L.B().smith().D(i, i);
    return d;
}

}  // namespace

std::vector<std::vector<Integer>> LinkingData::homology_elements() const
{
    std::vector<std::vector<Integer>> out;
    for_each_box(smith_diagonal(*this), [&](const std::vector<Integer>& z) { out.push_back(from_smith_coordinates(z)); });
    return out;
}

SpincClass canonical_class(const LinkingData& L, const std::vector<Integer>& l)
{
    if (static_cast<int>(l.size()) != L.size()) fail(ErrorCode::invalid_input, "Spin^c vector has the wrong length");
    for (int i = 0; i < L.size(); ++i)
        if (!mpz_even_p(Integer(l[i] - L.delta()[i]).get_mpz_t()))
            fail(ErrorCode::invalid_input, "vector is not in delta + 2Z^V");
    auto d = smith_diagonal(L);
    auto y = L.smith_coordinates(l);
    for (size_t i = 0; i < y.size(); ++i) y[i] = mod(y[i], 2 * d[i]);
    SpincClass c;
    c.key = y;
    c.representative = L.from_smith_coordinates(y);
    // fixed by negation iff B^{-1} l is integral
    c.stabilizer_order = 2;
    auto binv = L.B().inverse().apply(std::vector<Rational>(c.representative.begin(), c.representative.end()));
    for (auto& v : binv)
        if (v.get_den() != 1) c.stabilizer_order = 1;
    return c;
}

std::vector<SpincClass> spinc_classes(const LinkingData& L)
{
    std::vector<SpincClass> out;
    for_each_box(smith_diagonal(L), [&](const std::vector<Integer>& z) {
        auto x = L.from_smith_coordinates(z);
        std::vector<Integer> l(L.size());
        for (int i = 0; i < L.size(); ++i) l[i] = L.delta()[i] + 2 * x[i];
        out.push_back(canonical_class(L, l));
    });
    std::sort(out.begin(), out.end(), [](const SpincClass& a, const SpincClass& b) { return a.key < b.key; });
    for (size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i);
    return out;
}

int negation_index(const LinkingData& L, const std::vector<SpincClass>& classes, int b)
{
    auto neg = classes.at(b).representative;
    for (auto& v : neg) v = -v;
    auto key = canonical_class(L, neg).key;
    auto it = std::lower_bound(classes.begin(), classes.end(), key,
                               [](const SpincClass& c, const std::vector<Integer>& k) { return c.key < k; });
    if (it == classes.end() || it->key != key) fail(ErrorCode::internal, "negated class not found");
    return static_cast<int>(it - classes.begin());
}

std::vector<Orbit> pm_orbit_representatives(const LinkingData& L, const std::vector<SpincClass>& classes)
{
    std::vector<Orbit> out;
    std::vector<bool> done(classes.size(), false);
    for (size_t i = 0; i < classes.size(); ++i) {
        if (done[i]) continue;
        int j = negation_index(L, classes, static_cast<int>(i));
        Orbit o;
        o.representative = classes[i];
        o.members.push_back(static_cast<int>(i));
        done[i] = true;
        if (j != static_cast<int>(i)) {
            o.members.push_back(j);
            done[j] = true;
        }
        o.size = static_cast<int>(o.members.size());
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace qtl::plumbing
