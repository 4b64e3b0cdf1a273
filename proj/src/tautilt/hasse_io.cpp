#include "tau/hasse_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace tau {

using nlohmann::json;

HasseSummary summarize(const HasseQuiver& q, const Algebra& a)
{
    HasseSummary s;
    s.algebra_dim = a.dim();
    for (auto& simple : a.structure().simples)
        s.simple_dims.push_back(simple.dim());
    for (std::size_t i = 0; i < q.vertices.size(); ++i) {
        const STiltPair& x = q.vertices[i];
        HasseSummary::Vertex v{i, g_vector(two_term_silting(x)), {}, {}};
        for (auto& m : x.m_parts)
            v.m_dims.push_back(m.dim());
        for (auto& p : x.p_parts)
            v.p_dims.push_back(p.dim());
        s.vertices.push_back(std::move(v));
    }
    for (auto& ar : q.arrows)
        s.arrows.push_back({ar.from, ar.to, composition_vector(ar.label)});
    return s;
}

std::string to_json(const HasseSummary& s)
{
    json j;
    j["algebra"] = {{"dim", s.algebra_dim}, {"simples", s.simple_dims}};
    j["vertices"] = json::array();
    for (auto& v : s.vertices)
        j["vertices"].push_back({{"id", v.id}, {"g_vector", v.g_vector}, {"m_dims", v.m_dims}, {"p_dims", v.p_dims}});
    j["arrows"] = json::array();
    for (auto& a : s.arrows)
        j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"label_dim_vector", a.label_dim_vector}});
    return j.dump(2);
}

HasseSummary summary_from_json(const std::string& text)
{
    json j = json::parse(text);
    HasseSummary s;
    s.algebra_dim = j.at("algebra").at("dim").get<std::size_t>();
    s.simple_dims = j.at("algebra").at("simples").get<std::vector<std::size_t>>();
    for (auto& v : j.at("vertices"))
        s.vertices.push_back({v.at("id").get<std::size_t>(), v.at("g_vector").get<std::vector<long>>(),
                              v.at("m_dims").get<std::vector<std::size_t>>(),
                              v.at("p_dims").get<std::vector<std::size_t>>()});
    for (auto& a : j.at("arrows"))
        s.arrows.push_back({a.at("from").get<std::size_t>(), a.at("to").get<std::size_t>(),
                            a.at("label_dim_vector").get<std::vector<std::size_t>>()});
    return s;
}

namespace {

template <class T>
std::string join(const std::vector<T>& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string dot_id(const std::string& name)
{
    std::string out;
    for (char c : name)
        out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return out.empty() || std::isdigit(static_cast<unsigned char>(out[0])) ? "q_" + out : out;
}

}  // namespace

std::string to_dot(const HasseSummary& s, const std::string& name)
{
    std::ostringstream os;
    os << "digraph " << dot_id(name) << " {\n";
    for (auto& v : s.vertices)
        os << "  v" << v.id << " [label=\"" << join(v.g_vector) << "\"];\n";
    for (auto& a : s.arrows)
        os << "  v" << a.from << " -> v" << a.to << " [label=\"" << join(a.label_dim_vector) << "\"];\n";
    os << "}\n";
    return os.str();
}

bool same_labeled_quiver(const HasseSummary& a, const HasseSummary& b)
{
    if (a.algebra_dim != b.algebra_dim || a.simple_dims != b.simple_dims || a.vertices.size() != b.vertices.size() ||
        a.arrows.size() != b.arrows.size())
        return false;
    auto keyed = [](const HasseSummary& s) {
        std::map<std::size_t, std::vector<long>> g;
        for (auto& v : s.vertices)
            g[v.id] = v.g_vector;
        std::set<std::vector<long>> verts;
        for (auto& v : s.vertices)
            verts.insert(v.g_vector);
        std::multiset<std::tuple<std::vector<long>, std::vector<long>, std::vector<std::size_t>>> arrows;
        for (auto& ar : s.arrows)
            arrows.insert({g.at(ar.from), g.at(ar.to), ar.label_dim_vector});
        return std::make_pair(verts, arrows);
    };
    auto ka = keyed(a), kb = keyed(b);
    return ka.first.size() == a.vertices.size() && ka == kb;
}

}  // namespace tau
