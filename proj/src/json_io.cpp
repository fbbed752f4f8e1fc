#include "tverberg/json_io.hpp"

#include "tverberg/errors.hpp"

namespace tverberg {

namespace {

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    throw InvalidInput("expected a rational written as a string or an integer");
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

} // namespace

Json to_json(const Vector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

Vector vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("expected an array of rationals");
    Vector v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

Json to_json(const IndexPartition& p)
{
    Json out = Json::array();
    for (const auto& part : p.parts)
        out.push_back(part);
    return out;
}

IndexPartition partition_from_json(const Json& j, int ground_size)
{
    if (!j.is_array())
        throw InvalidInput("a partition is an array of arrays of labels");
    IndexPartition p;
    p.ground_size = ground_size;
    for (const auto& part : j)
        p.parts.push_back(part.get<IndexSet>());
    validate_partition(p);
    return p;
}

Json to_json(const DimensionTuple& t)
{
    return Json{{"r", t.r()}, {"d", t.d()}, {"dims", t.dims()}};
}

DimensionTuple tuple_from_json(const Json& j)
{
    return DimensionTuple(field(j, "r").get<int>(), field(j, "d").get<int>(),
                          field(j, "dims").get<std::vector<int>>());
}

Json to_json(const PointConfiguration& c)
{
    Json pts = Json::array();
    for (const auto& p : c.points())
        pts.push_back(to_json(p));
    return Json{{"dim", c.dim()}, {"points", pts}};
}

PointConfiguration configuration_from_json(const Json& j)
{
    std::vector<Vector> pts;
    for (const auto& p : field(j, "points"))
        pts.push_back(vector_from_json(p));
    return PointConfiguration(field(j, "dim").get<int>(), std::move(pts));
}

Json to_json(const IntersectionWitness& w)
{
    Json coeffs = Json::array();
    for (const auto& part : w.coefficients)
    {
        Json m = Json::object();
        for (const auto& [label, x] : part)
            m[std::to_string(label)] = to_string(x);
        coeffs.push_back(m);
    }
    return Json{{"point", to_json(w.point)}, {"coefficients", coeffs}};
}

IntersectionWitness witness_from_json(const Json& j)
{
    IntersectionWitness w;
    w.point = vector_from_json(field(j, "point"));
    for (const auto& part : field(j, "coefficients"))
    {
        std::map<int, Rational> m;
        for (const auto& [label, x] : part.items())
            m.emplace(std::stoi(label), rational_from_json(x));
        w.coefficients.push_back(std::move(m));
    }
    return w;
}

Json to_json(const SearchOutcome& o)
{
    Json out{{"status", to_string(o.status)},
             {"sampled", o.sampled},
             {"stats", {{"partitions_examined", o.stats.partitions_examined}, {"lps_solved", o.stats.lps_solved}}}};
    out["partition"] = o.partition ? to_json(*o.partition) : Json(nullptr);
    out["witness"] = o.witness ? to_json(*o.witness) : Json(nullptr);
    return out;
}

Json to_json(const PositionVerdict& v)
{
    Json out{{"status", to_string(v.status)}, {"checked", v.checked}, {"exhaustive", v.exhaustive}};
    out["witness"] = v.status == PositionStatus::violated ? Json(v.witness) : Json(nullptr);
    return out;
}

Json to_json(const SimplicialComplex& k)
{
    Json facets = Json::array();
    for (const auto& f : k.facets())
    {
        Json face = Json::array();
        for (int v : f)
            face.push_back(k.vertices()[v]);
        facets.push_back(face);
    }
    return Json{{"vertices", k.vertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& j)
{
    const auto labels = field(j, "vertices").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        index.emplace(labels[i], static_cast<int>(i));
    std::vector<Face> facets;
    for (const auto& f : field(j, "facets"))
    {
        Face face;
        for (const auto& v : f)
        {
            const std::string label = v.is_string() ? v.get<std::string>() : v.dump();
            auto it = index.find(label);
            if (it == index.end())
                throw InvalidInput("facet uses undeclared vertex '" + label + "'");
            face.push_back(it->second);
        }
        facets.push_back(std::move(face));
    }
    return SimplicialComplex(labels, std::move(facets));
}

Json to_json(const HomologyResult& h)
{
    Json torsion = Json::array();
    for (const auto& t : h.torsion)
    {
        Json factors = Json::array();
        for (const auto& x : t)
            factors.push_back(x.str());
        torsion.push_back(factors);
    }
    std::vector<int> dims;
    for (std::size_t i = 0; i < h.betti.size(); ++i)
        dims.push_back(static_cast<int>(i) - 1);
    return Json{{"coefficients", h.modulus == 0 ? std::string("Z") : "Z/" + std::to_string(h.modulus)},
                {"reduced", true},
                {"dimensions", dims},
                {"betti", h.betti},
                {"torsion", torsion}};
}

Json to_json(const ShellabilityResult& s, const SimplicialComplex& k)
{
    Json order = Json::array();
    for (auto i : s.order)
    {
        Json face = Json::array();
        for (int v : k.facets()[i])
            face.push_back(k.vertices()[v]);
        order.push_back(face);
    }
    return Json{{"status", to_string(s.status)}, {"states", s.states}, {"order", order}};
}

Json to_json(const JoinFace& f)
{
    return Json(f.components);
}

Json to_json(const ConstraintVerification& v)
{
    Json chain = Json::array();
    for (std::size_t i = 0; i < v.violating_chain.size(); ++i)
        chain.push_back({{"face", to_json(v.violating_chain[i])}, {"label", v.chain_labels[i]}});
    return Json{{"passed", v.passed},
                {"join_faces", v.faces},
                {"zero_faces", v.zero_faces},
                {"failure", v.failure},
                {"violating_chain", chain}};
}

Json to_json(const PLMap& f)
{
    Json values = Json::array();
    for (FaceMask m = 1; m < f.values().size(); ++m)
        values.push_back({{"face", face_labels(m)}, {"value", to_json(f.value(m))}});
    return Json{{"n", f.n()}, {"target_dim", f.target_dim()}, {"values", values}};
}

PLMap pl_map_from_json(const Json& j)
{
    const int n = field(j, "n").get<int>();
    if (n < 0 || n + 1 > max_pl_map_vertices)
        throw InvalidInput("PL map: N out of range");
    std::vector<Vector> values(std::size_t{1} << (n + 1));
    for (const auto& entry : field(j, "values"))
    {
        const FaceMask m = face_mask(field(entry, "face").get<IndexSet>());
        if (m == 0 || m >= values.size())
            throw InvalidInput("PL map: face outside the domain");
        values[m] = vector_from_json(field(entry, "value"));
    }
    return PLMap(n, field(j, "target_dim").get<int>(), std::move(values));
}

Json to_json(const JoinPoint& x)
{
    return Json{{"lambda", to_json(x.lambda)}, {"symbol", x.symbol}};
}

Json to_json(const AffineJoinMap& f)
{
    Json values = Json::array();
    for (const auto& v : f.values)
        values.push_back(to_json(v));
    return Json{{"r", f.r}, {"n", f.n}, {"d", f.d}, {"values", values}};
}

AffineJoinMap join_map_from_json(const Json& j)
{
    AffineJoinMap f{field(j, "r").get<int>(), field(j, "n").get<int>(), field(j, "d").get<int>(), {}};
    for (const auto& v : field(j, "values"))
        f.values.push_back(vector_from_json(v));
    return f;
}

Json to_json(const OrbitCollapse& c)
{
    return Json{{"point", to_json(c.point)}, {"image", to_json(c.image)}, {"pivots", c.pivots}};
}

Json to_json(const ColorfulSelection& s)
{
    Json potentials = Json::array();
    for (const auto& p : s.potentials)
        potentials.push_back(to_string(p));
    return Json{{"choice", s.choice},
                {"coefficients", to_json(s.coefficients)},
                {"pivots", s.pivots},
                {"potentials", potentials}};
}

} // namespace tverberg
