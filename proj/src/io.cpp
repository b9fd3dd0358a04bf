#include "glmn/io.hpp"

#include <stdexcept>

namespace glmn {

namespace {

Json rational_array(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

std::vector<Rational> rational_vector(const Json& a) {
    std::vector<Rational> out;
    for (const auto& x : a) out.push_back(parse_rational(x.get<std::string>()));
    return out;
}

std::string class_name(RelationClass c) {
    switch (c) {
        case RelationClass::Plus: return "plus";
        case RelationClass::Minus: return "minus";
        case RelationClass::Zero: return "zero";
    }
    return "?";
}

RelationClass class_from(const std::string& s) {
    if (s == "plus") return RelationClass::Plus;
    if (s == "minus") return RelationClass::Minus;
    if (s == "zero") return RelationClass::Zero;
    throw std::invalid_argument("unknown relation class '" + s + "'");
}

}  // namespace

Json to_json(const Shape& shape) { return Json{{"m", shape.m}, {"n", shape.n}}; }

Shape shape_from_json(const Json& j) {
    Shape s{j.at("m").get<int>(), j.at("n").get<int>()};
    if (s.m < 1 || s.n < 1) throw std::invalid_argument("shape blocks must be positive");
    return s;
}

Json to_json(const Shape& shape, const Weight& w) {
    Json j = to_json(shape);
    j["lambda"] = rational_array(w.entries);
    return j;
}

std::pair<Shape, Weight> weight_from_json(const Json& j) {
    const Shape s = shape_from_json(j);
    Weight w{rational_vector(j.at("lambda"))};
    if (static_cast<int>(w.entries.size()) != s.total()) {
        throw std::invalid_argument("weight length does not match shape");
    }
    return {s, w};
}

Json to_json(const Tableau& t) {
    Json j = to_json(t.shape());
    Json rows = Json::array();
    for (const auto& row : t.rows()) rows.push_back(rational_array(row));
    j["rows"] = rows;
    return j;
}

Tableau tableau_from_json(const Json& j) {
    const Shape s = shape_from_json(j);
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j.at("rows")) rows.push_back(rational_vector(row));
    return Tableau(s, std::move(rows));
}

Json to_json(const RelationSet& c) {
    Json pairs = Json::array();
    for (const auto& r : c.relations()) {
        pairs.push_back(Json{{"from", Json::array({r.from.row, r.from.col})},
                             {"to", Json::array({r.to.row, r.to.col})},
                             {"class", class_name(r.cls)}});
    }
    return Json{{"n", c.rank()}, {"pairs", pairs}};
}

RelationSet relation_set_from_json(const Json& j) {
    RelationSet c(j.at("n").get<int>());
    for (const auto& p : j.at("pairs")) {
        const auto& f = p.at("from");
        const auto& t = p.at("to");
        c.insert({{f.at(0).get<int>(), f.at(1).get<int>()},
                  {t.at(0).get<int>(), t.at(1).get<int>()},
                  class_from(p.at("class").get<std::string>())});
    }
    return c;
}

Json to_json(const SuperRelationSet& c) {
    Json j = to_json(c.shape);
    j["c1"] = to_json(c.even);
    j["c2"] = to_json(c.odd);
    return j;
}

SuperRelationSet super_set_from_json(const Json& j) {
    const Shape s = shape_from_json(j);
    return SuperRelationSet(s, relation_set_from_json(j.at("c1")),
                            relation_set_from_json(j.at("c2")));
}

Json to_json(const BracketExpr& e) {
    if (e.is_leaf()) return Json{{"gen", to_string(e.gen())}};
    return Json{{"bracket", Json::array({to_json(e.left()), to_json(e.right())})}};
}

BracketExpr bracket_expr_from_json(const Json& j) {
    if (j.contains("gen")) {
        const auto g = parse_gen(j.at("gen").get<std::string>());
        if (!g) throw std::invalid_argument("bad generator name");
        return BracketExpr::leaf(*g);
    }
    const auto& pair = j.at("bracket");
    return BracketExpr::bracket(bracket_expr_from_json(pair.at(0)),
                                bracket_expr_from_json(pair.at(1)));
}

Json to_json(const RelationExpr& r) {
    Json terms = Json::array();
    for (const auto& [coeff, tree] : r.terms) {
        terms.push_back(Json{{"coeff", to_string(coeff)}, {"word", to_json(tree)}});
    }
    return Json{{"name", r.name}, {"terms", terms}};
}

RelationExpr relation_expr_from_json(const Json& j) {
    RelationExpr out;
    out.name = j.at("name").get<std::string>();
    for (const auto& term : j.at("terms")) {
        out.terms.emplace_back(parse_rational(term.at("coeff").get<std::string>()),
                               bracket_expr_from_json(term.at("word")));
    }
    return out;
}

Json module_to_json(const ModuleSpace& mod, bool with_matrices) {
    Json j = to_json(mod.shape());
    j["mode"] = mod.mode() == ModuleMode::QuasiTypical ? "quasi-typical" : "quasi-covariant";
    j["finite"] = mod.finite();
    j["sample_radius"] = mod.sample_radius();
    j["seed"] = to_json(mod.seed());
    j["relations"] = to_json(mod.relations());
    Json basis = Json::array();
    for (const auto& t : mod.basis()) basis.push_back(to_json(t)["rows"]);
    j["basis"] = basis;
    if (with_matrices) {
        if (!mod.finite()) throw std::invalid_argument("matrices need a finite basis");
        Json gens;
        const int total = mod.shape().total();
        const auto add = [&](const GenRef& g) {
            const RationalMatrix mat = operator_matrix(mod, g);
            Json entries = Json::array();
            for (Eigen::Index c = 0; c < mat.cols(); ++c) {
                for (Eigen::Index r = 0; r < mat.rows(); ++r) {
                    if (mat(r, c) != 0) {
                        entries.push_back(Json::array(
                            {static_cast<int>(r), static_cast<int>(c), to_string(mat(r, c))}));
                    }
                }
            }
            gens[to_string(g)] = Json{{"rows", static_cast<int>(mat.rows())}, {"entries", entries}};
        };
        for (int k = 1; k <= total; ++k) add({GenRef::Kind::H, k});
        for (int k = 1; k <= total - 1; ++k) {
            add({GenRef::Kind::E, k});
            add({GenRef::Kind::F, k});
        }
        j["generators"] = gens;
    }
    return j;
}

ModuleSpace module_from_json(const Json& j) {
    const Tableau seed = tableau_from_json(j.at("seed"));
    const SuperRelationSet relations = super_set_from_json(j.at("relations"));
    const ModuleMode mode = j.at("mode").get<std::string>() == "quasi-covariant"
                                ? ModuleMode::QuasiCovariant
                                : ModuleMode::QuasiTypical;
    const bool finite = j.at("finite").get<bool>();
    const int radius = finite ? -1 : j.at("sample_radius").get<int>();
    ModuleSpace mod = ModuleSpace::build(seed, relations, mode, 200000, radius);
    if (j.contains("basis") && j.at("basis").size() != mod.dimension()) {
        throw std::invalid_argument("stored basis does not match the rebuilt enumeration");
    }
    return mod;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["check"] = r.check;
    j["shape"] = to_json(r.shape);
    j["module"] = r.module_desc;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness;
    if (r.seed) j["seed"] = *r.seed;
    return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace glmn
