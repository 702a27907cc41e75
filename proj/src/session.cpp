#include "ringsum/session.hpp"

#include <sstream>

namespace ringsum {

namespace {

std::string coeff_str(const RatFun& f) {
    std::string s = f.str();
    return s;
}

} // namespace

std::string print_elem(const Tower& t, const TowerElem& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : e.terms()) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << t.gen(i).name;
            if (key[i] != 1) {
                mono << "^";
                if (key[i] < 0)
                    mono << "(" << key[i] << ")";
                else
                    mono << key[i];
            }
        }
        if (!any) {
            os << coeff_str(coeff);
        } else if (coeff.is_one()) {
            os << mono.str();
        } else {
            os << coeff_str(coeff) << "*" << mono.str();
        }
    }
    return os.str();
}

namespace {

TowerElem elem_of_expr(const Tower& t, const ExprPtr& e) {
    const FieldPtr& K = t.field();
    switch (e->kind) {
        case Expr::Kind::Number: return t.from_const(Const(K, e->number));
        case Expr::Kind::ImagUnit:
            if (K->zetaOrder % 4 != 0) throw Error("no imaginary unit in this session field");
            return t.from_const(Const(K, Cyc::zeta_pow(K, K->zetaOrder / 4)));
        case Expr::Kind::Zeta: return t.from_const(Const::zeta(K));
        case Expr::Kind::Ident: {
            if (e->name == "k") return t.from_ratfun(RatFun::var(K));
            long g = t.find_gen(e->name);
            if (g >= 0) return t.gen_elem(static_cast<size_t>(g));
            for (size_t i = 0; i < K->paramCount(); ++i)
                if (K->params[i] == e->name) return t.from_const(Const::param(K, i));
            throw Error("unknown name '" + e->name + "' in element expression");
        }
        case Expr::Kind::Add:
            return t.add(elem_of_expr(t, e->args[0]), elem_of_expr(t, e->args[1]));
        case Expr::Kind::Sub:
            return t.sub(elem_of_expr(t, e->args[0]), elem_of_expr(t, e->args[1]));
        case Expr::Kind::Mul:
            return t.mul(elem_of_expr(t, e->args[0]), elem_of_expr(t, e->args[1]));
        case Expr::Kind::Div: {
            TowerElem d = elem_of_expr(t, e->args[1]);
            auto inv = t.try_inverse(d);
            if (!inv) throw Error("division by a non-invertible element");
            return t.mul(elem_of_expr(t, e->args[0]), *inv);
        }
        case Expr::Kind::Neg: return t.neg(elem_of_expr(t, e->args[0]));
        case Expr::Kind::Pow: return t.pow(elem_of_expr(t, e->args[0]), e->intExp);
        default: throw Error("element expressions cannot contain " + expr_str(e));
    }
}

} // namespace

TowerElem parse_elem(const Tower& t, const std::string& src) {
    return elem_of_expr(t, parse(src));
}

Json elem_json(const Tower& t, const TowerElem& e) {
    Json terms = Json::array();
    for (const auto& [key, coeff] : e.terms()) {
        Json mono = Json::object();
        for (size_t i = 0; i < key.size(); ++i)
            if (key[i] != 0) mono[t.gen(i).name] = key[i];
        Json term;
        term["monomial"] = mono;
        term["num"] = coeff.num().str();
        term["den"] = coeff.den().str();
        terms.push_back(term);
    }
    Json out;
    out["string"] = print_elem(t, e);
    out["terms"] = terms;
    return out;
}

Json tower_json(const Tower& t, const std::map<std::string, std::string>& docs) {
    Json gens = Json::array();
    for (size_t i = 0; i < t.size(); ++i) {
        const Generator& g = t.gen(i);
        Json j;
        j["name"] = g.name;
        switch (g.kind) {
            case GenKind::Sigma:
                j["kind"] = "sigma";
                j["shift"] = t.prefix(i).elem_str(g.beta);
                break;
            case GenKind::Pi:
                j["kind"] = "pi";
                j["quotient"] = t.prefix(i).pg_str(g.alpha);
                break;
            case GenKind::Root:
                j["kind"] = "root";
                j["quotient"] = t.prefix(i).pg_str(g.alpha);
                j["order"] = g.order;
                break;
        }
        auto it = docs.find(g.name);
        if (it != docs.end()) j["represents"] = it->second;
        gens.push_back(j);
    }
    Json out;
    out["base"] = t.describe();
    out["generators"] = gens;
    return out;
}

bool json_matches_schema(const Json& doc, const Json& schema, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (schema.contains("type")) {
        std::string ty = schema["type"];
        bool ok = (ty == "object" && doc.is_object()) || (ty == "array" && doc.is_array()) ||
                  (ty == "string" && doc.is_string()) ||
                  (ty == "number" && (doc.is_number() || doc.is_number_integer())) ||
                  (ty == "integer" && doc.is_number_integer()) ||
                  (ty == "boolean" && doc.is_boolean()) || (ty == "null" && doc.is_null());
        if (!ok) return fail("expected type " + ty + " at " + doc.dump().substr(0, 40));
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& v : schema["enum"])
            if (v == doc) ok = true;
        if (!ok) return fail("value outside enum");
    }
    if (schema.contains("required"))
        for (const auto& r : schema["required"])
            if (!doc.contains(r.get<std::string>()))
                return fail("missing required field " + r.get<std::string>());
    if (schema.contains("properties") && doc.is_object())
        for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
            if (doc.contains(it.key()))
                if (!json_matches_schema(doc[it.key()], it.value(), error)) return false;
    if (schema.contains("items") && doc.is_array())
        for (const auto& item : doc)
            if (!json_matches_schema(item, schema["items"], error)) return false;
    return true;
}

} // namespace ringsum
