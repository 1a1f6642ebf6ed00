/*
   Copyright 2026 the ringfactor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ringfactor/json_io.hpp"

#include <fstream>

namespace ringfactor::io {

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& why) {
    fail(Errc::ParseError, "field '" + field + "': " + why);
}

json gauss_to_json(const GaussRat& g) {
    return json{{"re", rat_to_string(g.re)}, {"im", rat_to_string(g.im)}};
}

GaussRat gauss_from_json(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        parse_fail("element", "Gaussian rational needs {\"re\",\"im\"}");
    return {rat_from_string(j.at("re").get<std::string>()),
            rat_from_string(j.at("im").get<std::string>())};
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) parse_fail("complex", "expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

json descriptor_to_json(const RingDescriptor& desc) {
    switch (desc.kind()) {
        case RingKind::Integer: return "integer";
        case RingKind::Rational: return "rational";
        case RingKind::GaussianRational: return "gaussian";
        case RingKind::Analytic: return "analytic";
        case RingKind::Poly:
            return json{{"kind", "poly"}, {"base", descriptor_to_json(desc.base())}};
        case RingKind::Jet:
            return json{{"kind", "jet"},
                        {"base", descriptor_to_json(desc.base())},
                        {"order", desc.jet_order()}};
        case RingKind::Product: {
            json comps = json::array();
            for (const auto& c : desc.components()) comps.push_back(descriptor_to_json(c));
            return json{{"kind", "product"}, {"components", comps}};
        }
    }
    parse_fail("ring", "unknown descriptor kind");
}

RingDescriptor descriptor_from_json(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "integer") return RingDescriptor::integers();
        if (s == "rational") return RingDescriptor::rationals();
        if (s == "gaussian") return RingDescriptor::gaussian_rationals();
        if (s == "analytic") return RingDescriptor::analytic();
        parse_fail("ring", "unknown ring name '" + s + "'");
    }
    if (!j.is_object() || !j.contains("kind")) parse_fail("ring", "expected a ring descriptor");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "integer") return RingDescriptor::integers();
    if (kind == "rational") return RingDescriptor::rationals();
    if (kind == "gaussian") return RingDescriptor::gaussian_rationals();
    if (kind == "analytic") return RingDescriptor::analytic();
    if (kind == "poly") {
        if (!j.contains("base")) parse_fail("ring.base", "poly descriptor needs a base");
        return RingDescriptor::poly(descriptor_from_json(j.at("base")));
    }
    if (kind == "jet") {
        if (!j.contains("base") || !j.contains("order"))
            parse_fail("ring", "jet descriptor needs base and order");
        return RingDescriptor::jet(descriptor_from_json(j.at("base")), j.at("order").get<int>());
    }
    if (kind == "product") {
        if (!j.contains("components") || !j.at("components").is_array())
            parse_fail("ring.components", "product descriptor needs a component array");
        std::vector<RingDescriptor> comps;
        for (const auto& c : j.at("components")) comps.push_back(descriptor_from_json(c));
        return RingDescriptor::product(std::move(comps));
    }
    parse_fail("ring.kind", "unknown ring kind '" + kind + "'");
}

json element_to_json(const RingElement& e) {
    switch (e.kind()) {
        case RingKind::Integer: return e.int_value().str();
        case RingKind::Rational: return rat_to_string(e.rat_value());
        case RingKind::GaussianRational: return gauss_to_json(e.gauss_value());
        case RingKind::Poly:
        case RingKind::Jet:
        case RingKind::Product: {
            json arr = json::array();
            for (const auto& p : e.parts()) arr.push_back(element_to_json(p));
            return arr;
        }
        case RingKind::Analytic: return funcexpr_to_json(e.func_value());
    }
    parse_fail("element", "unknown element kind");
}

RingElement element_from_json(const json& j, const RingDescriptor& desc) {
    switch (desc.kind()) {
        case RingKind::Integer: {
            if (!j.is_string() && !j.is_number_integer())
                parse_fail("element", "integer expected as string or int");
            if (j.is_number_integer()) return RingElement::integer(Int(j.get<long long>()));
            try {
                return RingElement::integer(Int(j.get<std::string>()));
            } catch (const std::exception&) {
                parse_fail("element", "malformed integer '" + j.get<std::string>() + "'");
            }
        }
        case RingKind::Rational: {
            if (j.is_number_integer()) return RingElement::rational(Rat(j.get<long long>()));
            if (!j.is_string()) parse_fail("element", "rational expected as string \"p/q\"");
            return RingElement::rational(rat_from_string(j.get<std::string>()));
        }
        case RingKind::GaussianRational: return RingElement::gaussian(gauss_from_json(j));
        case RingKind::Poly: {
            if (!j.is_array()) parse_fail("element", "polynomial expected as coefficient array");
            ElemVec coeffs;
            for (const auto& c : j) coeffs.push_back(element_from_json(c, desc.base()));
            return RingElement::poly(desc, std::move(coeffs));
        }
        case RingKind::Jet: {
            if (!j.is_array()) parse_fail("element", "jet expected as coefficient array");
            if (j.size() > static_cast<size_t>(desc.jet_order()))
                parse_fail("element", "jet coefficient list longer than truncation order");
            ElemVec coeffs;
            for (const auto& c : j) coeffs.push_back(element_from_json(c, desc.base()));
            return RingElement::jet(desc, std::move(coeffs));
        }
        case RingKind::Product: {
            if (!j.is_array() || j.size() != desc.components().size())
                parse_fail("element", "product element needs one entry per component");
            ElemVec comps;
            for (size_t i = 0; i < desc.components().size(); ++i)
                comps.push_back(element_from_json(j[i], desc.components()[i]));
            return RingElement::product(desc, std::move(comps));
        }
        case RingKind::Analytic: return RingElement::analytic_fn(funcexpr_from_json(j));
    }
    parse_fail("element", "unknown ring kind");
}

json matrix_to_json(const RingMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.dim(); ++j) row.push_back(element_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return json{{"ring", descriptor_to_json(m.descriptor())},
                {"n", m.dim()},
                {"entries", rows}};
}

RingMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring")) parse_fail("ring", "matrix needs a ring descriptor");
    if (!j.contains("n")) parse_fail("n", "matrix needs a dimension");
    if (!j.contains("entries")) parse_fail("entries", "matrix needs entries");
    RingDescriptor desc = descriptor_from_json(j.at("ring"));
    const size_t n = j.at("n").get<size_t>();
    const json& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n) parse_fail("entries", "expected n rows");
    RingMatrix m(n, desc);
    for (size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            parse_fail("entries", "row " + std::to_string(i + 1) + " does not have n entries");
        for (size_t k = 0; k < n; ++k) m.set(i, k, element_from_json(rows[i][k], desc));
    }
    return m;
}

json factorization_to_json(const FactorizationCertificate& cert) {
    json factors = json::array();
    for (const auto& f : cert.factors) {
        switch (f.kind()) {
            case FactorKind::SingleEntry:
                factors.push_back(json{{"kind", "single"},
                                       {"i", f.row() + 1},
                                       {"j", f.col() + 1},
                                       {"a", element_to_json(f.value())}});
                break;
            case FactorKind::UnipotentUpper:
            case FactorKind::UnipotentLower: {
                json rows = json::array();
                for (size_t i = 0; i < f.matrix().dim(); ++i) {
                    json row = json::array();
                    for (size_t j = 0; j < f.matrix().dim(); ++j)
                        row.push_back(element_to_json(f.matrix().at(i, j)));
                    rows.push_back(row);
                }
                factors.push_back(json{
                    {"kind", f.kind() == FactorKind::UnipotentUpper ? "upper" : "lower"},
                    {"entries", rows}});
                break;
            }
        }
    }
    return json{{"target", matrix_to_json(cert.target)},
                {"factors", factors},
                {"algorithm", cert.algorithm}};
}

FactorizationCertificate factorization_from_json(const json& j) {
    if (!j.contains("target")) parse_fail("target", "certificate needs a target matrix");
    RingMatrix target = matrix_from_json(j.at("target"));
    FactorizationCertificate cert{target, {}, j.value("algorithm", std::string("unknown"))};
    if (!j.contains("factors") || !j.at("factors").is_array())
        parse_fail("factors", "certificate needs a factor array");
    const auto& desc = target.descriptor();
    const size_t n = target.dim();
    for (const auto& f : j.at("factors")) {
        const std::string kind = f.value("kind", std::string());
        if (kind == "single") {
            size_t i = f.at("i").get<size_t>();
            size_t jj = f.at("j").get<size_t>();
            if (i < 1 || jj < 1 || i > n || jj > n) parse_fail("factors", "index out of range");
            cert.factors.push_back(ElementaryFactor::single_entry(
                n, i - 1, jj - 1, element_from_json(f.at("a"), desc)));
        } else if (kind == "upper" || kind == "lower") {
            const json& rows = f.at("entries");
            if (!rows.is_array() || rows.size() != n) parse_fail("factors.entries", "expected n rows");
            RingMatrix m(n, desc);
            for (size_t i = 0; i < n; ++i)
                for (size_t k = 0; k < n; ++k) m.set(i, k, element_from_json(rows[i][k], desc));
            cert.factors.push_back(kind == "upper" ? ElementaryFactor::unipotent_upper(std::move(m))
                                                   : ElementaryFactor::unipotent_lower(std::move(m)));
        } else {
            parse_fail("factors.kind", "unknown factor kind '" + kind + "'");
        }
    }
    return cert;
}

json exp_certificate_to_json(const ExpCertificate& cert) {
    json logs = json::array();
    for (const auto& g : cert.logs) logs.push_back(matrix_to_json(g));
    return json{{"target", matrix_to_json(cert.target)}, {"logs", logs}};
}

ExpCertificate exp_certificate_from_json(const json& j) {
    if (!j.contains("target")) parse_fail("target", "certificate needs a target matrix");
    ExpCertificate cert{matrix_from_json(j.at("target")), {}};
    if (!j.contains("logs") || !j.at("logs").is_array())
        parse_fail("logs", "certificate needs a log array");
    for (const auto& g : j.at("logs")) cert.logs.push_back(matrix_from_json(g));
    return cert;
}

// ---------------------------------------------------------------------------
// Function ASTs

json funcexpr_to_json(const analytic::FuncPtr& f) {
    using Op = analytic::FuncExpr::Op;
    switch (f->op()) {
        case Op::Const: return json{{"op", "const"}, {"value", complex_to_json(f->const_value())}};
        case Op::Var: return json{{"op", "var"}};
        case Op::Add:
            return json{{"op", "add"}, {"lhs", funcexpr_to_json(f->lhs())},
                        {"rhs", funcexpr_to_json(f->rhs())}};
        case Op::Sub:
            return json{{"op", "sub"}, {"lhs", funcexpr_to_json(f->lhs())},
                        {"rhs", funcexpr_to_json(f->rhs())}};
        case Op::Mul:
            return json{{"op", "mul"}, {"lhs", funcexpr_to_json(f->lhs())},
                        {"rhs", funcexpr_to_json(f->rhs())}};
        case Op::Div: {
            json anns = json::array();
            for (const auto& a : f->annotations())
                anns.push_back(json{{"point", complex_to_json(a.point)}, {"order", a.order}});
            return json{{"op", "div"},
                        {"num", funcexpr_to_json(f->lhs())},
                        {"den", funcexpr_to_json(f->rhs())},
                        {"annotations", anns}};
        }
        case Op::Exp: return json{{"op", "exp"}, {"arg", funcexpr_to_json(f->lhs())}};
        case Op::Pow:
            return json{{"op", "pow"}, {"base", funcexpr_to_json(f->lhs())},
                        {"exponent", f->exponent()}};
        case Op::Poly: {
            json coeffs = json::array();
            for (const auto& c : f->exact_coefficients()) coeffs.push_back(gauss_to_json(c));
            return json{{"op", "poly"}, {"coeffs", coeffs}};
        }
        case Op::FPoly: {
            json coeffs = json::array();
            for (cplx c : f->coefficients()) coeffs.push_back(complex_to_json(c));
            return json{{"op", "fpoly"}, {"coeffs", coeffs}};
        }
    }
    parse_fail("func", "unknown AST op");
}

analytic::FuncPtr funcexpr_from_json(const json& j) {
    using FE = analytic::FuncExpr;
    if (!j.is_object() || !j.contains("op")) parse_fail("func.op", "expected an AST node");
    const std::string op = j.at("op").get<std::string>();
    if (op == "const") return FE::constant(complex_from_json(j.at("value")));
    if (op == "var") return FE::variable();
    if (op == "add") return FE::add(funcexpr_from_json(j.at("lhs")), funcexpr_from_json(j.at("rhs")));
    if (op == "sub") return FE::sub(funcexpr_from_json(j.at("lhs")), funcexpr_from_json(j.at("rhs")));
    if (op == "mul") return FE::mul(funcexpr_from_json(j.at("lhs")), funcexpr_from_json(j.at("rhs")));
    if (op == "exp") return FE::exp(funcexpr_from_json(j.at("arg")));
    if (op == "pow")
        return FE::pow(funcexpr_from_json(j.at("base")), j.at("exponent").get<int>());
    if (op == "div") {
        std::vector<analytic::Annotation> anns;
        if (j.contains("annotations"))
            for (const auto& a : j.at("annotations"))
                anns.push_back({complex_from_json(a.at("point")), a.at("order").get<int>()});
        return FE::div(funcexpr_from_json(j.at("num")), funcexpr_from_json(j.at("den")),
                       std::move(anns));
    }
    if (op == "poly") {
        std::vector<GaussRat> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(gauss_from_json(c));
        return FE::poly(std::move(coeffs));
    }
    if (op == "fpoly") {
        std::vector<cplx> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
        return FE::fpoly(std::move(coeffs));
    }
    parse_fail("func.op", "unknown AST op '" + op + "'");
}

json func_matrix_to_json(const FuncMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.dim(); ++j) row.push_back(funcexpr_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return json{{"n", m.dim()}, {"entries", rows}};
}

FuncMatrix func_matrix_from_json(const json& j) {
    const size_t n = j.at("n").get<size_t>();
    const json& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n) parse_fail("entries", "expected n rows");
    FuncMatrix m(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) m.set(i, k, funcexpr_from_json(rows[i][k]));
    return m;
}

json three_exp_to_json(const ThreeExpCertificate& cert) {
    json logs = json::array();
    for (const auto& g : cert.logs) logs.push_back(func_matrix_to_json(g));
    json roots = json::array();
    for (const auto& r : cert.c_roots)
        roots.push_back(json{{"point", complex_to_json(r.location)},
                             {"multiplicity", r.multiplicity}});
    return json{{"target", func_matrix_to_json(cert.target)},
                {"alpha_log", funcexpr_to_json(cert.alpha_log)},
                {"beta", funcexpr_to_json(cert.beta)},
                {"Y", func_matrix_to_json(cert.y)},
                {"logs", logs},
                {"case", cert.kind == ThreeExpCase::CZero ? "c_zero" : "c_nonzero"},
                {"c_roots", roots}};
}

ThreeExpCertificate three_exp_from_json(const json& j) {
    ThreeExpCertificate cert{func_matrix_from_json(j.at("target")),
                             funcexpr_from_json(j.at("alpha_log")),
                             funcexpr_from_json(j.at("beta")),
                             {FuncMatrix(2), FuncMatrix(2), FuncMatrix(2)},
                             func_matrix_from_json(j.at("Y")),
                             ThreeExpCase::CNonzero,
                             {}};
    const json& logs = j.at("logs");
    if (!logs.is_array() || logs.size() != 3) parse_fail("logs", "expected exactly 3 logs");
    for (size_t i = 0; i < 3; ++i) cert.logs[i] = func_matrix_from_json(logs[i]);
    cert.kind = j.value("case", std::string("c_nonzero")) == "c_zero" ? ThreeExpCase::CZero
                                                                      : ThreeExpCase::CNonzero;
    if (j.contains("c_roots"))
        for (const auto& r : j.at("c_roots"))
            cert.c_roots.push_back(
                {complex_from_json(r.at("point")), r.at("multiplicity").get<int>()});
    return cert;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::ParseError, "invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail(Errc::ParseError, "cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

} // namespace ringfactor::io
