#pragma once

/**
 * @file json.hpp
 * @brief JSON documents: algebras, family specs, partial magmas, linear
 *        maps and embeddability certificates.
 *
 * Rationals are always strings ("p/q" or "p"); JSON numbers are rejected
 * wherever a rational is expected. Errors name the offending field.
 */

#include <nsgrad/algebra.hpp>
#include <nsgrad/family.hpp>
#include <nsgrad/magma/certificate.hpp>
#include <nsgrad/magma/partial_magma.hpp>
#include <nsgrad/matrix.hpp>
#include <nsgrad/rational.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace nsgrad::io {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Field access helpers

namespace detail {

inline const Json& field(const Json& obj, const char* key, const std::string& ctx) {
    if (!obj.is_object()) throw InputError(ctx + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(ctx + ": missing field '" + key + "'");
    return *it;
}

inline std::size_t count_field(const Json& obj, const char* key, const std::string& ctx) {
    const Json& v = field(obj, key, ctx);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw InputError(ctx + "." + key + ": expected a non-negative integer");
    return v.get<std::size_t>();
}

inline std::string string_field(const Json& v, const std::string& ctx) {
    if (!v.is_string()) throw InputError(ctx + ": expected a string");
    return v.get<std::string>();
}

}  // namespace detail

inline Json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& v, const std::string& ctx) {
    if (!v.is_string()) throw InputError(ctx + ": rationals must be strings like \"p/q\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(ctx + ": " + e.what());
    }
}

inline Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline Json to_json(const Matrix& m) {
    Json entries = Json::array();
    for (const auto& x : m.entries()) entries.push_back(to_string(x));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline Matrix matrix_from_json(const Json& v, const std::string& ctx) {
    const std::size_t rows = detail::count_field(v, "rows", ctx);
    const std::size_t cols = detail::count_field(v, "cols", ctx);
    const Json& entries = detail::field(v, "entries", ctx);
    if (!entries.is_array()) throw InputError(ctx + ".entries: expected an array");
    if (entries.size() != rows * cols)
        throw InputError(ctx + ".entries: expected " + std::to_string(rows * cols) + " entries, found " +
                         std::to_string(entries.size()));
    std::vector<Rational> data;
    data.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        data.push_back(rational_from_json(entries[i], ctx + ".entries[" + std::to_string(i) + "]"));
    return Matrix(rows, cols, std::move(data));
}

// ---------------------------------------------------------------------------
// Algebra files

inline Json to_json(const Algebra& alg) {
    Json products = Json::array();
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (alg.coeff(i, j, k) != 0)
                    products.push_back(Json{{"left_index", i},
                                            {"right_index", j},
                                            {"result_index", k},
                                            {"coefficient", to_string(alg.coeff(i, j, k))}});
    return Json{{"dim", n}, {"basis", alg.basis_names()}, {"products", std::move(products)}};
}

inline Algebra algebra_from_json(const Json& doc) {
    const std::string ctx = "algebra";
    const std::size_t dim = detail::count_field(doc, "dim", ctx);
    const Json& basis = detail::field(doc, "basis", ctx);
    if (!basis.is_array()) throw InputError("algebra.basis: expected an array of labels");
    if (basis.size() != dim)
        throw InputError("algebra.basis: length " + std::to_string(basis.size()) + " differs from dim " +
                         std::to_string(dim));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < basis.size(); ++i)
        names.push_back(detail::string_field(basis[i], "algebra.basis[" + std::to_string(i) + "]"));
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
        throw InputError("algebra.basis: labels must be pairwise distinct");
    Algebra alg(names);

    const Json& products = detail::field(doc, "products", ctx);
    if (!products.is_array()) throw InputError("algebra.products: expected an array");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t r = 0; r < products.size(); ++r) {
        const std::string rc = "algebra.products[" + std::to_string(r) + "]";
        const Json& rec = products[r];
        const std::size_t i = detail::count_field(rec, "left_index", rc);
        const std::size_t j = detail::count_field(rec, "right_index", rc);
        const std::size_t k = detail::count_field(rec, "result_index", rc);
        if (i >= dim || j >= dim || k >= dim) throw InputError(rc + ": index out of range for dim " + std::to_string(dim));
        if (!seen.insert({i, j, k}).second)
            throw InputError(rc + ": duplicate record for (" + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")");
        alg.set_coeff(i, j, k, rational_from_json(detail::field(rec, "coefficient", rc), rc + ".coefficient"));
    }
    return alg;
}

// ---------------------------------------------------------------------------
// Family specs

inline Json to_json(const FamilySpec& spec) {
    return Json{{"v_dim", spec.v_dim},
                {"f_L", to_json(spec.f_left)},
                {"f_R", to_json(spec.f_right)},
                {"g_L", to_json(spec.g_left)},
                {"g_R", to_json(spec.g_right)}};
}

inline FamilySpec family_from_json(const Json& doc) {
    FamilySpec spec;
    spec.v_dim = detail::count_field(doc, "v_dim", "family");
    spec.f_left = matrix_from_json(detail::field(doc, "f_L", "family"), "family.f_L");
    spec.f_right = matrix_from_json(detail::field(doc, "f_R", "family"), "family.f_R");
    spec.g_left = matrix_from_json(detail::field(doc, "g_L", "family"), "family.g_L");
    spec.g_right = matrix_from_json(detail::field(doc, "g_R", "family"), "family.g_R");
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("family: ") + e.what());
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Partial magmas

inline Json to_json(const magma::PartialMagma& m) {
    Json table = Json::array();
    for (const auto& [a, b, r] : m.entries())
        table.push_back(Json{{"left", m.label(a)}, {"right", m.label(b)}, {"result", m.label(r)}});
    return Json{{"elements", m.elements()}, {"table", std::move(table)}};
}

inline magma::PartialMagma magma_from_json(const Json& doc) {
    const Json& elements = detail::field(doc, "elements", "magma");
    if (!elements.is_array()) throw InputError("magma.elements: expected an array of labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < elements.size(); ++i)
        labels.push_back(detail::string_field(elements[i], "magma.elements[" + std::to_string(i) + "]"));
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
        throw InputError("magma.elements: labels must be distinct");
    magma::PartialMagma m(labels);
    const Json& table = detail::field(doc, "table", "magma");
    if (!table.is_array()) throw InputError("magma.table: expected an array");
    for (std::size_t r = 0; r < table.size(); ++r) {
        const std::string rc = "magma.table[" + std::to_string(r) + "]";
        auto idx = [&](const char* key) {
            const std::string label = detail::string_field(detail::field(table[r], key, rc), rc + "." + key);
            auto i = m.index_of(label);
            if (!i) throw InputError(rc + "." + key + ": unknown element '" + label + "'");
            return *i;
        };
        const std::size_t a = idx("left"), b = idx("right"), c = idx("result");
        if (m.defined(a, b)) throw InputError(rc + ": product " + m.label(a) + "*" + m.label(b) + " defined twice");
        m.define(a, b, c);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Certificates

namespace detail {

inline Json word_json(const magma::PartialMagma& m, const magma::Word& w) {
    Json out = Json::array();
    for (auto c : w) out.push_back(m.label(c));
    return out;
}

inline std::size_t label_index(const magma::PartialMagma& m, const Json& v, const std::string& ctx) {
    const std::string label = string_field(v, ctx);
    auto i = m.index_of(label);
    if (!i) throw InputError(ctx + ": unknown element '" + label + "'");
    return *i;
}

inline magma::Word word_from_json(const magma::PartialMagma& m, const Json& v, const std::string& ctx) {
    if (!v.is_array()) throw InputError(ctx + ": expected an array of labels");
    magma::Word w;
    for (std::size_t i = 0; i < v.size(); ++i) w.push_back(label_index(m, v[i], ctx + "[" + std::to_string(i) + "]"));
    return w;
}

}  // namespace detail

inline Json to_json(const magma::PartialMagma& m, const magma::Certificate& cert) {
    using namespace magma;
    if (const auto* t = std::get_if<CayleyTable>(&cert)) {
        Json rows = Json::array();
        for (std::size_t a = 0; a < t->size(); ++a) {
            Json row = Json::array();
            for (std::size_t b = 0; b < t->size(); ++b) row.push_back(t->elements[t->at(a, b)]);
            rows.push_back(std::move(row));
        }
        return Json{{"kind", "cayley_table"}, {"elements", t->elements}, {"table", std::move(rows)}};
    }
    if (const auto* tr = std::get_if<Trace>(&cert)) {
        Json words = Json::array(), steps = Json::array();
        for (const auto& w : tr->words) words.push_back(detail::word_json(m, w));
        for (const auto& s : tr->steps)
            steps.push_back(Json{{"position", s.position},
                                 {"left", m.label(s.left)},
                                 {"right", m.label(s.right)},
                                 {"result", m.label(s.result)},
                                 {"action", s.contract ? "contract" : "expand"}});
        return Json{{"kind", "trace"},
                    {"first", m.label(tr->first)},
                    {"second", m.label(tr->second)},
                    {"words", std::move(words)},
                    {"steps", std::move(steps)}};
    }
    if (const auto* sys = std::get_if<RewritingSystem>(&cert)) {
        Json rules = Json::array();
        for (const auto& r : sys->history) {
            Json proof = Json::array();
            for (const auto& s : r.proof)
                proof.push_back(Json{{"rule", s.rule}, {"position", s.position},
                                     {"direction", s.forward ? "forward" : "backward"}});
            Json axiom = r.is_axiom() ? Json::array({m.label(*r.axiom_left), m.label(*r.axiom_right)}) : Json(nullptr);
            rules.push_back(Json{{"lhs", detail::word_json(m, r.lhs)},
                                 {"rhs", detail::word_json(m, r.rhs)},
                                 {"axiom", std::move(axiom)},
                                 {"proof", std::move(proof)}});
        }
        return Json{{"kind", "rewriting_system"}, {"rules", std::move(rules)}, {"active", sys->active}};
    }
    const auto& b = std::get<BoundsReached>(cert);
    return Json{{"kind", "bounds"},
                {"max_word_len", b.max_word_len},
                {"max_rules", b.max_rules},
                {"max_extra_elements", b.max_extra_elements},
                {"notes", b.notes}};
}

inline magma::Certificate certificate_from_json(const magma::PartialMagma& m, const Json& doc) {
    using namespace magma;
    const std::string kind = detail::string_field(detail::field(doc, "kind", "certificate"), "certificate.kind");
    if (kind == "cayley_table") {
        CayleyTable t;
        const Json& els = detail::field(doc, "elements", "certificate");
        if (!els.is_array()) throw InputError("certificate.elements: expected an array");
        for (std::size_t i = 0; i < els.size(); ++i)
            t.elements.push_back(detail::string_field(els[i], "certificate.elements[" + std::to_string(i) + "]"));
        auto lookup = [&](const Json& v, const std::string& ctx) {
            const std::string label = detail::string_field(v, ctx);
            for (std::size_t i = 0; i < t.elements.size(); ++i)
                if (t.elements[i] == label) return i;
            throw InputError(ctx + ": unknown element '" + label + "'");
        };
        const Json& rows = detail::field(doc, "table", "certificate");
        if (!rows.is_array()) throw InputError("certificate.table: expected an array of rows");
        for (std::size_t a = 0; a < rows.size(); ++a) {
            if (!rows[a].is_array()) throw InputError("certificate.table: rows must be arrays");
            for (std::size_t b = 0; b < rows[a].size(); ++b)
                t.table.push_back(lookup(rows[a][b], "certificate.table[" + std::to_string(a) + "][" + std::to_string(b) + "]"));
        }
        return t;
    }
    if (kind == "trace") {
        Trace tr;
        tr.first = detail::label_index(m, detail::field(doc, "first", "certificate"), "certificate.first");
        tr.second = detail::label_index(m, detail::field(doc, "second", "certificate"), "certificate.second");
        const Json& words = detail::field(doc, "words", "certificate");
        for (std::size_t i = 0; i < words.size(); ++i)
            tr.words.push_back(detail::word_from_json(m, words[i], "certificate.words[" + std::to_string(i) + "]"));
        const Json& steps = detail::field(doc, "steps", "certificate");
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const std::string sc = "certificate.steps[" + std::to_string(i) + "]";
            const Json& s = steps[i];
            TraceStep st;
            st.position = detail::count_field(s, "position", sc);
            st.left = detail::label_index(m, detail::field(s, "left", sc), sc + ".left");
            st.right = detail::label_index(m, detail::field(s, "right", sc), sc + ".right");
            st.result = detail::label_index(m, detail::field(s, "result", sc), sc + ".result");
            const std::string action = detail::string_field(detail::field(s, "action", sc), sc + ".action");
            if (action != "contract" && action != "expand") throw InputError(sc + ".action: expected contract or expand");
            st.contract = action == "contract";
            tr.steps.push_back(st);
        }
        return tr;
    }
    if (kind == "rewriting_system") {
        RewritingSystem sys;
        const Json& rules = detail::field(doc, "rules", "certificate");
        for (std::size_t k = 0; k < rules.size(); ++k) {
            const std::string rc = "certificate.rules[" + std::to_string(k) + "]";
            RewriteRule r;
            r.lhs = detail::word_from_json(m, detail::field(rules[k], "lhs", rc), rc + ".lhs");
            r.rhs = detail::word_from_json(m, detail::field(rules[k], "rhs", rc), rc + ".rhs");
            const Json& axiom = detail::field(rules[k], "axiom", rc);
            if (!axiom.is_null()) {
                if (!axiom.is_array() || axiom.size() != 2) throw InputError(rc + ".axiom: expected [left, right] or null");
                r.axiom_left = detail::label_index(m, axiom[0], rc + ".axiom[0]");
                r.axiom_right = detail::label_index(m, axiom[1], rc + ".axiom[1]");
            }
            const Json& proof = detail::field(rules[k], "proof", rc);
            for (std::size_t i = 0; i < proof.size(); ++i) {
                const std::string pc = rc + ".proof[" + std::to_string(i) + "]";
                ProofStep s;
                s.rule = detail::count_field(proof[i], "rule", pc);
                s.position = detail::count_field(proof[i], "position", pc);
                const std::string dir = detail::string_field(detail::field(proof[i], "direction", pc), pc + ".direction");
                if (dir != "forward" && dir != "backward") throw InputError(pc + ".direction: expected forward or backward");
                s.forward = dir == "forward";
                r.proof.push_back(s);
            }
            sys.history.push_back(std::move(r));
        }
        const Json& active = detail::field(doc, "active", "certificate");
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (!active[i].is_number_unsigned()) throw InputError("certificate.active: expected indices");
            sys.active.push_back(active[i].get<std::size_t>());
        }
        return sys;
    }
    if (kind == "bounds") {
        BoundsReached b;
        b.max_word_len = detail::count_field(doc, "max_word_len", "certificate");
        b.max_rules = detail::count_field(doc, "max_rules", "certificate");
        b.max_extra_elements = detail::count_field(doc, "max_extra_elements", "certificate");
        for (const auto& n : detail::field(doc, "notes", "certificate")) b.notes.push_back(detail::string_field(n, "certificate.notes"));
        return b;
    }
    throw InputError("certificate.kind: unknown kind '" + kind + "'");
}

inline Json to_json(const magma::PartialMagma& m, const magma::EmbeddabilityVerdict& v) {
    return Json{{"status", magma::to_string(v.status)}, {"stage", v.stage}, {"certificate", to_json(m, v.certificate)}};
}

inline magma::EmbeddabilityVerdict verdict_from_json(const magma::PartialMagma& m, const Json& doc) {
    magma::EmbeddabilityVerdict v;
    const std::string status = detail::string_field(detail::field(doc, "status", "verdict"), "verdict.status");
    if (status == "Embeddable") v.status = magma::Verdict::Embeddable;
    else if (status == "NotEmbeddable") v.status = magma::Verdict::NotEmbeddable;
    else if (status == "Unknown") v.status = magma::Verdict::Unknown;
    else throw InputError("verdict.status: unknown status '" + status + "'");
    v.stage = detail::string_field(detail::field(doc, "stage", "verdict"), "verdict.stage");
    v.certificate = certificate_from_json(m, detail::field(doc, "certificate", "verdict"));
    return v;
}

// ---------------------------------------------------------------------------
// Files

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

/// An algebra document is either raw structure constants or a family spec
/// (recognized by its "v_dim" field), which is expanded with build_family.
inline Algebra algebra_from_document(const Json& doc) {
    if (doc.is_object() && doc.contains("v_dim")) return build_family(family_from_json(doc));
    return algebra_from_json(doc);
}

inline Algebra parse_algebra(const std::string& contents) {
    Json doc;
    try {
        doc = Json::parse(contents);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("JSON syntax error at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    return algebra_from_document(doc);
}

inline Algebra load_algebra(const std::string& path) {
    try {
        return algebra_from_document(read_json_file(path));
    } catch (const InputError& e) {
        const std::string msg = e.what();
        if (msg.rfind(path, 0) == 0 || msg.rfind("cannot open", 0) == 0) throw;
        throw InputError(path + ": " + msg);
    }
}

inline magma::PartialMagma load_magma(const std::string& path) {
    try {
        return magma_from_json(read_json_file(path));
    } catch (const InputError& e) {
        const std::string msg = e.what();
        if (msg.rfind(path, 0) == 0 || msg.rfind("cannot open", 0) == 0) throw;
        throw InputError(path + ": " + msg);
    }
}

inline Matrix load_matrix(const std::string& path) {
    try {
        return matrix_from_json(read_json_file(path), "map");
    } catch (const InputError& e) {
        const std::string msg = e.what();
        if (msg.rfind(path, 0) == 0 || msg.rfind("cannot open", 0) == 0) throw;
        throw InputError(path + ": " + msg);
    }
}

}  // namespace nsgrad::io
