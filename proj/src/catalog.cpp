#include "supint/catalog.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

#include "supint/errors.hpp"

namespace supint {

const ConstantRecord* SystemRecord::find_constant(const std::string& name) const {
    for (const auto& c : constants)
        if (c.name == name) return &c;
    return nullptr;
}

const SystemRecord* Catalog::find_system(const std::string& id) const {
    for (const auto& s : systems)
        if (s.id == id) return &s;
    return nullptr;
}

const SystemRecord& Catalog::system(const std::string& id) const {
    if (const auto* s = find_system(id)) return *s;
    throw UnknownSystem("unknown system: " + id);
}

const ChartRecord* Catalog::find_chart(const std::string& id) const {
    for (const auto& c : charts)
        if (c.id == id) return &c;
    return nullptr;
}

const ChartRecord& Catalog::chart(const std::string& id) const {
    if (const auto* c = find_chart(id)) return *c;
    throw ChartMismatch("unknown chart: " + id);
}

// ---------------------------------------------------------------------------
// Generic s-expression layer.  Expression trees are embedded as quoted
// strings holding their own serialized form, so this layer only sees lists,
// bare atoms, and strings.
// ---------------------------------------------------------------------------

namespace {

struct SNode {
    bool is_list = false;
    std::string atom;         // valid when !is_list
    bool quoted = false;      // atom came from a quoted string
    std::vector<SNode> kids;  // valid when is_list
};

struct SLexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
            if (s[i] == ';') { // comment to end of line
                while (i < s.size() && s[i] != '\n') ++i;
                continue;
            }
            break;
        }
    }

    SNode parse() {
        skip_ws();
        if (i >= s.size()) throw CatalogFormatError("unexpected end of catalog text");
        if (s[i] == '(') {
            ++i;
            SNode n;
            n.is_list = true;
            for (;;) {
                skip_ws();
                if (i >= s.size()) throw CatalogFormatError("unterminated list");
                if (s[i] == ')') { ++i; return n; }
                n.kids.push_back(parse());
            }
        }
        if (s[i] == ')') throw CatalogFormatError("unexpected ')'");
        SNode n;
        if (s[i] == '"') {
            ++i;
            n.quoted = true;
            while (i < s.size() && s[i] != '"') {
                if (s[i] == '\\' && i + 1 < s.size()) ++i;
                n.atom += s[i++];
            }
            if (i >= s.size()) throw CatalogFormatError("unterminated string");
            ++i;
            return n;
        }
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
               s[i] != '(' && s[i] != ')')
            n.atom += s[i++];
        return n;
    }

    bool at_end() {
        skip_ws();
        return i >= s.size();
    }
};

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_scalar(Scalar z) {
    return fmt_double(z.real()) + " " + fmt_double(z.imag());
}

double parse_double(const SNode& n) {
    if (n.is_list) throw CatalogFormatError("expected number");
    char* end = nullptr;
    double x = std::strtod(n.atom.c_str(), &end);
    if (end == n.atom.c_str() || *end != '\0')
        throw CatalogFormatError("bad number: " + n.atom);
    return x;
}

const std::string& head(const SNode& n) {
    if (!n.is_list || n.kids.empty() || n.kids[0].is_list)
        throw CatalogFormatError("expected a keyed list");
    return n.kids[0].atom;
}

const SNode* find_key(const SNode& n, const std::string& key) {
    for (size_t k = 1; k < n.kids.size(); ++k)
        if (n.kids[k].is_list && head(n.kids[k]) == key) return &n.kids[k];
    return nullptr;
}

const SNode& need_key(const SNode& n, const std::string& key) {
    if (const SNode* p = find_key(n, key)) return *p;
    throw CatalogFormatError("missing field '" + key + "' in " + head(n) + " record");
}

std::string atom_at(const SNode& n, size_t k) {
    if (k >= n.kids.size() || n.kids[k].is_list)
        throw CatalogFormatError("expected atom in " + head(n));
    return n.kids[k].atom;
}

ExprPtr expr_at(const SNode& n, size_t k) {
    return expr_from_text(atom_at(n, k));
}

std::vector<std::string> atoms_after_head(const SNode& n) {
    std::vector<std::string> out;
    for (size_t k = 1; k < n.kids.size(); ++k) out.push_back(atom_at(n, k));
    return out;
}

std::vector<ExprPtr> exprs_after_head(const SNode& n) {
    std::vector<ExprPtr> out;
    for (size_t k = 1; k < n.kids.size(); ++k) out.push_back(expr_at(n, k));
    return out;
}

Scalar scalar_at(const SNode& n, size_t k) {
    if (k + 1 >= n.kids.size())
        throw CatalogFormatError("expected re/im pair in " + head(n));
    return {parse_double(n.kids[k]), parse_double(n.kids[k + 1])};
}

// ------------------------------------------------------------------
// Emission helpers
// ------------------------------------------------------------------

void emit_field(std::ostream& os, const char* key, const std::string& atom) {
    os << "  (" << key << " " << atom << ")\n";
}

void emit_expr_field(std::ostream& os, const char* key, const ExprPtr& e) {
    os << "  (" << key << " " << quote(expr_to_text(e)) << ")\n";
}

void emit_expr_list(std::ostream& os, const char* key, const std::vector<ExprPtr>& es) {
    if (es.empty()) return;
    os << "  (" << key;
    for (const auto& e : es) os << " " << quote(expr_to_text(e));
    os << ")\n";
}

void emit_atoms(std::ostream& os, const char* key, const std::vector<std::string>& xs) {
    if (xs.empty()) return;
    os << "  (" << key;
    for (const auto& x : xs) os << " " << x;
    os << ")\n";
}

void emit_box(std::ostream& os, const char* key, const SampleBox& b) {
    os << "  (" << key;
    for (double x : b.b) os << " " << fmt_double(x);
    os << ")\n";
}

void emit_correction(std::ostream& os, const std::optional<Correction>& c) {
    if (!c) return;
    os << " (corrected " << quote(expr_to_text(c->expr)) << " " << quote(c->note) << ")";
}

std::optional<Correction> parse_correction(const SNode& n) {
    const SNode* p = find_key(n, "corrected");
    if (!p) return std::nullopt;
    Correction c;
    c.expr = expr_at(*p, 1);
    c.note = atom_at(*p, 2);
    return c;
}

SampleBox parse_box(const SNode& n) {
    SampleBox b;
    if (n.kids.size() != 9) throw CatalogFormatError("box needs 8 numbers");
    for (int k = 0; k < 8; ++k) b.b[size_t(k)] = parse_double(n.kids[size_t(k) + 1]);
    return b;
}

} // namespace

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string catalog_to_text(const Catalog& c) {
    std::ostringstream os;
    os << "(supint-catalog (version " << c.version << "))\n";

    for (const auto& s : c.systems) {
        os << "(system\n";
        emit_field(os, "id", s.id);
        emit_field(os, "space", s.space);
        emit_field(os, "chart", s.chart_id);
        emit_atoms(os, "params", s.required_params);
        for (const auto& [name, val] : s.default_params)
            os << "  (default " << name << " " << fmt_scalar(val) << ")\n";
        for (const auto& [name, val] : s.degenerate_params)
            os << "  (degenerate " << name << " " << fmt_scalar(val) << ")\n";
        emit_expr_field(os, "H", s.hamiltonian);
        emit_expr_list(os, "guards", s.guards);
        emit_box(os, "box", s.box);
        if (s.real_flow) {
            os << "  (realbox";
            for (double x : s.real_box.b) os << " " << fmt_double(x);
            os << ")\n";
        }
        if (s.metric_only) os << "  (metric-only)\n";
        for (const auto& k : s.constants) {
            os << "  (constant " << k.name << " " << k.order << " "
               << quote(expr_to_text(k.expr));
            emit_correction(os, k.corrected);
            os << ")\n";
        }
        emit_atoms(os, "generators", s.generators);
        for (const auto& r : s.relations) {
            os << "  (relation " << r.id << " " << r.lhs_a << " " << r.lhs_b << " "
               << quote(expr_to_text(r.rhs));
            emit_correction(os, r.corrected);
            os << ")\n";
        }
        for (const auto& idn : s.identities) {
            os << "  (identity " << idn.id << " " << (idn.r_squared ? 1 : 0) << " "
               << quote(expr_to_text(idn.expr));
            emit_correction(os, idn.corrected);
            os << ")\n";
        }
        if (s.quad_algebra)
            os << "  (quad-algebra " << s.r2_identity_id << ")\n";
        for (const auto& op : s.operators) {
            os << "  (operator " << op.name;
            for (const auto& t : op.terms)
                os << " (term " << quote(expr_to_text(t.coeff)) << " " << t.du << " "
                   << t.dv << ")";
            os << ")\n";
        }
        for (const auto& r : s.op_relations) {
            os << "  (op-relation " << r.id << " " << r.lhs_a << " " << r.lhs_b << " "
               << quote(expr_to_text(r.rhs));
            emit_correction(os, r.corrected);
            os << ")\n";
        }
        for (const auto& idn : s.op_identities) {
            os << "  (op-identity " << idn.id << " " << quote(expr_to_text(idn.expr));
            emit_correction(os, idn.corrected);
            os << ")\n";
        }
        os << ")\n";
    }

    for (const auto& ch : c.charts) {
        os << "(chart\n";
        emit_field(os, "id", ch.id);
        emit_field(os, "space", ch.space);
        emit_atoms(os, "coords", ch.coord_names);
        emit_atoms(os, "params", ch.required_params);
        for (const auto& [name, val] : ch.default_params)
            os << "  (default " << name << " " << fmt_scalar(val) << ")\n";
        emit_expr_field(os, "to-base-u", ch.to_base_u);
        emit_expr_field(os, "to-base-v", ch.to_base_v);
        emit_expr_field(os, "from-base-q1", ch.from_base_q1);
        emit_expr_field(os, "from-base-q2", ch.from_base_q2);
        emit_expr_list(os, "guards-chart", ch.guards_chart);
        emit_expr_list(os, "guards-base", ch.guards_base);
        emit_box(os, "box", ch.box);
        os << ")\n";
    }

    for (const auto& st : c.stackel) {
        os << "(stackel\n";
        emit_field(os, "id", st.id);
        emit_field(os, "system", st.system_id);
        emit_field(os, "chart", st.chart_id);
        emit_expr_field(os, "f1", st.f1);
        emit_expr_field(os, "f2", st.f2);
        emit_expr_field(os, "v1", st.v1);
        emit_expr_field(os, "v2", st.v2);
        emit_expr_field(os, "g1", st.g1);
        emit_expr_field(os, "g2", st.g2);
        auto emit_slot = [&os](const char* key, const std::optional<Correction>& cor) {
            if (!cor) return;
            os << "  (" << key << " " << quote(expr_to_text(cor->expr)) << " "
               << quote(cor->note) << ")\n";
        };
        emit_slot("corrected-f1", st.corrected_f1);
        emit_slot("corrected-f2", st.corrected_f2);
        emit_slot("corrected-v1", st.corrected_v1);
        emit_slot("corrected-v2", st.corrected_v2);
        emit_slot("corrected-g1", st.corrected_g1);
        emit_slot("corrected-g2", st.corrected_g2);
        os << ")\n";
    }

    for (const auto& cc : c.chart_constants) {
        os << "(chart-constant\n";
        emit_field(os, "id", cc.id);
        emit_field(os, "system", cc.system_id);
        emit_field(os, "chart", cc.chart_id);
        emit_expr_field(os, "expr", cc.chart_expr);
        emit_expr_field(os, "combo", cc.combo);
        if (cc.corrected)
            os << "  (corrected " << quote(expr_to_text(cc.corrected->expr)) << " "
               << quote(cc.corrected->note) << ")\n";
        os << ")\n";
    }

    for (const auto& em : c.embeddings) {
        os << "(embedding\n";
        emit_field(os, "id", em.id);
        emit_field(os, "space", em.space);
        emit_field(os, "variant", em.variant);
        emit_field(os, "deviation", em.deviation ? "1" : "0");
        emit_atoms(os, "params", em.required_params);
        emit_expr_field(os, "X", em.X);
        emit_expr_field(os, "Y", em.Y);
        emit_expr_field(os, "T", em.T);
        emit_expr_field(os, "conformal", em.conformal);
        emit_expr_list(os, "guards", em.guards);
        emit_box(os, "box", em.box);
        if (!em.note.empty()) emit_field(os, "note", quote(em.note));
        os << ")\n";
    }

    for (const auto& row : c.ccm_rows) {
        os << "(ccm-row\n";
        emit_field(os, "id", row.id);
        emit_field(os, "source", row.source_id);
        emit_expr_field(os, "divisor", row.divisor);
        emit_field(os, "target-space", row.target_space);
        emit_field(os, "target-free", row.target_free_id);
        emit_expr_field(os, "u-map", row.u_map);
        emit_expr_field(os, "v-map", row.v_map);
        emit_field(os, "h-scale", fmt_scalar(row.h_scale));
        emit_field(os, "class", row.identity_class);
        os << ")\n";
    }

    for (const auto& gp : c.gen_pairs) {
        os << "(gen-pair\n";
        emit_field(os, "id", gp.id);
        emit_field(os, "source", gp.source_id);
        emit_expr_field(os, "divisor", gp.divisor);
        emit_field(os, "target", gp.target_id);
        emit_expr_field(os, "u-map", gp.u_map);
        emit_expr_field(os, "v-map", gp.v_map);
        emit_field(os, "h-scale", fmt_scalar(gp.h_scale));
        if (!gp.note.empty()) emit_field(os, "note", quote(gp.note));
        os << ")\n";
    }

    return os.str();
}

Catalog catalog_from_text(const std::string& text) {
    Catalog c;
    SLexer lex{text};
    bool saw_header = false;
    while (!lex.at_end()) {
        SNode n = lex.parse();
        if (!n.is_list) throw CatalogFormatError("top-level atom in catalog");
        const std::string& h = head(n);
        if (h == "supint-catalog") {
            saw_header = true;
            c.version = static_cast<int>(parse_double(need_key(n, "version").kids.at(1)));
            continue;
        }
        if (!saw_header) throw CatalogFormatError("catalog header missing");
        if (h == "system") {
            SystemRecord s;
            s.id = atom_at(need_key(n, "id"), 1);
            s.space = atom_at(need_key(n, "space"), 1);
            s.chart_id = atom_at(need_key(n, "chart"), 1);
            if (const SNode* p = find_key(n, "params"))
                s.required_params = atoms_after_head(*p);
            for (size_t k = 1; k < n.kids.size(); ++k) {
                const SNode& f = n.kids[k];
                if (!f.is_list) continue;
                const std::string& fh = head(f);
                if (fh == "default")
                    s.default_params.emplace_back(atom_at(f, 1), scalar_at(f, 2));
                else if (fh == "degenerate")
                    s.degenerate_params.emplace_back(atom_at(f, 1), scalar_at(f, 2));
                else if (fh == "constant")
                    s.constants.push_back({atom_at(f, 1),
                                           static_cast<int>(parse_double(f.kids.at(2))),
                                           expr_at(f, 3), parse_correction(f)});
                else if (fh == "relation")
                    s.relations.push_back({atom_at(f, 1), atom_at(f, 2), atom_at(f, 3),
                                           expr_at(f, 4), parse_correction(f)});
                else if (fh == "identity")
                    s.identities.push_back({atom_at(f, 1), expr_at(f, 3),
                                            parse_double(f.kids.at(2)) != 0.0,
                                            parse_correction(f)});
                else if (fh == "operator") {
                    OperatorRecord op;
                    op.name = atom_at(f, 1);
                    for (size_t j = 2; j < f.kids.size(); ++j) {
                        const SNode& t = f.kids[j];
                        if (!t.is_list || head(t) != "term")
                            throw CatalogFormatError("bad operator term");
                        op.terms.push_back({expr_at(t, 1),
                                            static_cast<int>(parse_double(t.kids.at(2))),
                                            static_cast<int>(parse_double(t.kids.at(3)))});
                    }
                    s.operators.push_back(std::move(op));
                } else if (fh == "op-relation")
                    s.op_relations.push_back({atom_at(f, 1), atom_at(f, 2), atom_at(f, 3),
                                              expr_at(f, 4), parse_correction(f)});
                else if (fh == "op-identity")
                    s.op_identities.push_back({atom_at(f, 1), expr_at(f, 2),
                                               parse_correction(f)});
            }
            s.hamiltonian = expr_at(need_key(n, "H"), 1);
            if (const SNode* p = find_key(n, "guards")) s.guards = exprs_after_head(*p);
            s.box = parse_box(need_key(n, "box"));
            if (const SNode* p = find_key(n, "realbox")) {
                s.real_flow = true;
                if (p->kids.size() != 7) throw CatalogFormatError("realbox needs 6 numbers");
                for (int k = 0; k < 6; ++k)
                    s.real_box.b[size_t(k)] = parse_double(p->kids[size_t(k) + 1]);
            }
            s.metric_only = find_key(n, "metric-only") != nullptr;
            if (const SNode* p = find_key(n, "generators"))
                s.generators = atoms_after_head(*p);
            if (const SNode* p = find_key(n, "quad-algebra")) {
                s.quad_algebra = true;
                s.r2_identity_id = atom_at(*p, 1);
            }
            c.systems.push_back(std::move(s));
        } else if (h == "chart") {
            ChartRecord ch;
            ch.id = atom_at(need_key(n, "id"), 1);
            ch.space = atom_at(need_key(n, "space"), 1);
            ch.coord_names = atoms_after_head(need_key(n, "coords"));
            if (const SNode* p = find_key(n, "params"))
                ch.required_params = atoms_after_head(*p);
            for (size_t k = 1; k < n.kids.size(); ++k) {
                const SNode& f = n.kids[k];
                if (f.is_list && head(f) == "default")
                    ch.default_params.emplace_back(atom_at(f, 1), scalar_at(f, 2));
            }
            ch.to_base_u = expr_at(need_key(n, "to-base-u"), 1);
            ch.to_base_v = expr_at(need_key(n, "to-base-v"), 1);
            ch.from_base_q1 = expr_at(need_key(n, "from-base-q1"), 1);
            ch.from_base_q2 = expr_at(need_key(n, "from-base-q2"), 1);
            if (const SNode* p = find_key(n, "guards-chart"))
                ch.guards_chart = exprs_after_head(*p);
            if (const SNode* p = find_key(n, "guards-base"))
                ch.guards_base = exprs_after_head(*p);
            ch.box = parse_box(need_key(n, "box"));
            c.charts.push_back(std::move(ch));
        } else if (h == "stackel") {
            StackelRecord st;
            st.id = atom_at(need_key(n, "id"), 1);
            st.system_id = atom_at(need_key(n, "system"), 1);
            st.chart_id = atom_at(need_key(n, "chart"), 1);
            st.f1 = expr_at(need_key(n, "f1"), 1);
            st.f2 = expr_at(need_key(n, "f2"), 1);
            st.v1 = expr_at(need_key(n, "v1"), 1);
            st.v2 = expr_at(need_key(n, "v2"), 1);
            st.g1 = expr_at(need_key(n, "g1"), 1);
            st.g2 = expr_at(need_key(n, "g2"), 1);
            auto parse_slot = [&n](const char* key) -> std::optional<Correction> {
                if (const SNode* p = find_key(n, key))
                    return Correction{expr_at(*p, 1), atom_at(*p, 2)};
                return std::nullopt;
            };
            st.corrected_f1 = parse_slot("corrected-f1");
            st.corrected_f2 = parse_slot("corrected-f2");
            st.corrected_v1 = parse_slot("corrected-v1");
            st.corrected_v2 = parse_slot("corrected-v2");
            st.corrected_g1 = parse_slot("corrected-g1");
            st.corrected_g2 = parse_slot("corrected-g2");
            c.stackel.push_back(std::move(st));
        } else if (h == "chart-constant") {
            ChartConstantRecord cc;
            cc.id = atom_at(need_key(n, "id"), 1);
            cc.system_id = atom_at(need_key(n, "system"), 1);
            cc.chart_id = atom_at(need_key(n, "chart"), 1);
            cc.chart_expr = expr_at(need_key(n, "expr"), 1);
            cc.combo = expr_at(need_key(n, "combo"), 1);
            if (const SNode* p = find_key(n, "corrected"))
                cc.corrected = Correction{expr_at(*p, 1), atom_at(*p, 2)};
            c.chart_constants.push_back(std::move(cc));
        } else if (h == "embedding") {
            EmbeddingRecord em;
            em.id = atom_at(need_key(n, "id"), 1);
            em.space = atom_at(need_key(n, "space"), 1);
            em.variant = atom_at(need_key(n, "variant"), 1);
            em.deviation = parse_double(need_key(n, "deviation").kids.at(1)) != 0.0;
            if (const SNode* p = find_key(n, "params"))
                em.required_params = atoms_after_head(*p);
            em.X = expr_at(need_key(n, "X"), 1);
            em.Y = expr_at(need_key(n, "Y"), 1);
            em.T = expr_at(need_key(n, "T"), 1);
            em.conformal = expr_at(need_key(n, "conformal"), 1);
            if (const SNode* p = find_key(n, "guards")) em.guards = exprs_after_head(*p);
            em.box = parse_box(need_key(n, "box"));
            if (const SNode* p = find_key(n, "note")) em.note = atom_at(*p, 1);
            c.embeddings.push_back(std::move(em));
        } else if (h == "ccm-row") {
            CCMRowRecord row;
            row.id = atom_at(need_key(n, "id"), 1);
            row.source_id = atom_at(need_key(n, "source"), 1);
            row.divisor = expr_at(need_key(n, "divisor"), 1);
            row.target_space = atom_at(need_key(n, "target-space"), 1);
            row.target_free_id = atom_at(need_key(n, "target-free"), 1);
            row.u_map = expr_at(need_key(n, "u-map"), 1);
            row.v_map = expr_at(need_key(n, "v-map"), 1);
            row.h_scale = scalar_at(need_key(n, "h-scale"), 1);
            row.identity_class = atom_at(need_key(n, "class"), 1);
            c.ccm_rows.push_back(std::move(row));
        } else if (h == "gen-pair") {
            GenPairRecord gp;
            gp.id = atom_at(need_key(n, "id"), 1);
            gp.source_id = atom_at(need_key(n, "source"), 1);
            gp.divisor = expr_at(need_key(n, "divisor"), 1);
            gp.target_id = atom_at(need_key(n, "target"), 1);
            gp.u_map = expr_at(need_key(n, "u-map"), 1);
            gp.v_map = expr_at(need_key(n, "v-map"), 1);
            gp.h_scale = scalar_at(need_key(n, "h-scale"), 1);
            if (const SNode* p = find_key(n, "note")) gp.note = atom_at(*p, 1);
            c.gen_pairs.push_back(std::move(gp));
        } else {
            throw CatalogFormatError("unknown record type: " + h);
        }
    }
    if (!saw_header) throw CatalogFormatError("empty catalog");
    return c;
}

// ---------------------------------------------------------------------------
// File IO and hashing
// ---------------------------------------------------------------------------

Catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CatalogFormatError("cannot open catalog file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return catalog_from_text(ss.str());
}

void save_catalog_file(const Catalog& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CatalogFormatError("cannot write catalog file: " + path);
    out << catalog_to_text(c);
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("SUPINT_CATALOG")) return env;
    std::ifstream probe("data/catalog.sup");
    if (probe) return "data/catalog.sup";
#ifdef SUPINT_SOURCE_CATALOG
    return SUPINT_SOURCE_CATALOG;
#else
    return "data/catalog.sup";
#endif
}

const Catalog& shared_catalog() {
    static std::once_flag flag;
    static std::unique_ptr<Catalog> cat;
    std::call_once(flag, [] { cat = std::make_unique<Catalog>(load_catalog_file(default_catalog_path())); });
    return *cat;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, md, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("sha256 failure");
    }
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int k = 0; k < len; ++k) {
        out += hex[md[k] >> 4];
        out += hex[md[k] & 0xf];
    }
    return out;
}

} // namespace supint
