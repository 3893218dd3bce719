#include "leavitt/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace leavitt {

namespace {

// ---------------------------------------------------------------------------
// lexer shared by the element, module-element and polynomial grammars

enum class Tok { Name, Int, Plus, Minus, Star, Slash, Caret, Prime, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }
    bool at(Tok k) const { return cur_.kind == k; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("syntax error at position " + std::to_string(cur_.pos + 1) + ": " + msg);
    }

    Token expect(Tok k, const std::string& what) {
        if (!at(k)) fail("expected " + what);
        return take();
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        cur_.pos = i_;
        if (i_ >= text_.size()) {
            cur_ = {Tok::End, "", i_};
            return;
        }
        char c = text_[i_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            cur_ = {Tok::Name, std::string(text_.substr(i_, j - i_)), i_};
            i_ = j;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            cur_ = {Tok::Int, std::string(text_.substr(i_, j - i_)), i_};
            i_ = j;
            return;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '\'': k = Tok::Prime; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
            throw parse_error("syntax error at position " + std::to_string(i_ + 1) +
                              ": unexpected character '" + std::string(1, c) + "'");
        }
        cur_ = {k, std::string(1, c), i_++};
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token cur_{Tok::End, "", 0};
};

// ---------------------------------------------------------------------------
// element expressions; with_z admits the module generator `z` as a terminal

struct EValue {
    // either a pure algebra element, or an algebra element already applied
    // to the generator z (a module element)
    std::optional<AlgebraElement> alg;
    std::optional<SfcElement> mod;
};

class ElementParser {
public:
    ElementParser(std::string_view text, SessionPtr session, SfcSpecPtr spec_for_z)
        : lex_(text), session_(std::move(session)), spec_(std::move(spec_for_z)) {}

    EValue run() {
        EValue v = expr();
        if (!lex_.at(Tok::End)) lex_.fail("trailing input");
        return v;
    }

private:
    Scalar parse_number() {
        Token n = lex_.expect(Tok::Int, "a number");
        BigInt num(n.text);
        if (lex_.at(Tok::Slash)) {
            lex_.take();
            Token d = lex_.expect(Tok::Int, "a denominator");
            BigInt den(d.text);
            if (den == 0) lex_.fail("zero denominator");
            return Scalar::of_fraction(session_->field(), num, den);
        }
        return Scalar::of_integer(session_->field(), num);
    }

    EValue mul(const EValue& a, const EValue& b) {
        if (a.mod) lex_.fail("the generator z must be the last factor of a term");
        if (b.mod) return {std::nullopt, sfc_act(*a.alg, *b.mod)};
        return {*a.alg * *b.alg, std::nullopt};
    }

    EValue add(const EValue& a, const EValue& b, bool subtract) {
        if (a.mod != std::nullopt || b.mod != std::nullopt) {
            if (!a.mod || !b.mod) lex_.fail("cannot add an algebra element and a module element");
            return {std::nullopt, subtract ? *a.mod - *b.mod : *a.mod + *b.mod};
        }
        return {subtract ? *a.alg - *b.alg : *a.alg + *b.alg, std::nullopt};
    }

    EValue negate(const EValue& a) {
        if (a.mod) return {std::nullopt, -*a.mod};
        return {-*a.alg, std::nullopt};
    }

    EValue expr() {
        bool neg = false;
        if (lex_.at(Tok::Minus)) {
            lex_.take();
            neg = true;
        }
        EValue acc = term();
        if (neg) acc = negate(acc);
        while (lex_.at(Tok::Plus) || lex_.at(Tok::Minus)) {
            bool subtract = lex_.take().kind == Tok::Minus;
            acc = add(acc, term(), subtract);
        }
        return acc;
    }

    EValue term() {
        EValue acc = factor();
        while (lex_.at(Tok::Star)) {
            lex_.take();
            acc = mul(acc, factor());
        }
        return acc;
    }

    EValue factor() {
        if (lex_.at(Tok::Int)) {
            Scalar k = parse_number();
            return {AlgebraElement::identity(session_).scaled(k), std::nullopt};
        }
        if (lex_.at(Tok::LParen)) {
            lex_.take();
            EValue inner = expr();
            lex_.expect(Tok::RParen, "')'");
            if (lex_.at(Tok::Prime)) {
                lex_.take();
                if (inner.mod) lex_.fail("cannot take the ghost of a module element");
                return {involution(*inner.alg), std::nullopt};
            }
            return inner;
        }
        if (!lex_.at(Tok::Name)) lex_.fail("expected a name, number or '('");
        Token name = lex_.take();
        if (spec_ && name.text == "z") {
            if (lex_.at(Tok::Caret) || lex_.at(Tok::Prime))
                lex_.fail("z admits no powers or ghosts");
            return {std::nullopt, SfcElement::generator(spec_)};
        }
        int power = 1;
        if (lex_.at(Tok::Caret)) {
            lex_.take();
            Token p = lex_.expect(Tok::Int, "a positive power");
            power = std::stoi(p.text);
            if (power < 1) lex_.fail("power must be at least 1");
        }
        bool ghost = false;
        if (lex_.at(Tok::Prime)) {
            lex_.take();
            ghost = true;
        }
        const Graph& g = *session_->graph();
        int v = g.find_vertex(name.text);
        if (v >= 0) {
            return {AlgebraElement::vertex(session_, v), std::nullopt}; // v^k = v, v' = v
        }
        int e = g.find_edge(name.text);
        if (e < 0)
            throw parse_error("unknown name '" + name.text + "' at position " +
                              std::to_string(name.pos + 1));
        Path p = Path::edge(session_->graph(), e);
        if (power > 1) {
            if (!p.is_closed())
                throw parse_error("'" + name.text + "' is not a loop; powers need a closed path");
            p = p.pow(power);
        }
        AlgebraElement el = ghost ? AlgebraElement::ghost_path(session_, p)
                                  : AlgebraElement::path(session_, p);
        return {std::move(el), std::nullopt};
    }

    Lexer lex_;
    SessionPtr session_;
    SfcSpecPtr spec_;
};

// scalar prefix for a monomial term, "" for 1
std::string coeff_prefix(const Scalar& k) {
    Scalar a = k.abs();
    if (a.is_one()) return "";
    return a.str() + "*";
}

} // namespace

AlgebraElement parse_element(std::string_view text, const SessionPtr& session) {
    EValue v = ElementParser(text, session, nullptr).run();
    return *v.alg;
}

SfcElement parse_sfc_element(std::string_view text, const SfcSpecPtr& spec) {
    EValue v = ElementParser(text, spec->session(), spec).run();
    if (!v.mod) throw parse_error("module expression must involve the generator z");
    return *v.mod;
}

std::string format_path(const Path& p) {
    if (p.empty()) return p.graph()->vertex_name(p.source());
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += "*";
        out += p.graph()->edge(p.at(i)).name;
    }
    return out;
}

std::string format_monomial(const Monomial& m) {
    if (m.is_vertex()) return m.real().graph()->vertex_name(m.real().source());
    std::string out;
    for (int i = 0; i < m.real().length(); ++i) {
        if (!out.empty()) out += "*";
        out += m.real().graph()->edge(m.real().at(i)).name;
    }
    // ghost part prints outermost-first: (q_1..q_k)* = q_k' * ... * q_1'
    for (int i = m.ghost().length() - 1; i >= 0; --i) {
        if (!out.empty()) out += "*";
        out += m.ghost().graph()->edge(m.ghost().at(i)).name + "'";
    }
    return out;
}

std::string format_element(const AlgebraElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, k] : x.terms()) {
        if (first) {
            out += k.is_negative() ? "-" : "";
            first = false;
        } else {
            out += k.is_negative() ? " - " : " + ";
        }
        out += coeff_prefix(k) + format_monomial(m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// polynomials

Poly parse_poly(std::string_view text, Field field) {
    Lexer lex(text);
    std::vector<Scalar> coeffs;
    auto add_coeff = [&](int deg, const Scalar& k) {
        if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(static_cast<std::size_t>(deg) + 1, Scalar::zero(field));
        coeffs[static_cast<std::size_t>(deg)] += k;
    };
    bool first = true;
    while (true) {
        bool neg = false;
        if (lex.at(Tok::Minus)) {
            lex.take();
            neg = true;
        } else if (lex.at(Tok::Plus)) {
            if (first) lex.fail("expected a term");
            lex.take();
        } else if (!first) {
            break;
        }
        first = false;
        Scalar k = Scalar::one(field);
        bool have_coeff = false;
        if (lex.at(Tok::Int)) {
            Token n = lex.take();
            BigInt num(n.text);
            if (lex.at(Tok::Slash)) {
                lex.take();
                Token d = lex.expect(Tok::Int, "a denominator");
                BigInt den(d.text);
                if (den == 0) lex.fail("zero denominator");
                k = Scalar::of_fraction(field, num, den);
            } else {
                k = Scalar::of_integer(field, num);
            }
            have_coeff = true;
        }
        int deg = 0;
        bool have_x = false;
        if (have_coeff && lex.at(Tok::Star)) {
            lex.take();
            have_x = true; // a variable must follow
        } else if (!have_coeff) {
            have_x = true;
        } else if (lex.at(Tok::Name)) {
            lex.fail("expected '*' between coefficient and x");
        }
        if (have_x) {
            Token n = lex.expect(Tok::Name, "the variable x");
            if (n.text != "x") lex.fail("polynomials use the variable x");
            deg = 1;
            if (lex.at(Tok::Caret)) {
                lex.take();
                Token p = lex.expect(Tok::Int, "a positive power");
                deg = std::stoi(p.text);
                if (deg < 1) lex.fail("power must be at least 1");
            }
        }
        add_coeff(deg, neg ? -k : k);
    }
    if (!lex.at(Tok::End)) lex.fail("trailing input");
    return Poly(field, std::move(coeffs));
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i <= f.degree(); ++i) {
        Scalar k = f.coeff(i);
        if (k.is_zero()) continue;
        if (first) {
            out += k.is_negative() ? "-" : "";
            first = false;
        } else {
            out += k.is_negative() ? " - " : " + ";
        }
        Scalar a = k.abs();
        if (i == 0) {
            out += a.str();
        } else {
            out += a.is_one() ? "" : a.str() + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string format_sfc_element(const SfcElement& m) {
    if (m.is_zero()) return "0";
    std::string out;
    for (const auto& [alpha, u] : m.terms()) {
        if (!out.empty()) out += " + ";
        out += "[" + format_path(alpha) + "](" + format_poly(u.lift()) + ")";
    }
    return out;
}

std::string format_rip(const RationalInfinitePath& p) {
    std::string period = "(" + format_path(p.period()) + ")^inf";
    if (p.prefix().empty()) return period;
    return format_path(p.prefix()) + "*" + period;
}

std::string format_chen_element(const ChenElement& m) {
    if (m.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, k] : m.terms()) {
        if (first) {
            out += k.is_negative() ? "-" : "";
            first = false;
        } else {
            out += k.is_negative() ? " - " : " + ";
        }
        out += coeff_prefix(k) + "[" + format_rip(key) + "]";
    }
    return out;
}

Field parse_field(std::string_view text) {
    if (text == "Q") return Field::rationals();
    if (text.rfind("Fp:", 0) == 0) {
        std::string num(text.substr(3));
        if (num.empty()) throw parse_error("expected a prime after Fp:");
        for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("invalid characteristic '" + num + "'");
        try {
            return Field::fp(std::stoull(num));
        } catch (const domain_error& e) {
            throw parse_error(e.what());
        }
    }
    throw parse_error("field must be Q or Fp:<prime>, got '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// generator-map and module descriptors

GenMap parse_genmap_file(std::string_view text, const SessionPtr& session) {
    const Graph& g = *session->graph();
    GenMap id = GenMap::identity(session);
    std::vector<AlgebraElement> vs, es, gs;
    for (int v = 0; v < g.vertex_count(); ++v) vs.push_back(id.vertex_image(v));
    for (int e = 0; e < g.edge_count(); ++e) {
        es.push_back(id.edge_image(e));
        gs.push_back(id.ghost_image(e));
    }
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind, name, eq;
        if (!(ls >> kind)) continue;
        auto fail = [&](const std::string& msg) -> parse_error {
            return parse_error("automorphism file line " + std::to_string(lineno) + ": " + msg);
        };
        if (kind != "vertex" && kind != "edge" && kind != "ghost")
            throw fail("expected vertex/edge/ghost, got '" + kind + "'");
        if (!(ls >> name >> eq) || eq != "=") throw fail("expected `" + kind + " <name> = <expr>`");
        std::string rest;
        std::getline(ls, rest);
        AlgebraElement img = parse_element(rest, session);
        if (kind == "vertex") {
            int v = g.find_vertex(name);
            if (v < 0) throw fail("unknown vertex '" + name + "'");
            vs[static_cast<std::size_t>(v)] = std::move(img);
        } else {
            int e = g.find_edge(name);
            if (e < 0) throw fail("unknown edge '" + name + "'");
            if (kind == "edge")
                es[static_cast<std::size_t>(e)] = std::move(img);
            else
                gs[static_cast<std::size_t>(e)] = std::move(img);
        }
    }
    return GenMap(session, std::move(vs), std::move(es), std::move(gs));
}

namespace {

std::vector<std::pair<std::string, std::string>> split_kv(std::string_view body) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t i = 0;
    while (i <= body.size()) {
        std::size_t j = body.find(',', i);
        if (j == std::string_view::npos) j = body.size();
        std::string_view item = body.substr(i, j - i);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw parse_error("descriptor item '" + std::string(item) + "' is not key=value");
        out.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
        i = j + 1;
        if (j == body.size()) break;
    }
    return out;
}

Path path_of_expr(const std::string& text, const SessionPtr& session) {
    AlgebraElement x = parse_element(text, session);
    if (x.term_count() != 1) throw domain_error("'" + text + "' is not a single path");
    const auto& [m, k] = *x.terms().begin();
    if (!k.is_one() || !m.ghost().empty())
        throw domain_error("'" + text + "' is not a single path");
    return m.real();
}

} // namespace

GenMap parse_anick_descriptor(std::string_view text, const SessionPtr& session) {
    constexpr std::string_view prefix = "anick:";
    if (text.rfind(prefix, 0) != 0)
        throw parse_error("automorphism descriptor must start with 'anick:'");
    const Graph& g = *session->graph();
    std::string p_text;
    int e1 = g.edge_count() > 0 ? 0 : -1;
    int e2 = g.edge_count() > 1 ? 1 : -1;
    for (const auto& [key, value] : split_kv(text.substr(prefix.size()))) {
        if (key == "p") {
            p_text = value;
        } else if (key == "e1" || key == "e2") {
            int e = g.find_edge(value);
            if (e < 0) throw parse_error("unknown edge '" + value + "' in anick descriptor");
            (key == "e1" ? e1 : e2) = e;
        } else {
            throw parse_error("unknown anick descriptor key '" + key + "'");
        }
    }
    if (p_text.empty()) throw parse_error("anick descriptor needs p=<expr>");
    if (e1 < 0 || e2 < 0) throw domain_error("anick construction needs two edges");
    AlgebraElement p = parse_element(p_text, session);
    return build_anick(p, e1, e2).first;
}

ModuleDescriptor parse_module_descriptor(std::string_view text, const SessionPtr& session,
                                         bool assume_irreducible) {
    constexpr std::string_view prefix = "sfc:";
    if (text.rfind(prefix, 0) != 0)
        throw parse_error("module descriptor must start with 'sfc:'");
    std::string c_text, f_text, twist_text;
    for (const auto& [key, value] : split_kv(text.substr(prefix.size()))) {
        if (key == "c")
            c_text = value;
        else if (key == "f")
            f_text = value;
        else if (key == "twist")
            twist_text = value;
        else
            throw parse_error("unknown module descriptor key '" + key + "'");
    }
    if (c_text.empty() || f_text.empty())
        throw parse_error("module descriptor needs c=<path> and f=<poly>");
    Path c = path_of_expr(c_text, session);
    IrrPoly f = IrrPoly::make(parse_poly(f_text, session->field()), assume_irreducible);
    ModuleDescriptor out{make_sfc(session, c, std::move(f)), std::nullopt};
    if (!twist_text.empty()) out.twist = parse_element(twist_text, session);
    return out;
}

} // namespace leavitt
