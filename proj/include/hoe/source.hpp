#pragma once

// The line-oriented source format for presented Hopf algebras, Ore data and
// Hopf structures on Ore extensions, its printer, and assembly of a parsed
// file into checked algebra objects.
//
//   algebra NAME
//   gen y z
//   gen g inv G
//   rel z*y = y*z
//   delta y = y ox 1 + 1 ox y
//   counit y = 0
//   antipode y = -y
//   ore x
//   auto sigma y = y
//   autoinv sigma y = y
//   der delta y = 0
//   deltaX = 1 ox x + x ox 1 + y ox z
//   counitX = 0
//   hoe beta = 1
//   hoe w = y ox z
//   hoe chi y = 0
//   assert domain

#include "hoe/hoe.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hoe {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

class UndeclaredSymbol : public ParseError {
public:
    UndeclaredSymbol(std::size_t line, std::size_t column, const std::string& name)
        : ParseError(line, column, "undeclared symbol '" + name + "'"), name_(name)
    {
    }
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// Structurally incomplete or inconsistent source (missing images and the like).
class AssemblyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Presentation whose ambiguities do not resolve at the requested degree.
class ConfluenceFailure : public std::runtime_error {
public:
    ConfluenceFailure(const std::string& msg, ConfluenceReport rep) : std::runtime_error(msg), report_(std::move(rep)) {}
    const ConfluenceReport& report() const { return report_; }

private:
    ConfluenceReport report_;
};

/// Tensor over the free algebra, before any rewriting.
struct FreeTensor {
    std::size_t arity = 2;
    std::map<std::vector<Word>, Scalar> terms;

    void add(std::vector<Word> k, const Scalar& c)
    {
        if (is_zero(c)) return;
        auto [it, ins] = terms.try_emplace(std::move(k), c);
        if (!ins) {
            it->second += c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }
    friend bool operator==(const FreeTensor& a, const FreeTensor& b) { return a.arity == b.arity && a.terms == b.terms; }
};

struct SourceFile {
    std::string name;
    std::vector<std::string> gens;
    std::vector<std::optional<Symbol>> inverse; // partner index per generator
    std::vector<std::pair<NCPoly, NCPoly>> relations;
    std::map<Symbol, FreeTensor> delta;
    std::map<Symbol, Scalar> counit;
    std::map<Symbol, NCPoly> antipode;
    std::optional<std::string> x_name;
    std::map<Symbol, NCPoly> sigma, sigma_inv, der;
    std::optional<FreeTensor> delta_x;
    std::optional<Scalar> counit_x;
    std::optional<NCPoly> hoe_beta;
    std::optional<FreeTensor> hoe_w;
    std::map<Symbol, Scalar> hoe_chi;
    std::vector<std::string> assertions;

    bool has_hopf() const { return !delta.empty() || !counit.empty() || !antipode.empty(); }
    bool has_hoe() const { return hoe_beta || hoe_w || !hoe_chi.empty(); }

    friend bool operator==(const SourceFile& a, const SourceFile& b)
    {
        return a.name == b.name && a.gens == b.gens && a.inverse == b.inverse && a.relations == b.relations &&
               a.delta == b.delta && a.counit == b.counit && a.antipode == b.antipode && a.x_name == b.x_name &&
               a.sigma == b.sigma && a.sigma_inv == b.sigma_inv && a.der == b.der && a.delta_x == b.delta_x &&
               a.counit_x == b.counit_x && a.hoe_beta == b.hoe_beta && a.hoe_w == b.hoe_w && a.hoe_chi == b.hoe_chi &&
               a.assertions == b.assertions;
    }
};

// ---------------------------------------------------------------------------
// Parser

namespace detail {

struct Token {
    enum Kind { ident, number, sym, end } kind = end;
    std::string text;
    std::size_t col = 0;
};

inline std::vector<Token> tokenize(const std::string& line, std::size_t lineno)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char ch = line[i];
        if (ch == '#') break;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_' ||
                                       line[i] == '\''))
                ++i;
            out.push_back({Token::ident, line.substr(start, i - start), start + 1});
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
            out.push_back({Token::number, line.substr(start, i - start), start + 1});
        } else if (std::string("+-*/^()=").find(ch) != std::string::npos) {
            out.push_back({Token::sym, std::string(1, ch), start + 1});
            ++i;
        } else {
            throw ParseError(lineno, start + 1, std::string("unexpected character '") + ch + "'");
        }
    }
    out.push_back({Token::end, "", line.size() + 1});
    return out;
}

/// Recursive-descent reader for one line.
class LineParser {
public:
    LineParser(std::vector<Token> toks, std::size_t lineno, const std::vector<std::string>& names)
        : toks_(std::move(toks)), line_(lineno), names_(names)
    {
    }

    const Token& peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().kind == Token::end; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, peek().col, msg); }
    [[noreturn]] void fail_at(const Token& t, const std::string& msg) const { throw ParseError(line_, t.col, msg); }

    bool accept(const std::string& s)
    {
        if ((peek().kind == Token::sym || peek().kind == Token::ident) && peek().text == s) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const std::string& s)
    {
        if (!accept(s)) fail("expected '" + s + "'" + (at_end() ? " before end of line" : ", found '" + peek().text + "'"));
    }
    std::string ident(const std::string& what)
    {
        if (peek().kind != Token::ident) fail("expected " + what);
        return next().text;
    }
    void expect_end()
    {
        if (!at_end()) fail("unexpected '" + peek().text + "'");
    }

    Symbol symbol(const Token& t) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == t.text) return static_cast<Symbol>(i);
        throw UndeclaredSymbol(line_, t.col, t.text);
    }

    // poly := product (('+'|'-') product)*
    NCPoly poly()
    {
        NCPoly r = product();
        while (true) {
            if (accept("+")) {
                r += product();
            } else if (accept("-")) {
                r -= product();
            } else {
                return r;
            }
        }
    }

    // product := unary ('*' unary)*
    NCPoly product()
    {
        NCPoly r = unary();
        while (accept("*")) r = r * unary();
        return r;
    }

    NCPoly unary()
    {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        NCPoly base = atom();
        if (accept("^")) {
            if (peek().kind != Token::number) fail("expected exponent");
            unsigned long n = std::stoul(next().text);
            NCPoly r = NCPoly::one();
            for (unsigned long i = 0; i < n; ++i) r = r * base;
            return r;
        }
        return base;
    }

    NCPoly atom()
    {
        const Token& t = peek();
        if (t.kind == Token::number) {
            next();
            Scalar c(t.text);
            if (accept("/")) {
                if (peek().kind != Token::number) fail("expected denominator");
                Token d = next();
                if (d.text.find_first_not_of('0') == std::string::npos) fail_at(d, "zero denominator");
                c = Scalar(t.text + "/" + d.text);
                c.canonicalize();
            }
            return NCPoly::constant(c);
        }
        if (t.kind == Token::ident) {
            if (t.text == "ox") fail("tensor separator 'ox' not allowed here");
            next();
            return NCPoly::generator(symbol(t));
        }
        if (accept("(")) {
            NCPoly r = poly();
            expect(")");
            return r;
        }
        fail(t.kind == Token::end ? "expression ends unexpectedly" : "unexpected '" + t.text + "'");
    }

    // tensor := tprod (('+'|'-') tprod)* ; tprod := product ('ox' product)*
    FreeTensor tensor(std::size_t arity)
    {
        FreeTensor out;
        out.arity = arity;
        Scalar sign = 1;
        if (accept("-")) sign = -1;
        while (true) {
            std::size_t col = peek().col;
            std::vector<NCPoly> slots{product()};
            while (accept("ox")) slots.push_back(product());
            bool zero_scalar = slots.size() == 1 && slots[0].is_zero();
            if (!zero_scalar && slots.size() != arity)
                throw ParseError(line_, col,
                                 "tensor term has " + std::to_string(slots.size()) + " factors, expected " +
                                     std::to_string(arity));
            if (!zero_scalar) expand(out, slots, sign);
            if (accept("+")) {
                sign = 1;
            } else if (accept("-")) {
                sign = -1;
            } else {
                return out;
            }
        }
    }

    Scalar scalar()
    {
        std::size_t col = peek().col;
        NCPoly p = poly();
        if (!p.is_scalar()) throw ParseError(line_, col, "expected a scalar");
        return p.coeff(Word{});
    }

private:
    static void expand(FreeTensor& out, const std::vector<NCPoly>& slots, const Scalar& sign)
    {
        std::vector<std::pair<std::vector<Word>, Scalar>> acc{{{}, sign}};
        for (const auto& p : slots) {
            std::vector<std::pair<std::vector<Word>, Scalar>> next;
            for (const auto& [k, c] : acc)
                for (const auto& [w, d] : p.terms()) {
                    auto nk = k;
                    nk.push_back(w);
                    next.push_back({std::move(nk), c * d});
                }
            acc = std::move(next);
        }
        for (auto& [k, c] : acc) out.add(std::move(k), c);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_;
    const std::vector<std::string>& names_;
};

} // namespace detail

inline SourceFile parse_source(const std::string& text)
{
    SourceFile sf;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    auto declare = [&](const std::string& name, std::size_t line, std::size_t col) -> Symbol {
        for (std::size_t i = 0; i < sf.gens.size(); ++i)
            if (sf.gens[i] == name) return static_cast<Symbol>(i);
        if (sf.x_name && *sf.x_name == name) throw ParseError(line, col, "'" + name + "' is the Ore variable");
        sf.gens.push_back(name);
        sf.inverse.push_back(std::nullopt);
        return static_cast<Symbol>(sf.gens.size() - 1);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = detail::tokenize(raw, lineno);
        if (toks.front().kind == detail::Token::end) continue;
        const detail::Token head = toks.front();
        if (head.kind != detail::Token::ident) throw ParseError(lineno, head.col, "expected a keyword");
        const std::string& kw = head.text;

        std::vector<std::string> names = sf.gens;
        bool with_x = kw == "deltaX";
        if (with_x) {
            if (!sf.x_name) throw ParseError(lineno, head.col, "deltaX before 'ore' declaration");
            names.push_back(*sf.x_name);
        }
        detail::LineParser p(toks, lineno, names);
        p.next();

        auto gen_ref = [&]() -> Symbol {
            detail::Token t = p.peek();
            p.ident("a generator name");
            return p.symbol(t);
        };
        auto once = [&](auto& map, Symbol g, const std::string& what) {
            if (map.count(g)) throw ParseError(lineno, head.col, "duplicate " + what + " for " + sf.gens[g]);
        };

        if (kw == "algebra") {
            // names may contain '-', so take the raw remainder of the line
            std::string rest = raw.substr(head.col - 1 + kw.size());
            rest = rest.substr(0, rest.find('#'));
            auto b = rest.find_first_not_of(" \t"), e = rest.find_last_not_of(" \t\r");
            if (b == std::string::npos) p.fail("expected an algebra name");
            sf.name = rest.substr(b, e - b + 1);
            if (sf.name.find_first_of(" \t") != std::string::npos) p.fail("algebra name must be a single word");
        } else if (kw == "gen") {
            if (p.at_end()) p.fail("expected generator names");
            while (!p.at_end()) {
                detail::Token t = p.peek();
                std::string a = p.ident("a generator name");
                if (a == "inv") p.fail_at(t, "'inv' must follow a generator name");
                bool existed = std::find(sf.gens.begin(), sf.gens.end(), a) != sf.gens.end();
                if (existed && !(p.peek().kind == detail::Token::ident && p.peek().text == "inv"))
                    throw ParseError(lineno, t.col, "duplicate generator '" + a + "'");
                Symbol ga = declare(a, lineno, t.col);
                if (p.accept("inv")) {
                    detail::Token tb = p.peek();
                    std::string b = p.ident("an inverse generator name");
                    Symbol gb = declare(b, lineno, tb.col);
                    if ((sf.inverse[ga] && *sf.inverse[ga] != gb) || (sf.inverse[gb] && *sf.inverse[gb] != ga))
                        throw ParseError(lineno, tb.col, "conflicting inverse for '" + a + "'");
                    sf.inverse[ga] = gb;
                    sf.inverse[gb] = ga;
                }
            }
        } else if (kw == "rel") {
            NCPoly l = p.poly();
            p.expect("=");
            NCPoly r = p.poly();
            p.expect_end();
            sf.relations.push_back({std::move(l), std::move(r)});
        } else if (kw == "delta") {
            Symbol g = gen_ref();
            once(sf.delta, g, "delta");
            p.expect("=");
            sf.delta[g] = p.tensor(2);
            p.expect_end();
        } else if (kw == "counit") {
            Symbol g = gen_ref();
            once(sf.counit, g, "counit");
            p.expect("=");
            sf.counit[g] = p.scalar();
            p.expect_end();
        } else if (kw == "antipode") {
            Symbol g = gen_ref();
            once(sf.antipode, g, "antipode");
            p.expect("=");
            sf.antipode[g] = p.poly();
            p.expect_end();
        } else if (kw == "ore") {
            detail::Token t = p.peek();
            std::string x = p.ident("the Ore variable name");
            if (std::find(sf.gens.begin(), sf.gens.end(), x) != sf.gens.end())
                throw ParseError(lineno, t.col, "'" + x + "' is already a generator");
            if (sf.x_name) throw ParseError(lineno, head.col, "duplicate 'ore' declaration");
            sf.x_name = x;
            p.expect_end();
        } else if (kw == "auto" || kw == "autoinv" || kw == "der") {
            if (!sf.x_name) throw ParseError(lineno, head.col, "'" + kw + "' before 'ore' declaration");
            p.expect(kw == "der" ? "delta" : "sigma");
            Symbol g = gen_ref();
            auto& map = kw == "auto" ? sf.sigma : kw == "autoinv" ? sf.sigma_inv : sf.der;
            once(map, g, kw);
            p.expect("=");
            map[g] = p.poly();
            p.expect_end();
        } else if (kw == "deltaX") {
            if (sf.delta_x) throw ParseError(lineno, head.col, "duplicate deltaX");
            p.expect("=");
            sf.delta_x = p.tensor(2);
            p.expect_end();
        } else if (kw == "counitX") {
            if (!sf.x_name) throw ParseError(lineno, head.col, "counitX before 'ore' declaration");
            if (sf.counit_x) throw ParseError(lineno, head.col, "duplicate counitX");
            p.expect("=");
            sf.counit_x = p.scalar();
            p.expect_end();
        } else if (kw == "hoe") {
            if (!sf.x_name) throw ParseError(lineno, head.col, "'hoe' before 'ore' declaration");
            detail::Token t = p.peek();
            std::string what = p.ident("beta, w or chi");
            if (what == "beta") {
                if (sf.hoe_beta) throw ParseError(lineno, t.col, "duplicate hoe beta");
                p.expect("=");
                sf.hoe_beta = p.poly();
            } else if (what == "w") {
                if (sf.hoe_w) throw ParseError(lineno, t.col, "duplicate hoe w");
                p.expect("=");
                sf.hoe_w = p.tensor(2);
            } else if (what == "chi") {
                Symbol g = gen_ref();
                once(sf.hoe_chi, g, "hoe chi");
                p.expect("=");
                sf.hoe_chi[g] = p.scalar();
            } else {
                p.fail_at(t, "expected beta, w or chi");
            }
            p.expect_end();
        } else if (kw == "assert") {
            std::string a;
            while (!p.at_end()) {
                if (!a.empty()) a += ' ';
                a += p.next().text;
            }
            if (a.empty()) p.fail("expected an assertion");
            sf.assertions.push_back(a);
        } else {
            throw ParseError(lineno, head.col, "unknown keyword '" + kw + "'");
        }
    }
    return sf;
}

inline SourceFile parse_source_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_source(ss.str());
}

// ---------------------------------------------------------------------------
// Printer

namespace detail {

inline std::string print_tensor(const FreeTensor& t, const std::vector<std::string>& names)
{
    if (t.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t.terms.rbegin(); it != t.terms.rend(); ++it) {
        std::string body;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (i) body += " ox ";
            body += format_word(it->first[i], names);
        }
        // keep the coefficient attached to the first factor
        Scalar a = abs(it->second);
        std::string lead = sgn(it->second) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
        out += lead + (a == 1 ? body : a.get_str() + "*" + body);
        first = false;
    }
    return out;
}

} // namespace detail

inline std::string print_source(const SourceFile& sf)
{
    std::ostringstream o;
    const auto& n = sf.gens;
    auto poly = [&](const NCPoly& p) { return format_poly(p, n); };
    if (!sf.name.empty()) o << "algebra " << sf.name << "\n";
    for (std::size_t i = 0; i < n.size(); ++i) {
        auto partner = sf.inverse[i];
        if (!partner) {
            o << "gen " << n[i] << "\n";
        } else if (*partner == i) {
            o << "gen " << n[i] << " inv " << n[i] << "\n";
        } else if (*partner == i + 1) {
            o << "gen " << n[i] << " inv " << n[i + 1] << "\n";
            ++i;
        } else if (*partner > i) {
            o << "gen " << n[i] << "\n";
        } else {
            o << "gen " << n[i] << " inv " << n[*partner] << "\n";
        }
    }
    for (const auto& [l, r] : sf.relations) o << "rel " << poly(l) << " = " << poly(r) << "\n";
    for (const auto& [g, t] : sf.delta) o << "delta " << n[g] << " = " << detail::print_tensor(t, n) << "\n";
    for (const auto& [g, c] : sf.counit) o << "counit " << n[g] << " = " << c.get_str() << "\n";
    for (const auto& [g, p] : sf.antipode) o << "antipode " << n[g] << " = " << poly(p) << "\n";
    if (sf.x_name) {
        std::vector<std::string> nx = n;
        nx.push_back(*sf.x_name);
        o << "ore " << *sf.x_name << "\n";
        for (const auto& [g, p] : sf.sigma) o << "auto sigma " << n[g] << " = " << poly(p) << "\n";
        for (const auto& [g, p] : sf.sigma_inv) o << "autoinv sigma " << n[g] << " = " << poly(p) << "\n";
        for (const auto& [g, p] : sf.der) o << "der delta " << n[g] << " = " << poly(p) << "\n";
        if (sf.delta_x) o << "deltaX = " << detail::print_tensor(*sf.delta_x, nx) << "\n";
        if (sf.counit_x) o << "counitX = " << sf.counit_x->get_str() << "\n";
        if (sf.hoe_beta) o << "hoe beta = " << poly(*sf.hoe_beta) << "\n";
        if (sf.hoe_w) o << "hoe w = " << detail::print_tensor(*sf.hoe_w, n) << "\n";
        for (const auto& [g, c] : sf.hoe_chi) o << "hoe chi " << n[g] << " = " << c.get_str() << "\n";
    }
    for (const auto& a : sf.assertions) o << "assert " << a << "\n";
    return o.str();
}

// ---------------------------------------------------------------------------
// Assembly

struct AssembleOptions {
    std::size_t confluence_degree = 8;
};

struct Assembled {
    std::string name;
    std::shared_ptr<const Presentation> R;
    ConfluenceReport confluence;
    std::shared_ptr<const HopfAlg> hopf;
    std::optional<OreExt> ore;
    std::optional<HoeCandidate> candidate; // Delta(x), eps(x) when given or implied by hoe lines
    std::optional<HOEData> hoe;
    std::vector<std::string> assertions;
};

inline Tensor reduce_free_tensor(const AlgebraPtr& alg, const FreeTensor& ft)
{
    Tensor out(alg, ft.arity);
    for (const auto& [k, c] : ft.terms) {
        Tensor prod = Tensor::scalar(alg, c);
        for (const auto& w : k) prod = outer(prod, Tensor::from_poly(alg, alg->cached_reduce(w)));
        out += prod;
    }
    return out;
}

inline Assembled assemble(const SourceFile& sf, const AssembleOptions& opt = {})
{
    Assembled a;
    a.name = sf.name;
    a.assertions = sf.assertions;
    const std::size_t n = sf.gens.size();
    if (n == 0) throw AssemblyError("no generators declared");

    auto P = std::make_shared<Presentation>(sf.gens, sf.inverse, sf.relations);
    a.confluence = P->certify(opt.confluence_degree);
    if (!a.confluence.confluent()) {
        const auto& d = *a.confluence.divergence;
        throw ConfluenceFailure("presentation is not confluent: ambiguity " + P->format(d.word) + " reduces to " +
                                    P->format(d.first) + " and " + P->format(d.second),
                                a.confluence);
    }
    a.R = P;
    auto elem = [&](const NCPoly& p) { return Elem(P, p); };

    if (!sf.has_hopf()) {
        if (sf.x_name) throw AssemblyError("an Ore extension needs delta, counit and antipode lines");
        return a;
    }
    std::vector<Tensor> d;
    std::vector<Scalar> e;
    std::vector<Elem> s;
    for (Symbol g = 0; g < n; ++g) {
        const std::string& gn = sf.gens[g];
        if (!sf.delta.count(g)) throw AssemblyError("missing delta line for generator " + gn);
        if (!sf.counit.count(g)) throw AssemblyError("missing counit line for generator " + gn);
        if (!sf.antipode.count(g)) throw AssemblyError("missing antipode line for generator " + gn);
        d.push_back(reduce_free_tensor(P, sf.delta.at(g)));
        e.push_back(sf.counit.at(g));
        s.push_back(elem(sf.antipode.at(g)));
    }
    a.hopf = std::make_shared<HopfAlg>(P, std::move(d), std::move(e), std::move(s));

    if (!sf.x_name) {
        if (sf.delta_x || sf.has_hoe()) throw AssemblyError("deltaX and hoe lines need an 'ore' declaration");
        return a;
    }
    std::vector<Elem> sig, siginv, der;
    for (Symbol g = 0; g < n; ++g) {
        const std::string& gn = sf.gens[g];
        if (!sf.sigma.count(g)) throw AssemblyError("missing 'auto sigma' line for generator " + gn);
        if (!sf.sigma_inv.count(g)) throw AssemblyError("missing 'autoinv sigma' line for generator " + gn);
        sig.push_back(elem(sf.sigma.at(g)));
        siginv.push_back(elem(sf.sigma_inv.at(g)));
        der.push_back(sf.der.count(g) ? elem(sf.der.at(g)) : Elem::zero(P));
    }
    a.ore = make_ore(a.hopf, std::move(sig), std::move(siginv), std::move(der), *sf.x_name);

    if (sf.has_hoe()) {
        const HopfAlg& H = *a.hopf;
        Elem beta = sf.hoe_beta ? elem(*sf.hoe_beta) : Elem::one(P);
        Tensor w = sf.hoe_w ? reduce_free_tensor(P, *sf.hoe_w) : Tensor(P, 2);
        std::vector<Scalar> chi;
        for (Symbol g = 0; g < n; ++g)
            chi.push_back(sf.hoe_chi.count(g) ? sf.hoe_chi.at(g) : H.eps(a.ore->sigma.image(g)));
        a.hoe = HOEData{beta, w, make_character(P, std::move(chi))};
    }
    if (sf.delta_x) {
        a.candidate = HoeCandidate{*a.ore, reduce_free_tensor(a.ore->T, *sf.delta_x), sf.counit_x.value_or(Scalar(0))};
    } else if (a.hoe) {
        a.candidate = candidate_from_hoe(*a.ore, *a.hoe);
    }
    return a;
}

} // namespace hoe
