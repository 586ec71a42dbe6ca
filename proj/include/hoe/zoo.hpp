#pragma once

// Example Hopf algebras: enveloping algebras, group algebras of free abelian
// groups, smash products U(L)#kG, their tensor squares, the named Ore
// extension examples, and bounded leading-term domain evidence.

#include "hoe/source.hpp"

#include <functional>

namespace hoe {

class InvalidStructure : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Matrix = std::vector<std::vector<Scalar>>;

/// Lie algebra on a basis: [e_i, e_j] = sum_k c[i][j][k] e_k.
struct LieData {
    std::vector<std::string> names;
    std::vector<Matrix> c;

    std::size_t dim() const { return names.size(); }

    static LieData abelian(std::vector<std::string> names)
    {
        std::size_t n = names.size();
        return LieData{std::move(names), std::vector<Matrix>(n, Matrix(n, std::vector<Scalar>(n)))};
    }

    std::vector<Scalar> bracket(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const
    {
        std::vector<Scalar> r(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) {
                if (is_zero(a[i]) || is_zero(b[j])) continue;
                for (std::size_t k = 0; k < dim(); ++k) r[k] += a[i] * b[j] * c[i][j][k];
            }
        return r;
    }

    std::vector<Scalar> basis(std::size_t i) const
    {
        std::vector<Scalar> v(dim());
        v[i] = 1;
        return v;
    }

    /// Throws InvalidStructure on the first antisymmetry or Jacobi violation.
    void validate() const
    {
        std::size_t n = dim();
        if (c.size() != n) throw InvalidStructure("structure constants have wrong shape");
        for (const auto& m : c) {
            if (m.size() != n) throw InvalidStructure("structure constants have wrong shape");
            for (const auto& row : m)
                if (row.size() != n) throw InvalidStructure("structure constants have wrong shape");
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (c[i][j][k] != -c[j][i][k])
                        throw InvalidStructure("antisymmetry fails for [" + names[i] + "," + names[j] + "]");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    auto a = basis(i), b = basis(j), d = basis(k);
                    auto t1 = bracket(a, bracket(b, d));
                    auto t2 = bracket(b, bracket(d, a));
                    auto t3 = bracket(d, bracket(a, b));
                    for (std::size_t m = 0; m < n; ++m)
                        if (!is_zero(t1[m] + t2[m] + t3[m]))
                            throw InvalidStructure("Jacobi identity fails on (" + names[i] + ", " + names[j] + ", " +
                                                   names[k] + ")");
                }
    }
};

/// Free abelian group Z^m acting linearly on a Lie algebra; action[g][i] is
/// the coordinate vector of g . e_i.
struct GroupActionData {
    std::vector<std::string> names;     // generators
    std::vector<std::string> inv_names; // their inverses
    std::vector<Matrix> action;
};

namespace detail {

inline Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    std::size_t n = a.size();
    Matrix r(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

/// Gauss-Jordan over Q; throws if singular.
inline Matrix mat_inverse(Matrix a)
{
    std::size_t n = a.size();
    Matrix inv(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) throw InvalidStructure("action matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Scalar p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            Scalar f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// Image of a coordinate vector v = sum v_i e_i under the matrix (rows = images of basis vectors).
inline std::vector<Scalar> act(const Matrix& m, const std::vector<Scalar>& v)
{
    std::vector<Scalar> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[j] += v[i] * m[i][j];
    return r;
}

inline NCPoly linear_poly(const std::vector<Scalar>& v, Symbol offset = 0)
{
    NCPoly p;
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(Word{static_cast<Symbol>(offset + i)}, v[i]);
    return p;
}

inline FreeTensor primitive_delta(Symbol g)
{
    FreeTensor t;
    t.add({Word{g}, Word{}}, 1);
    t.add({Word{}, Word{g}}, 1);
    return t;
}

inline FreeTensor grouplike_delta(Symbol g)
{
    FreeTensor t;
    t.add({Word{g}, Word{g}}, 1);
    return t;
}

/// PBW relations e_j e_i = e_i e_j - [e_i, e_j] for i < j.
inline void add_lie_relations(SourceFile& sf, const LieData& L, Symbol offset)
{
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            Symbol a = static_cast<Symbol>(offset + i), b = static_cast<Symbol>(offset + j);
            NCPoly rhs = NCPoly::monomial(Word{a, b}) - linear_poly(L.c[i][j], offset);
            sf.relations.push_back({NCPoly::monomial(Word{b, a}), rhs});
        }
}

inline void add_primitive_structure(SourceFile& sf, Symbol g)
{
    sf.delta[g] = primitive_delta(g);
    sf.counit[g] = 0;
    sf.antipode[g] = -NCPoly::generator(g);
}

inline void add_grouplike_structure(SourceFile& sf, Symbol g, Symbol ginv)
{
    sf.delta[g] = grouplike_delta(g);
    sf.counit[g] = 1;
    sf.antipode[g] = NCPoly::generator(ginv);
}

} // namespace detail

inline SourceFile enveloping_source(const LieData& L, std::string name = "enveloping")
{
    L.validate();
    SourceFile sf;
    sf.name = std::move(name);
    sf.gens = L.names;
    sf.inverse.assign(L.dim(), std::nullopt);
    detail::add_lie_relations(sf, L, 0);
    for (Symbol g = 0; g < L.dim(); ++g) detail::add_primitive_structure(sf, g);
    return sf;
}

/// Group algebra; each generator is declared with an inverse (possibly itself)
/// and every generator is grouplike.
inline SourceFile group_algebra_source(const std::vector<std::pair<std::string, std::string>>& gens,
                                       const std::vector<std::pair<NCPoly, NCPoly>>& relations,
                                       std::string name = "group")
{
    SourceFile sf;
    sf.name = std::move(name);
    for (const auto& [g, gi] : gens) {
        Symbol a = static_cast<Symbol>(sf.gens.size());
        sf.gens.push_back(g);
        sf.inverse.push_back(a);
        if (gi != g) {
            sf.gens.push_back(gi);
            sf.inverse.push_back(a);
            sf.inverse[a] = a + 1;
        }
    }
    sf.relations = relations;
    for (Symbol g = 0; g < sf.gens.size(); ++g) detail::add_grouplike_structure(sf, g, *sf.inverse[g]);
    return sf;
}

/// U(L) # kZ^m. Generator order: Lie basis, then each group generator
/// followed by its inverse.
inline SourceFile smash_source(const LieData& L, const GroupActionData& A, std::string name = "smash")
{
    L.validate();
    const std::size_t n = L.dim(), m = A.names.size();
    if (A.inv_names.size() != m || A.action.size() != m) throw InvalidStructure("group action data has wrong shape");
    std::vector<Matrix> inv;
    for (std::size_t a = 0; a < m; ++a) {
        const Matrix& M = A.action[a];
        if (M.size() != n) throw InvalidStructure("action matrix has wrong shape");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto lhs = detail::act(M, L.bracket(L.basis(i), L.basis(j)));
                auto rhs = L.bracket(detail::act(M, L.basis(i)), detail::act(M, L.basis(j)));
                if (lhs != rhs)
                    throw InvalidStructure("action of " + A.names[a] + " is not a Lie automorphism on [" + L.names[i] +
                                           "," + L.names[j] + "]");
            }
        inv.push_back(detail::mat_inverse(M));
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (detail::mat_mul(A.action[a], A.action[b]) != detail::mat_mul(A.action[b], A.action[a]))
                throw InvalidStructure("actions of " + A.names[a] + " and " + A.names[b] + " do not commute");

    SourceFile sf = enveloping_source(L, std::move(name));
    auto group_sym = [&](std::size_t a, bool inverse) { return static_cast<Symbol>(n + 2 * a + (inverse ? 1 : 0)); };
    for (std::size_t a = 0; a < m; ++a) {
        Symbol g = group_sym(a, false), gi = group_sym(a, true);
        sf.gens.push_back(A.names[a]);
        sf.inverse.push_back(gi);
        sf.gens.push_back(A.inv_names[a]);
        sf.inverse.push_back(g);
    }
    for (std::size_t a = 0; a < m; ++a)
        for (bool inverse : {false, true}) {
            Symbol g = group_sym(a, inverse);
            const Matrix& M = inverse ? inv[a] : A.action[a];
            for (Symbol i = 0; i < n; ++i) {
                NCPoly rhs = detail::linear_poly(M[i]) * NCPoly::generator(g);
                sf.relations.push_back({NCPoly::monomial(Word{g, i}), rhs});
            }
        }
    // the group is abelian
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (bool ia : {false, true})
                for (bool ib : {false, true}) {
                    Symbol p = group_sym(a, ia), q = group_sym(b, ib);
                    sf.relations.push_back({NCPoly::monomial(Word{q, p}), NCPoly::monomial(Word{p, q})});
                }
    for (std::size_t a = 0; a < m; ++a) {
        detail::add_grouplike_structure(sf, group_sym(a, false), group_sym(a, true));
        detail::add_grouplike_structure(sf, group_sym(a, true), group_sym(a, false));
    }
    return sf;
}

/// L (+) L with the product action of Z^m x Z^m: the data of (U(L)#kZ^m)^(x)2.
inline std::pair<LieData, GroupActionData> square_data(const LieData& L, const GroupActionData& A)
{
    const std::size_t n = L.dim();
    LieData L2;
    for (int copy = 1; copy <= 2; ++copy)
        for (const auto& nm : L.names) L2.names.push_back(nm + std::to_string(copy));
    L2.c.assign(2 * n, Matrix(2 * n, std::vector<Scalar>(2 * n)));
    for (std::size_t copy = 0; copy < 2; ++copy)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) L2.c[copy * n + i][copy * n + j][copy * n + k] = L.c[i][j][k];
    GroupActionData A2;
    for (std::size_t copy = 0; copy < 2; ++copy)
        for (std::size_t a = 0; a < A.names.size(); ++a) {
            A2.names.push_back(A.names[a] + std::to_string(copy + 1));
            A2.inv_names.push_back(A.inv_names[a] + std::to_string(copy + 1));
            Matrix M(2 * n, std::vector<Scalar>(2 * n));
            for (std::size_t i = 0; i < 2 * n; ++i) M[i][i] = 1;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) M[copy * n + i][copy * n + j] = A.action[a][i][j];
            A2.action.push_back(std::move(M));
        }
    return {L2, A2};
}

/// H (x) H as a presentation: both copies' relations plus commutation of the
/// copies. Generators of the first copy carry suffix 1, the second suffix 2.
inline SourceFile tensor_square_source(const SourceFile& sf, std::string name)
{
    const std::size_t n = sf.gens.size();
    SourceFile out;
    out.name = std::move(name);
    for (int copy = 1; copy <= 2; ++copy)
        for (const auto& g : sf.gens) out.gens.push_back(g + std::to_string(copy));
    out.inverse.resize(2 * n);
    for (std::size_t copy = 0; copy < 2; ++copy)
        for (std::size_t g = 0; g < n; ++g)
            if (sf.inverse[g]) out.inverse[copy * n + g] = static_cast<Symbol>(copy * n + *sf.inverse[g]);
    auto shift = [](const NCPoly& p, std::size_t off) {
        return p.map_words([&](const Word& w) {
            Word v = w;
            for (auto& s : v) s = static_cast<Symbol>(s + off);
            return NCPoly::monomial(v);
        });
    };
    for (std::size_t copy = 0; copy < 2; ++copy)
        for (const auto& [l, r] : sf.relations) out.relations.push_back({shift(l, copy * n), shift(r, copy * n)});
    for (Symbol a = 0; a < n; ++a)
        for (Symbol b = 0; b < n; ++b)
            out.relations.push_back({NCPoly::monomial(Word{static_cast<Symbol>(n + b), a}),
                                     NCPoly::monomial(Word{a, static_cast<Symbol>(n + b)})});
    for (std::size_t copy = 0; copy < 2; ++copy)
        for (const auto& [g, t] : sf.delta) {
            FreeTensor ft;
            for (const auto& [k, c] : t.terms) {
                std::vector<Word> nk;
                for (const auto& w : k) {
                    Word v = w;
                    for (auto& s : v) s = static_cast<Symbol>(s + copy * n);
                    nk.push_back(v);
                }
                ft.add(nk, c);
            }
            Symbol ng = static_cast<Symbol>(g + copy * n);
            out.delta[ng] = ft;
            out.counit[ng] = sf.counit.at(g);
            out.antipode[ng] = shift(sf.antipode.at(g), copy * n);
        }
    return out;
}

/// Every relation of one presentation, renamed, reduces to zero in the other
/// and vice versa. rename maps generator indices of a to those of b.
inline bool same_algebra(const Presentation& a, const std::shared_ptr<const Presentation>& b,
                         const std::vector<Symbol>& rename, std::string* witness = nullptr)
{
    std::vector<Symbol> back(rename.size());
    for (Symbol i = 0; i < rename.size(); ++i) back[rename[i]] = i;
    auto mapped = [](const NCPoly& p, const std::vector<Symbol>& ren) {
        return p.map_words([&](const Word& w) {
            Word v = w;
            for (auto& s : v) s = ren[s];
            return NCPoly::monomial(v);
        });
    };
    for (const auto& r : a.relations()) {
        NCPoly rel = mapped(NCPoly::monomial(r.lhs) - r.rhs, rename);
        if (!Elem(b, rel).is_zero()) {
            if (witness) *witness = a.format(r.lhs) + " -> " + a.format(r.rhs);
            return false;
        }
    }
    auto a_ptr = std::shared_ptr<const Presentation>(std::shared_ptr<const Presentation>{}, &a);
    for (const auto& r : b->relations()) {
        NCPoly rel = mapped(NCPoly::monomial(r.lhs) - r.rhs, back);
        if (!Elem(a_ptr, rel).is_zero()) {
            if (witness) *witness = b->format(r.lhs) + " -> " + b->format(r.rhs);
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Domain evidence

namespace detail {

/// Exponent vector: graded degree in non-invertible generators, then one
/// coordinate per generator with inverse pairs sharing a signed coordinate.
struct ExponentMap {
    std::vector<std::size_t> coord;
    std::vector<long> sign;
    std::vector<bool> graded;
    std::size_t dims = 0;

    explicit ExponentMap(const Presentation& P)
    {
        std::size_t n = P.num_generators();
        coord.assign(n, 0);
        sign.assign(n, 1);
        graded.assign(n, true);
        std::vector<bool> done(n, false);
        for (Symbol g = 0; g < n; ++g) {
            if (done[g]) continue;
            auto inv = P.inverse_of(g);
            coord[g] = dims;
            done[g] = true;
            if (inv && *inv != g) {
                coord[*inv] = dims;
                sign[*inv] = -1;
                graded[g] = graded[*inv] = false;
                done[*inv] = true;
            }
            ++dims;
        }
    }

    std::vector<long> operator()(const Word& w) const
    {
        std::vector<long> e(dims + 1, 0);
        for (Symbol s : w) {
            e[coord[s] + 1] += sign[s];
            if (graded[s]) ++e[0];
        }
        return e;
    }
};

inline std::vector<long> add(std::vector<long> a, const std::vector<long>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

/// Searches elements with coefficients in {-1,0,1} on the given words for a pair with zero product.
inline std::optional<std::string> small_zero_divisor(const PresentationPtr& P, const std::vector<Word>& words)
{
    std::size_t k = words.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;
    std::vector<Elem> elems;
    for (std::size_t code = 1; code < total; ++code) {
        NCPoly p;
        std::size_t c = code;
        for (std::size_t i = 0; i < k; ++i, c /= 3) {
            long coef = static_cast<long>(c % 3) == 2 ? -1 : static_cast<long>(c % 3);
            if (coef) p.add_term(words[i], Scalar(coef));
        }
        elems.push_back(Elem(P, p));
    }
    for (const auto& a : elems)
        for (const auto& b : elems)
            if (!a.is_zero() && !b.is_zero() && (a * b).is_zero())
                return "(" + a.to_string() + ")*(" + b.to_string() + ") = 0";
    return std::nullopt;
}

} // namespace detail

/// Bounded evidence that P has no zero divisors: for all normal words u, v of
/// degree <= d the product is nonzero and its leading term, in an additive
/// order on exponent vectors, has exponent E(u) + E(v) and is unique. Under
/// these conditions no product of nonzero elements supported in degree <= d
/// vanishes. This is evidence at the stated bound, not a proof of domain-ness.
inline Report domain_evidence(const PresentationPtr& P, std::size_t d)
{
    Report rep;
    rep.metadata["kind"] = "evidence";
    rep.metadata["degree"] = std::to_string(d);
    detail::ExponentMap E(*P);
    auto words = P->normal_words(d);

    std::map<std::vector<long>, Word> seen;
    std::string inj_witness;
    for (const auto& w : words) {
        auto [it, ins] = seen.emplace(E(w), w);
        if (!ins && inj_witness.empty()) inj_witness = P->format(it->second) + " and " + P->format(w) + " share exponents";
    }
    rep.add("distinct exponents on normal words of degree <= " + std::to_string(d), inj_witness.empty(), inj_witness);

    std::size_t pairs = 0;
    std::string zero_witness, lead_witness;
    for (const auto& u : words)
        for (const auto& v : words) {
            ++pairs;
            Elem prod = Elem::word(P, concat(u, v));
            if (prod.is_zero()) {
                if (zero_witness.empty()) zero_witness = P->format(u) + " * " + P->format(v) + " = 0";
                continue;
            }
            std::vector<long> best;
            std::size_t count = 0;
            Word lead;
            for (const auto& [w, c] : prod.poly().terms()) {
                auto e = E(w);
                if (count == 0 || best < e) {
                    best = e;
                    lead = w;
                    count = 1;
                } else if (e == best) {
                    ++count;
                }
            }
            auto expect = detail::add(E(u), E(v));
            if ((best != expect || count != 1) && lead_witness.empty())
                lead_witness = P->format(u) + " * " + P->format(v) + " = " + prod.to_string() + ": leading term " +
                               P->format(lead) + (count != 1 ? " is not unique" : " has the wrong exponent");
        }
    rep.add("nonvanishing products (" + std::to_string(pairs) + " pairs)", zero_witness.empty(), zero_witness);
    rep.add("leading-term cancellativity (" + std::to_string(pairs) + " pairs)", lead_witness.empty(), lead_witness);

    if (!rep.verdict()) {
        std::vector<Word> small;
        for (const auto& w : P->normal_words(1)) small.push_back(w);
        if (small.size() <= 4) {
            auto zd = detail::small_zero_divisor(P, small);
            if (zd) rep.add("explicit zero divisor", false, *zd);
        }
    } else {
        rep.log.push_back("no zero divisors among elements supported in degree <= " + std::to_string(d));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Named entries

struct ZooEntry {
    std::string name;
    std::string description;
    std::function<SourceFile()> source;
    bool hoe = false; // carries a Hopf structure on an Ore extension
};

inline LieData line_lie() { return LieData::abelian({"h"}); }

inline GroupActionData scale_by_two()
{
    return GroupActionData{{"g"}, {"G"}, {Matrix{{Scalar(2)}}}};
}

namespace detail {

inline const char* heisenberg_text = R"(algebra heisenberg
gen y
gen z
rel z*y = y*z
delta y = y ox 1 + 1 ox y
delta z = z ox 1 + 1 ox z
counit y = 0
counit z = 0
antipode y = -y
antipode z = -z
ore x
auto sigma y = y
auto sigma z = z
autoinv sigma y = y
autoinv sigma z = z
der delta y = 0
der delta z = 0
deltaX = 1 ox x + x ox 1 + y ox z
hoe beta = 1
hoe w = y ox z
hoe chi y = 0
hoe chi z = 0
assert noetherian
assert domain
)";

inline const char* laurent_q2_text = R"(algebra laurent-q2
gen g inv G
delta g = g ox g
delta G = G ox G
counit g = 1
counit G = 1
antipode g = G
antipode G = g
ore x
auto sigma g = 2*g
auto sigma G = 1/2*G
autoinv sigma g = 1/2*g
autoinv sigma G = 2*G
der delta g = 0
der delta G = 0
deltaX = G ox x + x ox 1
hoe beta = g
hoe w = 0
hoe chi g = 2
hoe chi G = 1/2
assert noetherian
assert domain
)";

inline const char* laurent_twisted_text = R"(algebra laurent-twisted
gen g inv G
delta g = g ox g
delta G = G ox G
counit g = 1
counit G = 1
antipode g = G
antipode G = g
ore x
auto sigma g = 2*g
auto sigma G = 1/2*G
autoinv sigma g = 1/2*g
autoinv sigma G = 2*G
der delta g = 0
der delta G = 0
deltaX = g ox x + x ox g
assert noetherian
assert domain
)";

inline const char* poly_shift_text = R"(algebra poly-shift
gen h
delta h = h ox 1 + 1 ox h
counit h = 0
antipode h = -h
ore x
auto sigma h = h + 1
autoinv sigma h = h - 1
der delta h = 0
deltaX = 1 ox x + x ox 1
hoe beta = 1
hoe w = 0
hoe chi h = 1
assert noetherian
assert domain
)";

inline const char* poly_shift_derivation_text = R"(algebra poly-shift-derivation
gen h
delta h = h ox 1 + 1 ox h
counit h = 0
antipode h = -h
ore x
auto sigma h = h + 1
autoinv sigma h = h - 1
der delta h = h
deltaX = 1 ox x + x ox 1
hoe beta = 1
hoe w = 0
hoe chi h = 1
assert noetherian
assert domain
)";

inline const char* dual_numbers_text = R"(algebra dual-numbers
gen y
rel y*y = 0
)";

} // namespace detail

inline const std::vector<ZooEntry>& zoo_entries()
{
    static const std::vector<ZooEntry> entries = [] {
        std::vector<ZooEntry> z;
        z.push_back({"heisenberg", "coordinate ring of the Heisenberg group, Delta(x) = x ox 1 + 1 ox x + y ox z",
                     [] { return parse_source(detail::heisenberg_text); }, true});
        z.push_back({"laurent-q2", "k[g, g^-1][x; x g = 2 g x], Delta(x) = g^-1 ox x + x ox 1",
                     [] { return parse_source(detail::laurent_q2_text); }, true});
        z.push_back({"laurent-twisted", "k[g, g^-1][x; x g = 2 g x] with the twisted coproduct of g x",
                     [] { return parse_source(detail::laurent_twisted_text); }, true});
        z.push_back({"poly-shift", "k[h][x; x h = (h + 1) x], x primitive",
                     [] { return parse_source(detail::poly_shift_text); }, true});
        z.push_back({"poly-shift-derivation", "k[h][x; x h = (h + 1) x + h], x primitive",
                     [] { return parse_source(detail::poly_shift_derivation_text); }, true});
        z.push_back({"smash-z-scale", "U(<h>) # kZ with g . h = 2h",
                     [] { return smash_source(line_lie(), scale_by_two(), "smash-z-scale"); }, false});
        z.push_back({"smash-z-scale-square", "(U(<h>) # kZ) (x) (U(<h>) # kZ) as U(L (+) L) # kZ^2", [] {
                         auto [L2, A2] = square_data(line_lie(), scale_by_two());
                         return smash_source(L2, A2, "smash-z-scale-square");
                     },
                     false});
        z.push_back({"enveloping-solvable", "U(L) for [h, e] = e", [] {
                         LieData L = LieData::abelian({"h", "e"});
                         L.c[0][1][1] = 1;
                         L.c[1][0][1] = -1;
                         return enveloping_source(L, "enveloping-solvable");
                     },
                     false});
        z.push_back({"laurent", "group algebra of Z", [] { return group_algebra_source({{"g", "G"}}, {}, "laurent"); },
                     false});
        z.push_back({"z2-group", "group algebra of Z/2 (non-domain control)",
                     [] { return group_algebra_source({{"g", "g"}}, {}, "z2-group"); }, false});
        z.push_back({"dual-numbers", "k[y]/(y^2), algebra only (non-domain control)",
                     [] { return parse_source(detail::dual_numbers_text); }, false});
        return z;
    }();
    return entries;
}

inline const ZooEntry* find_zoo_entry(const std::string& name)
{
    std::string key = name == "heisenberg-coordinate" ? "heisenberg" : name;
    for (const auto& e : zoo_entries())
        if (e.name == key) return &e;
    return nullptr;
}

} // namespace hoe
