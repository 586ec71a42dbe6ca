#pragma once

#include "hoe/zoo.hpp"

#include <stdexcept>

namespace fixtures {

inline hoe::Assembled zoo(const std::string& name)
{
    const auto* e = hoe::find_zoo_entry(name);
    if (!e) throw std::invalid_argument("no zoo entry " + name);
    return hoe::assemble(e->source());
}

inline hoe::Elem gen(const hoe::Assembled& a, const std::string& name)
{
    return hoe::Elem::generator(a.R, *a.R->find_generator(name));
}

inline hoe::Scalar q(long p, long d = 1) { return hoe::make_scalar(p, d); }

/// sum chi(r1) r2 (left) or sum r1 chi(r2) (right), expanding Delta(w) as the
/// product of the generator coproducts.
inline hoe::Elem brute_winding(const hoe::HopfAlg& H, const hoe::Character& chi, const hoe::Word& w, hoe::Side side)
{
    hoe::Tensor d = hoe::Tensor::unit(H.alg, 2);
    for (hoe::Symbol s : w) d = d * H.delta.image(s);
    const std::size_t eval = side == hoe::Side::left ? 0 : 1;
    hoe::Elem out = hoe::Elem::zero(H.alg);
    for (const auto& [k, c] : d.terms()) {
        hoe::Scalar v = c;
        for (hoe::Symbol s : k[eval]) v *= chi.image(s);
        out += v * hoe::Elem::word(H.alg, k[1 - eval]);
    }
    return out;
}

/// Well-defined characters with values in a small set; inverse pairs get
/// reciprocal values.
inline std::vector<hoe::Character> small_characters(const hoe::HopfAlg& H, std::size_t limit)
{
    const auto& P = dynamic_cast<const hoe::Presentation&>(*H.alg);
    const std::vector<hoe::Scalar> values{q(0), q(1), q(-1), q(2), q(1, 2), q(3)};
    const std::size_t n = P.num_generators();
    std::vector<hoe::Character> out;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        std::vector<hoe::Scalar> v(n);
        bool ok = true;
        for (hoe::Symbol g = 0; g < n && ok; ++g) {
            v[g] = values[idx[g]];
            auto inv = P.inverse_of(g);
            if (inv && *inv < g) ok = v[g] * v[*inv] == 1;
            if (inv && *inv == g) ok = v[g] * v[g] == 1;
        }
        if (ok) {
            hoe::Character chi = hoe::make_character(H.alg, v);
            if (!chi.well_definedness()) out.push_back(chi);
            if (out.size() == limit) return out;
        }
        std::size_t k = 0;
        while (k < n && ++idx[k] == values.size()) idx[k++] = 0;
        if (k == n) return out;
    }
}

} // namespace fixtures
