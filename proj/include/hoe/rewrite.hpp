#pragma once

// Oriented word-rewriting systems presenting associative algebras, with
// normal forms and bounded overlap (diamond-lemma) certification.

#include "hoe/algebra.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hoe {

struct RewriteRule {
    Word lhs;
    NCPoly rhs;
};

class UnorientableRelation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UncertifiedDegree : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Turns `lhs = rhs` into a rule whose left side is the degree-lex largest word
/// of the relation. Both sides having the same leading word is rejected.
inline RewriteRule orient_relation(const NCPoly& lhs, const NCPoly& rhs)
{
    const NCPoly* big = &lhs;
    const NCPoly* small = &rhs;
    if (lhs.is_zero() && rhs.is_zero()) throw UnorientableRelation("relation 0 = 0 carries no information");
    if (lhs.is_zero() || (!rhs.is_zero() && deglex_less(lhs.leading_word(), rhs.leading_word()))) std::swap(big, small);
    if (!small->is_zero() && small->leading_word() == big->leading_word())
        throw UnorientableRelation("both sides share the leading word");
    const Word lead = big->leading_word();
    if (lead.empty()) throw UnorientableRelation("relation between scalars");
    const Scalar c = big->leading_coeff();
    NCPoly tail = *small - *big;
    tail.add_term(lead, c);
    tail *= Scalar(1) / c;
    return RewriteRule{lead, tail};
}

namespace detail {

/// Leftmost occurrence of any rule's left side in w; returns (position, rule index).
inline std::optional<std::pair<std::size_t, std::size_t>> find_redex(const std::vector<RewriteRule>& rules,
                                                                      const Word& w, std::size_t skip = SIZE_MAX)
{
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (std::size_t r = 0; r < rules.size(); ++r) {
            if (r == skip) continue;
            const Word& l = rules[r].lhs;
            if (l.size() > w.size() - pos) continue;
            if (std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) return std::pair{pos, r};
        }
    }
    return std::nullopt;
}

inline NCPoly substitute(const Word& w, std::size_t pos, const RewriteRule& rule)
{
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
    NCPoly r;
    for (const auto& [v, c] : rule.rhs.terms()) r.add_term(concat(concat(prefix, v), suffix), c);
    return r;
}

/// Full reduction. The largest word is always rewritten first; since every rule
/// decreases words in the (multiplicative) degree-lex order, each word is
/// visited at most once.
inline NCPoly reduce_with(const std::vector<RewriteRule>& rules, const NCPoly& p, std::size_t skip = SIZE_MAX)
{
    NCPoly::TermMap work = p.terms();
    NCPoly result(p.alphabet());
    while (!work.empty()) {
        auto last = std::prev(work.end());
        Word w = last->first;
        Scalar c = last->second;
        work.erase(last);
        auto redex = find_redex(rules, w, skip);
        if (!redex) {
            result.add_term(std::move(w), c);
            continue;
        }
        NCPoly img = substitute(w, redex->first, rules[redex->second]);
        for (const auto& [v, d] : img.terms()) {
            Scalar cd = c * d;
            auto [it, inserted] = work.try_emplace(v, cd);
            if (!inserted) {
                it->second += cd;
                if (is_zero(it->second)) work.erase(it);
            }
        }
    }
    return result;
}

} // namespace detail

/// One overlap or inclusion ambiguity that reduced to two different normal forms.
struct Ambiguity {
    Word word;
    NCPoly first;
    NCPoly second;
};

struct ConfluenceReport {
    std::size_t degree = 0;
    std::size_t ambiguities_checked = 0;
    std::optional<Ambiguity> divergence;
    bool confluent() const { return !divergence.has_value(); }
};

class Presentation : public Algebra {
public:
    /// Builds a presentation from user relations. Each generator may name an
    /// inverse generator; the pair contributes the rules gG -> 1 and Gg -> 1.
    /// Rules are inter-reduced: right sides are normalized and rules whose left
    /// side is reducible by another rule are re-derived or dropped.
    Presentation(std::vector<std::string> names, std::vector<std::optional<Symbol>> inverses,
                 const std::vector<std::pair<NCPoly, NCPoly>>& relations)
        : names_(std::move(names)), inverses_(std::move(inverses))
    {
        inverses_.resize(names_.size());
        for (Symbol g = 0; g < names_.size(); ++g) {
            if (!inverses_[g]) continue;
            Symbol h = *inverses_[g];
            if (h >= names_.size()) throw std::invalid_argument("inverse index out of range");
            if (inverses_[h] && *inverses_[h] != g) throw std::invalid_argument("inconsistent inverse pairing");
            inverses_[h] = g;
        }
        std::set<std::pair<Symbol, Symbol>> seen;
        for (Symbol g = 0; g < names_.size(); ++g) {
            if (!inverses_[g]) continue;
            Symbol h = *inverses_[g];
            if (seen.insert({g, h}).second) rules_.push_back({Word{g, h}, NCPoly::one()});
        }
        for (const auto& [l, r] : relations) rules_.push_back(orient_relation(l, r));
        inter_reduce();
        for (auto& r : rules_) r.rhs.set_alphabet(names_.size());
    }

    Presentation(std::vector<std::string> names, std::vector<RewriteRule> rules)
        : names_(std::move(names)), inverses_(names_.size()), rules_(std::move(rules))
    {
        for (auto& r : rules_) {
            for (const auto& [w, c] : r.rhs.terms())
                if (!deglex_less(w, r.lhs)) throw UnorientableRelation("rule right side not below its left side");
            r.rhs.set_alphabet(names_.size());
        }
    }

    std::size_t num_generators() const override { return names_.size(); }
    const std::vector<std::string>& generator_names() const override { return names_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    std::optional<Symbol> inverse_of(Symbol g) const { return inverses_.at(g); }

    NCPoly reduce_word(const Word& w) const override
    {
        if (certified_ && !complete_ && w.size() > certified_degree_)
            throw UncertifiedDegree("word of degree " + std::to_string(w.size()) +
                                    " exceeds certified confluence degree " + std::to_string(certified_degree_));
        return detail::reduce_with(rules_, NCPoly::monomial(w, Scalar(1), names_.size()));
    }

    std::vector<Relation> relations() const override
    {
        std::vector<Relation> out;
        out.reserve(rules_.size());
        for (const auto& r : rules_) out.push_back({r.lhs, r.rhs});
        return out;
    }

    std::optional<std::size_t> certified_degree() const override
    {
        if (complete_) return std::nullopt;
        return certified_degree_;
    }
    bool is_certified() const { return certified_; }
    bool is_complete() const { return complete_; }
    std::size_t confluence_degree() const { return certified_degree_; }

    std::size_t max_rule_degree() const
    {
        std::size_t m = 0;
        for (const auto& r : rules_) m = std::max(m, r.lhs.size());
        return m;
    }

    bool is_irreducible(const Word& w) const { return !detail::find_redex(rules_, w).has_value(); }

    /// All irreducible words of degree <= d, in degree-lex order.
    std::vector<Word> normal_words(std::size_t d) const
    {
        std::vector<Word> out{Word{}};
        std::vector<Word> frontier{Word{}};
        for (std::size_t len = 1; len <= d; ++len) {
            std::vector<Word> next;
            for (const Word& w : frontier)
                for (Symbol s = 0; s < names_.size(); ++s) {
                    Word v = w;
                    v.push_back(s);
                    if (ends_irreducible(v)) next.push_back(std::move(v));
                }
            std::sort(next.begin(), next.end());
            out.insert(out.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        return out;
    }

    /// Checks every ambiguity whose word has degree <= d. On success the
    /// presentation records d as its certified degree; if d covers every
    /// possible ambiguity the system is confluent in all degrees.
    ConfluenceReport certify(std::size_t d)
    {
        ConfluenceReport rep = check(d);
        if (rep.confluent()) {
            certified_ = true;
            certified_degree_ = std::max(certified_degree_, d);
            complete_ = complete_ || d + 1 >= 2 * max_rule_degree();
        }
        return rep;
    }

    /// Ambiguity enumeration without changing the certificate.
    ConfluenceReport check(std::size_t d) const
    {
        ConfluenceReport rep;
        rep.degree = d;
        auto nf = [&](const NCPoly& p) { return detail::reduce_with(rules_, p); };
        for (std::size_t i = 0; i < rules_.size() && !rep.divergence; ++i) {
            const Word& li = rules_[i].lhs;
            for (std::size_t j = 0; j < rules_.size() && !rep.divergence; ++j) {
                const Word& lj = rules_[j].lhs;
                // overlaps: proper suffix of li equals proper prefix of lj
                for (std::size_t k = 1; k < li.size() && k < lj.size(); ++k) {
                    if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(), lj.begin())) continue;
                    Word amb = concat(li, Word(lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end()));
                    if (amb.size() > d) continue;
                    ++rep.ambiguities_checked;
                    NCPoly a = nf(detail::substitute(amb, 0, rules_[i]));
                    NCPoly b = nf(detail::substitute(amb, li.size() - k, rules_[j]));
                    if (a != b) {
                        rep.divergence = Ambiguity{amb, a, b};
                        break;
                    }
                }
                if (rep.divergence || i == j || lj.size() > li.size() || li.size() > d) continue;
                // inclusions: lj occurs inside li
                for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
                    if (!std::equal(lj.begin(), lj.end(), li.begin() + static_cast<std::ptrdiff_t>(p))) continue;
                    ++rep.ambiguities_checked;
                    NCPoly a = nf(detail::substitute(li, 0, rules_[i]));
                    NCPoly b = nf(detail::substitute(li, p, rules_[j]));
                    if (a != b) {
                        rep.divergence = Ambiguity{li, a, b};
                        break;
                    }
                }
            }
        }
        return rep;
    }

    std::string format_rule(const RewriteRule& r) const { return format(r.lhs) + " -> " + format(r.rhs); }

private:
    bool ends_irreducible(const Word& v) const
    {
        for (const auto& r : rules_) {
            const Word& l = r.lhs;
            if (l.size() <= v.size() && std::equal(l.rbegin(), l.rend(), v.rbegin())) return false;
        }
        return true;
    }

    void inter_reduce()
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < rules_.size(); ++i) {
                if (!detail::find_redex(rules_, rules_[i].lhs, i)) continue;
                NCPoly rel = NCPoly::monomial(rules_[i].lhs) - rules_[i].rhs;
                NCPoly red = detail::reduce_with(rules_, rel, i);
                rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(i));
                if (!red.is_zero()) rules_.push_back(orient_relation(red, NCPoly()));
                changed = true;
                break;
            }
        }
        for (std::size_t i = 0; i < rules_.size(); ++i) rules_[i].rhs = detail::reduce_with(rules_, rules_[i].rhs, i);
    }

    std::vector<std::string> names_;
    std::vector<std::optional<Symbol>> inverses_;
    std::vector<RewriteRule> rules_;
    bool certified_ = false;
    bool complete_ = false;
    std::size_t certified_degree_ = 0;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Normal form of p with respect to P; thin wrapper kept for symmetry with the
/// other module entry points.
inline Elem normal_form(const NCPoly& p, const PresentationPtr& P) { return Elem(P, p); }

inline ConfluenceReport check_confluence(const Presentation& P, std::size_t d) { return P.check(d); }

} // namespace hoe
