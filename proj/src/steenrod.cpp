#include "motcalc/steenrod.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace motcalc {

std::string to_string(AlgebraName name)
{
    switch (name) {
        case AlgebraName::A0_cl: return "A0_cl";
        case AlgebraName::A1_cl: return "A1_cl";
        case AlgebraName::A0_mot: return "A0_mot";
        case AlgebraName::A1_mot: return "A1_mot";
        case AlgebraName::EQ0: return "EQ0";
        case AlgebraName::EQ0Q1: return "EQ0Q1";
        case AlgebraName::Abar0: return "Abar0";
        case AlgebraName::Abar1: return "Abar1";
        case AlgebraName::EP1: return "EP1";
        case AlgebraName::EP1P2: return "EP1P2";
    }
    return "?";
}

AlgebraName algebra_from_string(const std::string& s)
{
    static const std::map<std::string, AlgebraName> table = {
        {"A0_cl", AlgebraName::A0_cl},   {"A1_cl", AlgebraName::A1_cl},
        {"A0_mot", AlgebraName::A0_mot}, {"A1_mot", AlgebraName::A1_mot},
        {"EQ0", AlgebraName::EQ0},       {"EQ0Q1", AlgebraName::EQ0Q1},
        {"Abar0", AlgebraName::Abar0},   {"Abar1", AlgebraName::Abar1},
        {"EP1", AlgebraName::EP1},       {"EP1P2", AlgebraName::EP1P2},
    };
    auto it = table.find(s);
    if (it == table.end()) throw std::invalid_argument("unknown algebra name: " + s);
    return it->second;
}

int binom_mod2(long long n, long long k)
{
    if (k < 0) return 0;
    return ((n & k) == k) ? 1 : 0;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b)
{
    AlgebraElement out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::merge(a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end(),
               std::back_inserter(out.terms));
    // cancel equal pairs mod 2
    std::vector<Term> kept;
    for (std::size_t i = 0; i < out.terms.size();) {
        if (i + 1 < out.terms.size() && out.terms[i] == out.terms[i + 1]) {
            i += 2;
        } else {
            kept.push_back(out.terms[i]);
            ++i;
        }
    }
    out.terms = std::move(kept);
    return out;
}

Bidegree SubalgebraPresentation::word_degree(const Word& w) const
{
    Bidegree d{0, 0};
    for (uint8_t g : w) d = d + gen_degrees[g];
    return d;
}

bool SubalgebraPresentation::is_normal(const Word& w) const
{
    for (const RewriteRule& r : rules) {
        if (r.pattern.size() > w.size()) continue;
        for (std::size_t i = 0; i + r.pattern.size() <= w.size(); ++i)
            if (std::equal(r.pattern.begin(), r.pattern.end(), w.begin() + i)) return false;
    }
    return true;
}

AlgebraElement SubalgebraPresentation::normalize(int tau_pow, const Word& w) const
{
    auto it = normal_cache_.find(w);
    if (it == normal_cache_.end()) {
        AlgebraElement nf;
        // find leftmost earliest-rule match
        std::size_t best_pos = std::size_t(-1);
        std::size_t best_rule = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t ri = 0; ri < rules.size(); ++ri) {
                const Word& p = rules[ri].pattern;
                if (i + p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin() + i)) {
                    if (i < best_pos) {
                        best_pos = i;
                        best_rule = ri;
                    }
                    break;
                }
            }
            if (best_pos == i) break;
        }
        if (best_pos == std::size_t(-1)) {
            nf = AlgebraElement::single(0, w);
        } else {
            const RewriteRule& rule = rules[best_rule];
            for (const Term& rep : rule.replacement) {
                Word w2;
                w2.reserve(w.size() - rule.pattern.size() + rep.word.size());
                w2.insert(w2.end(), w.begin(), w.begin() + best_pos);
                w2.insert(w2.end(), rep.word.begin(), rep.word.end());
                w2.insert(w2.end(), w.begin() + best_pos + rule.pattern.size(), w.end());
                nf = nf + normalize(rep.tau_pow, w2);
            }
        }
        it = normal_cache_.emplace(w, std::move(nf)).first;
    }
    if (tau_pow == 0) return it->second;
    AlgebraElement shifted = it->second;
    for (Term& t : shifted.terms) t.tau_pow += tau_pow;
    std::sort(shifted.terms.begin(), shifted.terms.end());
    return shifted;
}

AlgebraElement SubalgebraPresentation::multiply(const AlgebraElement& a,
                                                const AlgebraElement& b) const
{
    AlgebraElement out;
    for (const Term& ta : a.terms) {
        for (const Term& tb : b.terms) {
            Word w = ta.word;
            w.insert(w.end(), tb.word.begin(), tb.word.end());
            out = out + normalize(ta.tau_pow + tb.tau_pow, w);
        }
    }
    return out;
}

std::string SubalgebraPresentation::render_word(const Word& w) const
{
    if (w.empty()) return "1";
    std::string s;
    for (uint8_t g : w) s += gen_names[g];
    return s;
}

std::string SubalgebraPresentation::render(const AlgebraElement& e) const
{
    if (e.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (i) s += " + ";
        const Term& t = e.terms[i];
        if (t.tau_pow == 1)
            s += "t*";
        else if (t.tau_pow > 1)
            s += "t^" + std::to_string(t.tau_pow) + "*";
        s += render_word(t.word);
    }
    return s;
}

namespace {

// Enumerate the normal-form basis by breadth-first word extension.  All
// algebras here are finite dimensional, so this terminates.
void compute_basis(SubalgebraPresentation& p)
{
    std::set<Word> seen;
    std::vector<Word> frontier(1);
    seen.insert(Word{});
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (uint8_t g = 0; g < p.gen_names.size(); ++g) {
                Word w2 = w;
                w2.push_back(g);
                if (!p.is_normal(w2)) continue;
                if (seen.insert(w2).second) next.push_back(w2);
            }
        }
        frontier = std::move(next);
        if (seen.size() > 4096)
            throw std::logic_error("algebra basis enumeration did not terminate");
    }
    p.basis.assign(seen.begin(), seen.end());
    std::sort(p.basis.begin(), p.basis.end(), [&](const Word& a, const Word& b) {
        Bidegree da = p.word_degree(a), db = p.word_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
}

SubalgebraPresentation make_exterior(AlgebraName name, Ground ground,
                                     std::vector<std::string> gens,
                                     std::vector<Bidegree> degs)
{
    SubalgebraPresentation p;
    p.name = name;
    p.ground = ground;
    p.gen_names = std::move(gens);
    p.gen_degrees = std::move(degs);
    for (uint8_t i = 0; i < p.gen_names.size(); ++i)
        p.rules.push_back({{i, i}, {}});
    // commute: g_j g_i -> g_i g_j for j > i
    for (uint8_t j = 0; j < p.gen_names.size(); ++j)
        for (uint8_t i = 0; i < j; ++i)
            p.rules.push_back({{j, i}, {Term{0, {i, j}}}});
    compute_basis(p);
    return p;
}

// <x, y> with x^2 = 0, y^2 = c*xyx, yxyx = xyxy where c is 1 or tau.
// This is the A(1) word presentation; the doubled variant uses the same
// rule shape with relabeled generators.
SubalgebraPresentation make_a1(AlgebraName name, Ground ground, std::string x_name,
                               std::string y_name, Bidegree x_deg, Bidegree y_deg,
                               int tau_on_square)
{
    SubalgebraPresentation p;
    p.name = name;
    p.ground = ground;
    p.gen_names = {std::move(x_name), std::move(y_name)};
    p.gen_degrees = {x_deg, y_deg};
    p.rules.push_back({{0, 0}, {}});
    p.rules.push_back({{1, 1}, {Term{tau_on_square, {0, 1, 0}}}});
    p.rules.push_back({{1, 0, 1, 0}, {Term{0, {0, 1, 0, 1}}}});
    compute_basis(p);
    return p;
}

SubalgebraPresentation build(AlgebraName name)
{
    switch (name) {
        case AlgebraName::A0_cl:
            return make_exterior(name, Ground::F2, {"Sq1"}, {{1, 0}});
        case AlgebraName::A0_mot:
            return make_exterior(name, Ground::M2, {"Sq1"}, {{1, 0}});
        case AlgebraName::A1_cl:
            return make_a1(name, Ground::F2, "Sq1", "Sq2", {1, 0}, {2, 0}, 0);
        case AlgebraName::A1_mot:
            return make_a1(name, Ground::M2, "Sq1", "Sq2", {1, 0}, {2, 1}, 1);
        case AlgebraName::EQ0:
            return make_exterior(name, Ground::M2, {"Q0"}, {{1, 0}});
        case AlgebraName::EQ0Q1:
            return make_exterior(name, Ground::M2, {"Q0", "Q1"}, {{1, 0}, {3, 1}});
        case AlgebraName::Abar0:
            return make_exterior(name, Ground::F2, {"Sq2"}, {{2, 1}});
        case AlgebraName::Abar1:
            return make_a1(name, Ground::F2, "Sq2", "Sq4", {2, 1}, {4, 2}, 0);
        case AlgebraName::EP1:
            return make_exterior(name, Ground::F2, {"P1"}, {{2, 1}});
        case AlgebraName::EP1P2:
            return make_exterior(name, Ground::F2, {"P1", "P2"}, {{2, 1}, {6, 3}});
    }
    throw std::invalid_argument("unknown algebra name");
}

}  // namespace

const SubalgebraPresentation& presentation(AlgebraName name)
{
    static std::map<AlgebraName, SubalgebraPresentation> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, build(name)).first;
    return it->second;
}

AlgebraName double_name(AlgebraName classical)
{
    switch (classical) {
        case AlgebraName::A0_cl: return AlgebraName::Abar0;
        case AlgebraName::A1_cl: return AlgebraName::Abar1;
        case AlgebraName::EQ0: return AlgebraName::EP1;
        case AlgebraName::EQ0Q1: return AlgebraName::EP1P2;
        default: throw std::invalid_argument("double_name: not a classical algebra");
    }
}

Word double_word(const Word& w)
{
    return w;  // generator indices are preserved; degrees double
}

}  // namespace motcalc
