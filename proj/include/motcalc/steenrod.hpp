#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "motcalc/f2core.hpp"

// Presentations, bases and multiplication for the named finite subalgebras
// of the classical, motivic and Ctau-linear Steenrod algebras.
//
// Each algebra is presented by generators and a terminating rewriting system
// on words in the generators.  Normal-form words are the canonical basis.
// Over the motivic ground ring M2 = F2[tau] the rewriting rules may carry
// tau coefficients (e.g. Sq2 Sq2 = tau Sq3 Sq1 in motivic A(1)).
//
// tau convention: module and algebra elements are graded cohomologically,
// and a tau coefficient raises the weight by one, so tau^c * word sits at
// (t_word, w_word + c).  Chart classes downstream use the homotopy reading
// (tau-multiplication on Ext classes lowers weight); the two are dual.

namespace motcalc {

enum class Ground { F2, M2 };

enum class AlgebraName {
    A0_cl,   // E(Sq1), classical
    A1_cl,   // <Sq1, Sq2>, classical, dim 8
    A0_mot,  // E(Sq1) over M2
    A1_mot,  // <Sq1, Sq2> over M2, Sq2 Sq2 = tau Sq3 Sq1
    EQ0,     // E(Q0) over M2
    EQ0Q1,   // E(Q0, Q1) over M2
    Abar0,   // E(Sq2), Ctau-linear
    Abar1,   // <Sq2, Sq4>, Ctau-linear, dim 8
    EP1,     // E(P1), Ctau-linear (P1 = Sq2)
    EP1P2,   // E(P1, P2), Ctau-linear
};

std::string to_string(AlgebraName name);
AlgebraName algebra_from_string(const std::string& s);

// A word in the generators, by generator index.
using Word = std::vector<uint8_t>;

// tau^tau_pow * word; terms add mod 2.
struct Term {
    int tau_pow = 0;
    Word word;

    friend bool operator<(const Term& a, const Term& b)
    {
        if (a.tau_pow != b.tau_pow) return a.tau_pow < b.tau_pow;
        return a.word < b.word;
    }
    friend bool operator==(const Term& a, const Term& b)
    {
        return a.tau_pow == b.tau_pow && a.word == b.word;
    }
};

// Formal F2 (or tau-power weighted) sum of normal-form words.
struct AlgebraElement {
    std::vector<Term> terms;  // sorted, deduplicated mod 2

    bool is_zero() const { return terms.empty(); }
    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return {{Term{0, {}}}}; }
    static AlgebraElement single(int tau_pow, Word w) { return {{Term{tau_pow, std::move(w)}}}; }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b)
    {
        return a.terms == b.terms;
    }
};

struct RewriteRule {
    Word pattern;
    std::vector<Term> replacement;  // sum, possibly empty (= 0)
};

struct SubalgebraPresentation {
    AlgebraName name;
    Ground ground = Ground::F2;
    std::vector<std::string> gen_names;
    std::vector<Bidegree> gen_degrees;
    std::vector<RewriteRule> rules;

    // Normal-form basis words sorted by (t, w, word), computed on
    // construction.  Degreewise finite by the invariants of the rewriting
    // system.
    std::vector<Word> basis;

    Bidegree word_degree(const Word& w) const;
    // Degree of tau^c * word: (t, w + c).
    Bidegree term_degree(const Term& t) const
    {
        Bidegree d = word_degree(t.word);
        return {d.t, d.w + t.tau_pow};
    }

    bool is_normal(const Word& w) const;

    // Rewrite a single word (with tau prefix) to normal form.
    AlgebraElement normalize(int tau_pow, const Word& w) const;

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

    std::string render(const AlgebraElement& e) const;
    std::string render_word(const Word& w) const;

    std::size_t dimension() const { return basis.size(); }

private:
    mutable std::map<Word, AlgebraElement> normal_cache_;
};

// Resolves a name to its presentation (cached, immutable).
const SubalgebraPresentation& presentation(AlgebraName name);

// Doubling Sq^k -> Sq^{2k}: classical names map to their Ctau-linear
// doubles (A0_cl -> Abar0, A1_cl -> Abar1, and E(Q0,Q1)-shaped input maps
// onto E(P1,P2)).
AlgebraName double_name(AlgebraName classical);

// Image of a basis word under the doubling map (index-preserving: the k-th
// generator maps to the k-th generator of the doubled algebra).
Word double_word(const Word& w);

// C(n, k) mod 2.  For n >= 0 this is Lucas' theorem; for n < 0 it is the
// coefficient of x^k in the power series (1+x)^n over F2.  Both cases are
// the bit test (n & k) == k in two's complement.
int binom_mod2(long long n, long long k);

}  // namespace motcalc
