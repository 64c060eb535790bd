#include "motcalc/modules.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace motcalc {

std::vector<std::vector<int>> FPModule::action_table(int op_gen) const
{
    std::vector<std::vector<int>> table(rank(), std::vector<int>(rank(), -1));
    for (const ActionTriple& a : action) {
        if (a.op_gen != op_gen) continue;
        if (table[a.src][a.dst] == a.tau_pow)
            table[a.src][a.dst] = -1;  // repeated entry cancels mod 2
        else if (table[a.src][a.dst] == -1)
            table[a.src][a.dst] = a.tau_pow;
        else
            throw std::logic_error("FPModule: conflicting tau powers in action");
    }
    return table;
}

namespace {

// mod-2 accumulation of (dst, tau_pow) pairs
void toggle(std::vector<std::pair<int, int>>& acc, std::pair<int, int> v)
{
    auto it = std::find(acc.begin(), acc.end(), v);
    if (it != acc.end())
        acc.erase(it);
    else
        acc.push_back(v);
}

}  // namespace

std::vector<std::pair<int, int>> FPModule::act(const AlgebraElement& e, int src) const
{
    std::vector<std::vector<std::vector<int>>> tables;
    const auto& pres = presentation(algebra);
    for (std::size_t g = 0; g < pres.gen_names.size(); ++g)
        tables.push_back(action_table(int(g)));

    std::vector<std::pair<int, int>> acc;
    for (const Term& term : e.terms) {
        if (ground == Ground::F2 && term.tau_pow > 0) continue;  // tau acts as zero
        // apply word right to left
        std::vector<std::pair<int, int>> cur = {{src, term.tau_pow}};
        for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
            std::vector<std::pair<int, int>> next;
            for (auto [g, c] : cur) {
                const auto& row = tables[*it][g];
                for (std::size_t d = 0; d < row.size(); ++d)
                    if (row[d] >= 0) toggle(next, {int(d), c + row[d]});
            }
            cur = std::move(next);
        }
        for (auto [g, c] : cur) {
            if (ground == Ground::F2 && c > 0) continue;
            toggle(acc, {g, c});
        }
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

std::optional<std::string> FPModule::validate() const
{
    const auto& pres = presentation(algebra);
    // degree discipline: value tau^c * dst has weight w(dst) + c, which must
    // equal w(src) + w(op)
    for (const ActionTriple& a : action) {
        Bidegree src = gen_degrees[a.src];
        Bidegree op = pres.gen_degrees[a.op_gen];
        Bidegree dst = gen_degrees[a.dst];
        if (dst.t != src.t + op.t)
            return "action entry violates topological degree on " + gen_names[a.src];
        if (a.tau_pow != src.w + op.w - dst.w)
            return "action entry violates weight balance on " + gen_names[a.src];
        if (a.tau_pow < 0) return "negative tau power on " + gen_names[a.src];
        if (ground == Ground::F2 && a.tau_pow != 0)
            return "tau coefficient in an F2-ground module";
    }
    // every rewriting rule of the algebra holds on the action
    for (const RewriteRule& rule : pres.rules) {
        AlgebraElement lhs = AlgebraElement::single(0, rule.pattern);
        AlgebraElement rhs;
        for (const Term& t : rule.replacement) rhs = rhs + AlgebraElement::single(t.tau_pow, t.word);
        for (std::size_t g = 0; g < rank(); ++g) {
            if (act(lhs, int(g)) != act(rhs, int(g)))
                return "relation " + pres.render(lhs) + " = " + pres.render(rhs) +
                       " fails on generator " + gen_names[g];
        }
    }
    return std::nullopt;
}

namespace {

std::string cell_name(int d)
{
    // even cell 2k is v^k, odd cell 2k+1 is u v^k
    int k = (d >= 0 ? d / 2 : (d - 1) / 2);
    std::string s;
    if (d % 2 != 0) s += "u";
    if (k == 1)
        s += "v";
    else if (k != 0)
        s += "v^" + std::to_string(k);
    if (s.empty()) s = "1";
    return s;
}

int floor_div2(int d)
{
    return d >= 0 ? d / 2 : (d - 1) / 2;
}

// Honest motivic weight of a lens cell: v^k sits in (2k, k) and u v^k in
// (2k+1, k+1), so odd cells carry ceil(d/2).  (The floor-weight picture of
// the suspended spectrum is recovered by suspend(..., {1,0}).)
int cell_weight(int d)
{
    return d % 2 == 0 ? d / 2 : floor_div2(d) + 1;
}

enum class OpKind { Sq, Q1, P2 };

struct LensOp {
    OpKind kind;
    int sq = 0;  // for OpKind::Sq: the index i of Sq^i
};

LensOp lens_op_for(const std::string& gen_name)
{
    if (gen_name == "Sq1" || gen_name == "Q0") return {OpKind::Sq, 1};
    if (gen_name == "Sq2" || gen_name == "P1") return {OpKind::Sq, 2};
    if (gen_name == "Sq4") return {OpKind::Sq, 4};
    if (gen_name == "Q1") return {OpKind::Q1};
    if (gen_name == "P2") return {OpKind::P2};
    throw std::invalid_argument("no lens action formula for generator " + gen_name);
}

// Formula-level coefficient of the operation on cell d (1 = present).
// Targets: Sq^{2i}: d+2i; Sq^{2i+1}: d+2i+1 (odd d only); Q1: d+3 (odd d);
// P2: d+6.
struct FormulaHit {
    int target;
    bool present;
};

FormulaHit lens_formula(int d, const LensOp& op)
{
    long long k2 = 2 * (long long)floor_div2(d);  // 2*floor(d/2)
    switch (op.kind) {
        case OpKind::Sq: {
            int i = op.sq;
            if (i % 2 == 0) return {d + i, binom_mod2(k2, i) == 1};
            if (d % 2 == 0) return {d + i, false};
            return {d + i, binom_mod2(k2, i - 1) == 1};
        }
        case OpKind::Q1:
            return {d + 3, d % 2 != 0};
        case OpKind::P2:
            return {d + 6, ((d % 4 + 4) % 4 == 2) || ((d % 4 + 4) % 4 == 3)};
    }
    return {d, false};
}

}  // namespace

bool lens_op_nontrivial(int d, int op_log2)
{
    return lens_formula(d, {OpKind::Sq, 1 << op_log2}).present;
}

FPModule lens_module(CellRange range, LensVariant variant, AlgebraName over)
{
    const auto& pres = presentation(over);
    bool motivic = variant == LensVariant::motivic;
    if (motivic && pres.ground != Ground::M2)
        throw std::invalid_argument("motivic lens variant needs an M2-ground algebra");
    if (!motivic && pres.ground != Ground::F2)
        throw std::invalid_argument("ctau lens variant needs an F2-ground algebra");

    FPModule m;
    m.ground = pres.ground;
    m.algebra = over;
    for (int d = range.bottom; d <= range.top; ++d) {
        m.gen_names.push_back(cell_name(d));
        m.gen_degrees.push_back({d, cell_weight(d)});
    }
    for (std::size_t g = 0; g < pres.gen_names.size(); ++g) {
        LensOp op = lens_op_for(pres.gen_names[g]);
        for (int d = range.bottom; d <= range.top; ++d) {
            FormulaHit hit = lens_formula(d, op);
            if (!hit.present || !range.contains(hit.target)) continue;
            int src = d - range.bottom;
            int dst = hit.target - range.bottom;
            int tau = m.gen_degrees[src].w + pres.gen_degrees[g].w - m.gen_degrees[dst].w;
            if (tau != 0)
                throw std::logic_error("lens action acquired a tau coefficient");
            m.action.push_back({int(g), src, dst, tau});
        }
    }
    return m;
}

FPModule lens_module(CellRange range, LensVariant variant)
{
    return lens_module(range, variant,
                       variant == LensVariant::motivic ? AlgebraName::A1_mot : AlgebraName::Abar1);
}

FPModule lens_module_classical(CellRange range, AlgebraName over)
{
    const auto& pres = presentation(over);
    if (pres.ground != Ground::F2)
        throw std::invalid_argument("classical lens needs an F2-ground algebra");
    FPModule m;
    m.ground = Ground::F2;
    m.algebra = over;
    for (int d = range.bottom; d <= range.top; ++d) {
        m.gen_names.push_back("x" + std::to_string(d - range.bottom));
        m.gen_degrees.push_back({d, 0});
    }
    for (std::size_t g = 0; g < pres.gen_names.size(); ++g) {
        LensOp op = lens_op_for(pres.gen_names[g]);
        for (int d = range.bottom; d <= range.top; ++d) {
            FormulaHit hit = lens_formula(d, op);
            if (!hit.present || !range.contains(hit.target)) continue;
            m.action.push_back({int(g), d - range.bottom, hit.target - range.bottom, 0});
        }
    }
    return m;
}

FPModule trivial_module(AlgebraName over)
{
    FPModule m;
    m.ground = presentation(over).ground;
    m.algebra = over;
    m.gen_names = {"x"};
    m.gen_degrees = {{0, 0}};
    return m;
}

namespace {

// Adds the action triple for op on cells src -> dst when both exist, with
// the tau power forced by weight balance.  Skips entries whose balance
// would be negative (no such module element exists).
void add_entry(FPModule& m, const SubalgebraPresentation& pres, int op_gen, int src, int dst)
{
    int tau = m.gen_degrees[src].w + pres.gen_degrees[op_gen].w - m.gen_degrees[dst].w;
    if (m.gen_degrees[dst].t != m.gen_degrees[src].t + pres.gen_degrees[op_gen].t)
        throw std::logic_error("add_entry: topological degree mismatch");
    if (tau < 0) throw std::logic_error("add_entry: negative tau balance");
    if (m.ground == Ground::F2 && tau > 0) throw std::logic_error("add_entry: tau over F2");
    m.action.push_back({op_gen, src, dst, tau});
}

int find_gen(const SubalgebraPresentation& pres, const std::string& name)
{
    for (std::size_t i = 0; i < pres.gen_names.size(); ++i)
        if (pres.gen_names[i] == name) return int(i);
    return -1;
}

}  // namespace

FPModule finite_complex(ComplexName name, AlgebraName over)
{
    const auto& pres = presentation(over);
    bool classical = (over == AlgebraName::A0_cl || over == AlgebraName::A1_cl);
    int wu = classical ? 0 : 1;  // weight carried by a 2-cell attaching Sq2

    FPModule m;
    m.ground = pres.ground;
    m.algebra = over;
    switch (name) {
        case ComplexName::V0: {
            m.gen_names = {"x0", "x1"};
            m.gen_degrees = {{0, 0}, {1, 0}};
            int sq1 = find_gen(pres, "Sq1");
            if (sq1 < 0) sq1 = find_gen(pres, "Q0");
            if (sq1 >= 0) add_entry(m, pres, sq1, 0, 1);
            return m;
        }
        case ComplexName::Ceta: {
            m.gen_names = {"x0", "x2"};
            m.gen_degrees = {{0, 0}, {2, wu}};
            int sq2 = find_gen(pres, "Sq2");
            if (sq2 < 0) sq2 = find_gen(pres, "P1");
            if (sq2 >= 0) add_entry(m, pres, sq2, 0, 1);
            return m;
        }
        case ComplexName::C: {
            if (classical) return lens_module_classical({-2, 1}, over);
            if (pres.ground == Ground::M2) return lens_module({-2, 1}, LensVariant::motivic, over);
            return lens_module({-2, 1}, LensVariant::ctau, over);
        }
        case ComplexName::V0_smash_C:
            return smash(finite_complex(ComplexName::V0, over), finite_complex(ComplexName::C, over));
    }
    throw std::invalid_argument("unknown complex");
}

FPModule finite_complex(ComplexName name)
{
    return finite_complex(name, AlgebraName::A1_mot);
}

FPModule suspend(const FPModule& m, Bidegree shift)
{
    FPModule out = m;
    for (Bidegree& d : out.gen_degrees) d = d + shift;
    return out;
}

FPModule ctau_reduce(const FPModule& m)
{
    if (m.ground != Ground::M2) throw std::invalid_argument("ctau_reduce: ground is not M2");
    // Setting tau = 0 drops every action entry with a positive tau power.
    // The generator alphabet is unchanged, so the module stays over the
    // same presentation with tau now acting as zero (F2 ground).
    FPModule out = m;
    out.ground = Ground::F2;
    out.action.clear();
    for (const ActionTriple& a : m.action)
        if (a.tau_pow == 0) out.action.push_back(a);
    return out;
}

FPModule smash(const FPModule& a, const FPModule& b)
{
    if (a.algebra != b.algebra || a.ground != b.ground)
        throw std::invalid_argument("smash: mismatched algebras");
    const auto& pres = presentation(a.algebra);

    FPModule m;
    m.ground = a.ground;
    m.algebra = a.algebra;
    auto idx = [&](std::size_t i, std::size_t j) { return int(i * b.rank() + j); };
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j) {
            m.gen_names.push_back(a.gen_names[i] + "*" + b.gen_names[j]);
            m.gen_degrees.push_back(a.gen_degrees[i] + b.gen_degrees[j]);
        }

    // Cartan components per generator: (op, 1), (1, op) and for the
    // square-type generators the halved middle term.
    for (std::size_t g = 0; g < pres.gen_names.size(); ++g) {
        const std::string& gn = pres.gen_names[g];
        auto ta = a.action_table(int(g));
        auto tb = b.action_table(int(g));
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = 0; j < b.rank(); ++j) {
                for (std::size_t i2 = 0; i2 < a.rank(); ++i2)
                    if (ta[i][i2] >= 0) m.action.push_back({int(g), idx(i, j), idx(i2, j),
                                                            ta[i][i2]});
                for (std::size_t j2 = 0; j2 < b.rank(); ++j2)
                    if (tb[j][j2] >= 0) m.action.push_back({int(g), idx(i, j), idx(i, j2),
                                                            tb[j][j2]});
            }
        int half = -1;
        if (gn == "Sq2") half = find_gen(pres, "Sq1");
        if (gn == "Sq4") half = find_gen(pres, "Sq2");
        if (half < 0) continue;
        auto ha = a.action_table(half);
        auto hb = b.action_table(half);
        // Cartan middle term Sq^{2i} -> tau^wdef Sq^i (x) Sq^i; wdef is the
        // weight defect of the formula (1 for motivic Sq2, 0 in Abar).
        int wdef = pres.gen_degrees[g].w - 2 * pres.gen_degrees[half].w;
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = 0; j < b.rank(); ++j)
                for (std::size_t i2 = 0; i2 < a.rank(); ++i2)
                    for (std::size_t j2 = 0; j2 < b.rank(); ++j2) {
                        if (ha[i][i2] < 0 || hb[j][j2] < 0) continue;
                        int tau = ha[i][i2] + hb[j][j2] + wdef;
                        if (m.ground == Ground::F2 && tau > 0) continue;
                        if (tau < 0)
                            throw std::logic_error("smash: negative Cartan tau balance");
                        m.action.push_back({int(g), idx(i, j), idx(i2, j2), tau});
                    }
    }
    // cancel duplicated entries mod 2
    std::map<std::tuple<int, int, int, int>, int> count;
    for (const ActionTriple& t : m.action) count[{t.op_gen, t.src, t.dst, t.tau_pow}]++;
    m.action.clear();
    for (auto& [key, c] : count)
        if (c % 2)
            m.action.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                                std::get<3>(key)});
    return m;
}

bool isomorphic_by_renaming(const FPModule& a, const FPModule& b)
{
    if (a.algebra != b.algebra || a.ground != b.ground || a.rank() != b.rank()) return false;
    // sort generators by degree; degrees must be distinct within each module
    auto order = [](const FPModule& m) {
        std::vector<int> p(m.rank());
        std::iota(p.begin(), p.end(), 0);
        std::sort(p.begin(), p.end(), [&](int x, int y) {
            return m.gen_degrees[x] < m.gen_degrees[y];
        });
        return p;
    };
    std::vector<int> pa = order(a), pb = order(b);
    std::vector<int> inv_a(a.rank()), inv_b(b.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) inv_a[pa[i]] = int(i), inv_b[pb[i]] = int(i);
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (a.gen_degrees[pa[i]] != b.gen_degrees[pb[i]]) return false;

    auto canon = [&](const FPModule& m, const std::vector<int>& inv) {
        std::vector<std::tuple<int, int, int, int>> out;
        for (const ActionTriple& t : m.action)
            out.emplace_back(t.op_gen, inv[t.src], inv[t.dst], t.tau_pow);
        std::sort(out.begin(), out.end());
        return out;
    };
    return canon(a, inv_a) == canon(b, inv_b);
}

}  // namespace motcalc
