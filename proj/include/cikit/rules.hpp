#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cikit/relation.hpp"

namespace cikit {

// Closure rules on relations. D/U/C are the semigraphoid rules (symmetry is
// structural), DUC their single-biconditional form, LFwd/LBwd the two Horn
// directions of localizability, I intersection, M composition, P/R the
// pseudographoid and reverse pseudographoid rules, DT/DDT (dual) decomposable
// transitivity. DT and DDT have a disjunctive consequent and are check-only.
enum class Rule { D, U, C, DUC, LFwd, LBwd, I, M, P, R, DT, DDT };

inline constexpr Rule kAllRules[] = {Rule::D, Rule::U,  Rule::C, Rule::DUC,
                                     Rule::LFwd, Rule::LBwd, Rule::I, Rule::M,
                                     Rule::P, Rule::R, Rule::DT, Rule::DDT};

inline bool has_disjunctive_consequents(Rule r) { return r == Rule::DT || r == Rule::DDT; }
inline bool is_horn(Rule r) { return !has_disjunctive_consequents(r); }

// True for rules whose instances quantify over set variables (everything but
// the singleton-only pseudographoid pair).
inline bool has_set_variables(Rule r) { return r != Rule::P && r != Rule::R; }

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::D: return "D";
        case Rule::U: return "U";
        case Rule::C: return "C";
        case Rule::DUC: return "DUC";
        case Rule::LFwd: return "L-fwd";
        case Rule::LBwd: return "L-bwd";
        case Rule::I: return "I";
        case Rule::M: return "M";
        case Rule::P: return "P";
        case Rule::R: return "R";
        case Rule::DT: return "DT";
        case Rule::DDT: return "DDT";
    }
    return "?";
}

// One instantiation of a rule schema over concrete triples. Consequents are
// conjunctive except for DT/DDT where they form a disjunction of two.
struct RuleInstance {
    Rule rule;
    std::vector<Triple> antecedents;
    std::vector<Triple> consequents;
};

// Lightweight non-owning view used by the enumeration callbacks.
struct InstanceView {
    Rule rule;
    std::span<const Triple> antecedents;
    std::span<const Triple> consequents;

    RuleInstance materialize() const {
        return RuleInstance{rule,
                            {antecedents.begin(), antecedents.end()},
                            {consequents.begin(), consequents.end()}};
    }
};

struct Violation {
    RuleInstance instance;
    std::vector<Triple> missing;  // absent consequents (both disjuncts for DT/DDT)
};

namespace detail {

// Ascending submask scan with early exit; f: (mask_t) -> bool (false stops).
// Returns false iff stopped.
template <typename F>
bool scan_submasks(mask_t set, bool include_empty, F&& f) {
    mask_t sub = 0;
    while (true) {
        if ((sub != 0 || include_empty) && !f(sub)) return false;
        if (sub == set) return true;
        sub = (sub - set) & set;
    }
}

// Shared (A,B,C,S) role iteration for the set-variable rules: A,B,C nonempty
// pairwise disjoint, S disjoint from all (possibly empty), ascending order.
template <typename F>
bool scan_abcs(mask_t full, F&& f) {
    return scan_submasks(full, false, [&](mask_t a) {
        return scan_submasks(full & ~a, false, [&](mask_t b) {
            return scan_submasks(full & ~a & ~b, false, [&](mask_t c) {
                return scan_submasks(full & ~a & ~b & ~c, true,
                                     [&](mask_t s) { return f(a, b, c, s); });
            });
        });
    });
}

}  // namespace detail

// Visits every instance of `rule` over the ground set exactly once, in a fixed
// deterministic order. F: (const InstanceView&) -> bool, false stops the scan.
// Returns false iff stopped early.
template <typename F>
bool for_each_instance(Rule rule, const GroundSet& ground, F&& f) {
    const int p = ground.size();
    const mask_t full = ground.full();
    if (p > 8 && has_set_variables(rule))
        throw std::invalid_argument("set-variable rule instances are capped at p <= 8");

    Triple ant[2];
    Triple con[2];
    auto vs = [](mask_t m) { return VertexSet(m); };

    switch (rule) {
        case Rule::D:
            return detail::scan_abcs(full, [&](mask_t a, mask_t b, mask_t c, mask_t s) {
                ant[0] = canonical_triple(vs(a), vs(b | c), vs(s));
                con[0] = canonical_triple(vs(a), vs(b), vs(s));
                return f(InstanceView{rule, {ant, 1}, {con, 1}});
            });
        case Rule::U:
            return detail::scan_abcs(full, [&](mask_t a, mask_t b, mask_t c, mask_t s) {
                ant[0] = canonical_triple(vs(a), vs(b | c), vs(s));
                con[0] = canonical_triple(vs(a), vs(b), vs(s | c));
                return f(InstanceView{rule, {ant, 1}, {con, 1}});
            });
        case Rule::C:
            return detail::scan_abcs(full, [&](mask_t a, mask_t b, mask_t c, mask_t s) {
                ant[0] = canonical_triple(vs(a), vs(b), vs(s));
                ant[1] = canonical_triple(vs(a), vs(c), vs(b | s));
                con[0] = canonical_triple(vs(a), vs(b | c), vs(s));
                return f(InstanceView{rule, {ant, 2}, {con, 1}});
            });
        case Rule::DUC:
            // Biconditional (A,BC|S) <-> (A,B|S),(A,C|SB), split per direction.
            return detail::scan_abcs(full, [&](mask_t a, mask_t b, mask_t c, mask_t s) {
                ant[0] = canonical_triple(vs(a), vs(b | c), vs(s));
                con[0] = canonical_triple(vs(a), vs(b), vs(s));
                con[1] = canonical_triple(vs(a), vs(c), vs(s | b));
                if (!f(InstanceView{rule, {ant, 1}, {con, 2}})) return false;
                ant[0] = con[0];
                ant[1] = con[1];
                con[0] = canonical_triple(vs(a), vs(b | c), vs(s));
                return f(InstanceView{rule, {ant, 2}, {con, 1}});
            });
        case Rule::I:
            // (B,C) swap maps an instance to itself: dedupe with b < c.
            return detail::scan_abcs(full, [&](mask_t a, mask_t b, mask_t c, mask_t s) {
                if (c < b) return true;
                ant[0] = canonical_triple(vs(a), vs(b), vs(s | c));
                ant[1] = canonical_triple(vs(a), vs(c), vs(s | b));
                con[0] = canonical_triple(vs(a), vs(b | c), vs(s));
                return f(InstanceView{rule, {ant, 2}, {con, 1}});
            });
        case Rule::M:
            return detail::scan_abcs(full, [&](mask_t a, mask_t b, mask_t c, mask_t s) {
                if (c < b) return true;
                ant[0] = canonical_triple(vs(a), vs(b), vs(s));
                ant[1] = canonical_triple(vs(a), vs(c), vs(s));
                con[0] = canonical_triple(vs(a), vs(b | c), vs(s));
                return f(InstanceView{rule, {ant, 2}, {con, 1}});
            });
        case Rule::P:
        case Rule::R:
            for (int av = 0; av < p; ++av) {
                for (int bv = 0; bv < p; ++bv) {
                    if (bv == av) continue;
                    for (int cv = bv + 1; cv < p; ++cv) {  // {b,c} unordered
                        if (cv == av) continue;
                        mask_t a = mask_t{1} << av, b = mask_t{1} << bv, c = mask_t{1} << cv;
                        bool go = detail::scan_submasks(
                            full & ~(a | b | c), true, [&](mask_t s) {
                                Triple joint_b = canonical_triple(vs(a), vs(b), vs(s | c));
                                Triple joint_c = canonical_triple(vs(a), vs(c), vs(s | b));
                                Triple marg_b = canonical_triple(vs(a), vs(b), vs(s));
                                Triple marg_c = canonical_triple(vs(a), vs(c), vs(s));
                                if (rule == Rule::P) {
                                    ant[0] = joint_b;
                                    ant[1] = joint_c;
                                    con[0] = marg_b;
                                    con[1] = marg_c;
                                } else {
                                    ant[0] = marg_b;
                                    ant[1] = marg_c;
                                    con[0] = joint_b;
                                    con[1] = joint_c;
                                }
                                return f(InstanceView{rule, {ant, 2}, {con, 2}});
                            });
                        if (!go) return false;
                    }
                }
            }
            return true;
        case Rule::LFwd:
        case Rule::LBwd: {
            // Composite (A,B|S) against its family of localized pairwise
            // triples (a,b|S'), S <= S' <= SAB \ ab.
            std::vector<Triple> family;
            return detail::scan_submasks(full, false, [&](mask_t a_set) {
                return detail::scan_submasks(full & ~a_set, false, [&](mask_t b_set) {
                    if (b_set < a_set) return true;  // canonical composite only
                    if (popcount(a_set) + popcount(b_set) < 3) return true;
                    return detail::scan_submasks(full & ~a_set & ~b_set, true, [&](mask_t s) {
                        Triple composite = canonical_triple(vs(a_set), vs(b_set), vs(s));
                        if (rule == Rule::LFwd) {
                            bool go = true;
                            for_each_vertex(a_set, [&](int av) {
                                for_each_vertex(b_set, [&](int bv) {
                                    mask_t ab = (mask_t{1} << av) | (mask_t{1} << bv);
                                    detail::scan_submasks(
                                        (a_set | b_set) & ~ab, true, [&](mask_t extra) {
                                            if (!go) return false;
                                            ant[0] = composite;
                                            con[0] = canonical_triple(
                                                vs(mask_t{1} << av), vs(mask_t{1} << bv),
                                                vs(s | extra));
                                            go = f(InstanceView{rule, {ant, 1}, {con, 1}});
                                            return go;
                                        });
                                });
                            });
                            return go;
                        }
                        family.clear();
                        for_each_vertex(a_set, [&](int av) {
                            for_each_vertex(b_set, [&](int bv) {
                                mask_t ab = (mask_t{1} << av) | (mask_t{1} << bv);
                                detail::scan_submasks(
                                    (a_set | b_set) & ~ab, true, [&](mask_t extra) {
                                        family.push_back(canonical_triple(
                                            vs(mask_t{1} << av), vs(mask_t{1} << bv),
                                            vs(s | extra)));
                                        return true;
                                    });
                            });
                        });
                        con[0] = composite;
                        return f(InstanceView{rule, family, {con, 1}});
                    });
                });
            });
        }
        case Rule::DT:
        case Rule::DDT:
            // (aB,De|c),(a,e|BD) => (a,c|B) or (c,e|D); (a,B)<->(e,D) swap is
            // an involution on instances, dedupe with a < e. DDT is the
            // triple-wise dual.
            for (int av = 0; av < p; ++av) {
                for (int ev = av + 1; ev < p; ++ev) {
                    for (int cv = 0; cv < p; ++cv) {
                        if (cv == av || cv == ev) continue;
                        mask_t a = mask_t{1} << av, e = mask_t{1} << ev, c = mask_t{1} << cv;
                        mask_t rest = full & ~(a | e | c);
                        bool go = detail::scan_submasks(rest, true, [&](mask_t b_set) {
                            return detail::scan_submasks(rest & ~b_set, true, [&](mask_t d_set) {
                                ant[0] = canonical_triple(vs(a | b_set), vs(d_set | e), vs(c));
                                ant[1] = canonical_triple(vs(a), vs(e), vs(b_set | d_set));
                                con[0] = canonical_triple(vs(a), vs(c), vs(b_set));
                                con[1] = canonical_triple(vs(c), vs(e), vs(d_set));
                                if (rule == Rule::DDT) {
                                    ant[0] = dual(ant[0], ground);
                                    ant[1] = dual(ant[1], ground);
                                    con[0] = dual(con[0], ground);
                                    con[1] = dual(con[1], ground);
                                }
                                return f(InstanceView{rule, {ant, 2}, {con, 2}});
                            });
                        });
                        if (!go) return false;
                    }
                }
            }
            return true;
    }
    return true;
}

inline std::vector<RuleInstance> instances(Rule rule, const GroundSet& ground) {
    std::vector<RuleInstance> out;
    for_each_instance(rule, ground, [&](const InstanceView& v) {
        out.push_back(v.materialize());
        return true;
    });
    return out;
}

// First violation of `rule` in enumeration order, or nullopt when closed.
inline std::optional<Violation> find_violation(const Relation& L, Rule rule) {
    std::optional<Violation> result;
    for_each_instance(rule, L.ground(), [&](const InstanceView& v) {
        for (const Triple& t : v.antecedents)
            if (!L.contains(t)) return true;
        if (has_disjunctive_consequents(rule)) {
            for (const Triple& t : v.consequents)
                if (L.contains(t)) return true;
            result = Violation{v.materialize(), {v.consequents.begin(), v.consequents.end()}};
            return false;
        }
        bool all_present = true;
        for (const Triple& t : v.consequents)
            if (!L.contains(t)) {
                all_present = false;
                break;
            }
        if (all_present) return true;
        std::vector<Triple> missing;
        for (const Triple& t : v.consequents)
            if (!L.contains(t)) missing.push_back(t);
        result = Violation{v.materialize(), std::move(missing)};
        return false;
    });
    return result;
}

inline bool is_closed(const Relation& L, Rule rule) { return !find_violation(L, rule).has_value(); }

// Both Horn directions of the localizability biconditional.
inline bool is_localizable(const Relation& L) {
    return is_closed(L, Rule::LFwd) && is_closed(L, Rule::LBwd);
}

inline std::optional<Violation> find_localizability_violation(const Relation& L) {
    if (auto v = find_violation(L, Rule::LFwd)) return v;
    return find_violation(L, Rule::LBwd);
}

// Closure under D, U and C. Cross-checks the single DUC biconditional, which
// must agree with the three-rule check on every relation.
inline bool is_semigraphoid(const Relation& L) {
    bool three_rule = is_closed(L, Rule::D) && is_closed(L, Rule::U) && is_closed(L, Rule::C);
    bool biconditional = is_closed(L, Rule::DUC);
    if (three_rule != biconditional)
        throw std::logic_error("DUC biconditional disagrees with D/U/C closure");
    return three_rule;
}

namespace detail {

// Membership store for the closure fixed point: direct-addressed bits when
// the key fits, ordered set otherwise.
class WorkSet {
public:
    WorkSet(const GroundSet& ground, const Relation& seed) : p_(ground.size()) {
        if (p_ <= 8) bits_.assign((std::size_t{1} << (3 * p_)) / 64 + 1, 0);
        for (const auto& t : seed.triples()) insert(t);
    }

    bool contains(const Triple& t) const {
        std::uint64_t k = key(t);
        if (!bits_.empty()) return (bits_[k >> 6] >> (k & 63)) & 1u;
        return tree_.count(k) != 0;
    }

    // Returns true when the triple was new.
    bool insert(const Triple& t) {
        std::uint64_t k = key(t);
        if (!bits_.empty()) {
            std::uint64_t& word = bits_[k >> 6];
            std::uint64_t bit = std::uint64_t{1} << (k & 63);
            if (word & bit) return false;
            word |= bit;
        } else if (!tree_.insert(k).second) {
            return false;
        }
        triples_.push_back(t);
        return true;
    }

    std::vector<Triple> take_sorted() && {
        std::sort(triples_.begin(), triples_.end());
        return std::move(triples_);
    }

private:
    std::uint64_t key(const Triple& t) const {
        return (static_cast<std::uint64_t>(t.a.bits) << (2 * p_)) |
               (static_cast<std::uint64_t>(t.b.bits) << p_) | t.c.bits;
    }

    int p_;
    std::vector<std::uint64_t> bits_;
    std::set<std::uint64_t> tree_;
    std::vector<Triple> triples_;
};

}  // namespace detail

// Least fixed point of the given Horn rules over L. Semi-naive passes: an
// instance re-fires only when an antecedent entered the set in the previous
// pass. Rejects DT/DDT, whose disjunctive consequent admits no least fixed
// point.
inline Relation close_under(const Relation& L, std::vector<Rule> rules) {
    for (Rule r : rules)
        if (!is_horn(r))
            throw std::invalid_argument(std::string("rule ") + rule_name(r) +
                                        " has a disjunctive consequent and cannot be closed under");
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());

    const GroundSet& ground = L.ground();
    detail::WorkSet work(ground, L);
    detail::WorkSet delta(ground, L);  // triples added in the previous pass

    bool first_pass = true;
    while (true) {
        detail::WorkSet next_delta(ground, Relation(ground));
        bool changed = false;
        for (Rule rule : rules) {
            for_each_instance(rule, ground, [&](const InstanceView& v) {
                if (!first_pass) {
                    bool touches_delta = false;
                    for (const Triple& t : v.antecedents)
                        if (delta.contains(t)) {
                            touches_delta = true;
                            break;
                        }
                    if (!touches_delta) return true;
                }
                for (const Triple& t : v.antecedents)
                    if (!work.contains(t)) return true;
                for (const Triple& t : v.consequents)
                    if (work.insert(t)) {
                        next_delta.insert(t);
                        changed = true;
                    }
                return true;
            });
        }
        if (!changed) break;
        delta = std::move(next_delta);
        first_pass = false;
    }
    return Relation::from_sorted_unique(ground, std::move(work).take_sorted());
}

inline std::string format_violation(const Violation& v, const GroundSet& ground) {
    std::string out = std::string("rule ") + rule_name(v.instance.rule) + ": antecedents";
    for (const auto& t : v.instance.antecedents) out += " [" + format_triple(t, ground) + "]";
    out += has_disjunctive_consequents(v.instance.rule) ? " => neither of" : " => missing";
    for (const auto& t : v.missing) out += " [" + format_triple(t, ground) + "]";
    return out;
}

}  // namespace cikit
