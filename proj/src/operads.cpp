#include "halg/operads.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace halg {

Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw Error("perm_compose: size mismatch");
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Label perm_label(const Perm& p) {
    std::string l;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) l += ",";
        l += std::to_string(p[i]);
    }
    return l;
}

Perm parse_perm(const Label& l) {
    Perm p;
    std::istringstream in(l);
    std::string tok;
    while (std::getline(in, tok, ',')) p.push_back(std::stoi(tok));
    return p;
}

Perm block_perm(const Perm& s, const std::vector<int>& sizes) {
    int k = static_cast<int>(s.size());
    if (static_cast<int>(sizes.size()) != k) throw Error("block_perm: size mismatch");
    std::vector<int> start(k, 0), newstart(k, 0);
    for (int i = 1; i < k; ++i) start[i] = start[i - 1] + sizes[i - 1];
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (s[j] < s[i]) newstart[i] += sizes[j];
    int n = 0;
    for (int v : sizes) n += v;
    Perm out(n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < sizes[i]; ++j) out[start[i] + j] = newstart[i] + j;
    return out;
}

Perm perm_block_subst(const Perm& s, const std::vector<Perm>& args) {
    std::vector<int> sizes;
    for (const auto& a : args) sizes.push_back(static_cast<int>(a.size()));
    Perm blk = block_perm(s, sizes);
    Perm sum;
    for (size_t i = 0; i < args.size(); ++i) {
        int base = static_cast<int>(sum.size());
        for (int v : args[i]) sum.push_back(base + v);
    }
    return perm_compose(blk, sum);
}

OperadData assoc_operad(int arity_bound, const Field& F) {
    OperadData o;
    o.field = F;
    o.name = "assoc";
    o.arity_bound = arity_bound;
    o.spaces.resize(arity_bound + 1);
    for (int n = 1; n <= arity_bound; ++n) {
        o.spaces[n].field = F;
        for (const auto& p : all_perms(n)) o.spaces[n].gm.add_label(0, perm_label(p));
    }
    o.unit = "0";
    o.act = [](int, const Label& l, const Perm& t) {
        return LinComb{{perm_label(perm_compose(parse_perm(l), t)), Scalar(1)}};
    };
    o.compose = [](int k, int, const Label& l, const std::vector<OperadArg>& args) {
        if (static_cast<int>(args.size()) != k) throw Error("compose: arity mismatch");
        std::vector<Perm> ts;
        for (const auto& a : args) ts.push_back(parse_perm(a.label));
        return LinComb{{perm_label(perm_block_subst(parse_perm(l), ts)), Scalar(1)}};
    };
    return o;
}

OperadData comm_operad(int arity_bound, const Field& F) {
    OperadData o;
    o.field = F;
    o.name = "comm";
    o.arity_bound = arity_bound;
    o.spaces.resize(arity_bound + 1);
    for (int n = 1; n <= arity_bound; ++n) {
        o.spaces[n].field = F;
        o.spaces[n].gm.add_label(0, "c");
    }
    o.unit = "c";
    o.act = [](int, const Label& l, const Perm&) { return LinComb{{l, Scalar(1)}}; };
    o.compose = [](int, int, const Label&, const std::vector<OperadArg>&) {
        return LinComb{{Label("c"), Scalar(1)}};
    };
    return o;
}

std::vector<Perm> be_tuple(int n, const Label& l) {
    auto semi = l.find(';');
    std::vector<Perm> t;
    t.push_back(parse_perm(semi == std::string::npos ? l : l.substr(0, semi)));
    if (static_cast<int>(t[0].size()) != n) throw Error("be_tuple: wrong arity in '" + l + "'");
    if (semi != std::string::npos && semi + 1 < l.size()) {
        std::istringstream in(l.substr(semi + 1));
        std::string tok;
        while (std::getline(in, tok, '|'))
            t.push_back(perm_compose(t.back(), parse_perm(tok)));
    }
    return t;
}

Label be_word_label(const std::vector<Perm>& t) {
    Perm id = perm_identity(static_cast<int>(t.at(0).size()));
    Label l = perm_label(t[0]);
    for (size_t i = 1; i < t.size(); ++i) {
        Perm h = perm_compose(perm_inverse(t[i - 1]), t[i]);
        if (h == id) return "";  // degenerate tuple
        l += (i == 1 ? ";" : "|");
        l += perm_label(h);
    }
    return l;
}

LinComb be_diff(int n, const Label& l, const Field& F) {
    std::vector<Perm> t = be_tuple(n, l);
    LinComb out;
    if (t.size() < 2) return out;
    for (size_t i = 0; i < t.size(); ++i) {
        std::vector<Perm> s = t;
        s.erase(s.begin() + i);
        Label sl = be_word_label(s);
        if (sl.empty()) continue;
        comb_accumulate(out, sl, (i % 2 == 0) ? Scalar(1) : Scalar(-1), F);
    }
    return out;
}

namespace {

// iterated Eilenberg-Zilber composition of bar tuples via lattice paths
LinComb be_compose(int k_arity, const Field& F, const Label& l,
                   const std::vector<OperadArg>& args) {
    std::vector<std::vector<Perm>> tuples;
    tuples.push_back(be_tuple(k_arity, l));
    for (const auto& a : args) tuples.push_back(be_tuple(a.arity, a.label));
    int parts = static_cast<int>(tuples.size());
    std::vector<int> degs(parts);
    int D = 0;
    for (int j = 0; j < parts; ++j) {
        degs[j] = static_cast<int>(tuples[j].size()) - 1;
        D += degs[j];
    }
    std::vector<int> word;
    for (int j = 0; j < parts; ++j) word.insert(word.end(), degs[j], j);
    LinComb out;
    auto emit = [&](const std::vector<int>& w) {
        long inv = 0;
        for (size_t s = 0; s < w.size(); ++s)
            for (size_t u = s + 1; u < w.size(); ++u)
                if (w[s] > w[u]) ++inv;
        std::vector<int> c(parts, 0);
        std::vector<Perm> tup;
        auto entry = [&]() {
            std::vector<Perm> as;
            for (int j = 1; j < parts; ++j) as.push_back(tuples[j][c[j]]);
            return perm_block_subst(tuples[0][c[0]], as);
        };
        tup.push_back(entry());
        for (int s : w) {
            ++c[s];
            tup.push_back(entry());
        }
        Label rl = be_word_label(tup);
        if (rl.empty()) return;
        comb_accumulate(out, rl, (inv % 2 == 0) ? Scalar(1) : Scalar(-1), F);
    };
    if (word.empty()) {
        emit(word);
    } else {
        std::sort(word.begin(), word.end());
        do {
            emit(word);
        } while (std::next_permutation(word.begin(), word.end()));
    }
    return out;
}

}  // namespace

OperadData barratt_eccles(int arity_bound, int degree_bound, const Field& F) {
    OperadData o;
    o.field = F;
    o.name = "barratt-eccles";
    o.arity_bound = arity_bound;
    o.degree_bound = degree_bound;
    o.spaces.resize(arity_bound + 1);
    for (int n = 1; n <= arity_bound; ++n) {
        DGModule& m = o.spaces[n];
        m.field = F;
        auto perms = all_perms(n);
        std::vector<Label> letters;
        for (const auto& p : perms)
            if (p != perm_identity(n)) letters.push_back(perm_label(p));
        for (int d = 0; d <= degree_bound; ++d) {
            if (d > 0 && letters.empty()) break;
            std::vector<int> idx(d, 0);
            for (;;) {
                for (const auto& g : perms) {
                    Label l = perm_label(g);
                    for (int i = 0; i < d; ++i) l += (i == 0 ? ";" : "|") + letters[idx[i]];
                    m.gm.add_label(d, l);
                }
                int t = d - 1;
                while (t >= 0 && idx[t] + 1 == static_cast<int>(letters.size())) idx[t--] = 0;
                if (t < 0) break;
                ++idx[t];
            }
        }
        for (int d = 1; d <= degree_bound; ++d)
            m.set_d(d, matrix_from_images(m, d, m, d - 1,
                                          [&](const Label& l) { return be_diff(n, l, F); }));
    }
    o.unit = "0";
    o.act = [](int arity, const Label& l, const Perm& t) {
        auto tup = be_tuple(arity, l);
        for (auto& g : tup) g = perm_compose(g, t);
        return LinComb{{be_word_label(tup), Scalar(1)}};
    };
    o.comp_arity_gate = 4;
    o.comp_degree_gate = 4;
    Field field = F;
    int again = o.comp_arity_gate, dgain = o.comp_degree_gate;
    o.compose = [field, again, dgain](int k, int deg, const Label& l,
                                      const std::vector<OperadArg>& args) {
        if (static_cast<int>(args.size()) != k) throw Error("compose: arity mismatch");
        int n = 0, total = deg;
        for (const auto& a : args) {
            n += a.arity;
            total += a.degree;
        }
        if (n > again || total > dgain)
            throw Error("Barratt-Eccles composition gated to arity <= " + std::to_string(again) +
                        ", degree <= " + std::to_string(dgain));
        return be_compose(k, field, l, args);
    };
    return o;
}

LinComb be_contraction(int n, const Label& l) {
    std::vector<Perm> t = be_tuple(n, l);
    t.insert(t.begin(), perm_identity(n));
    Label rl = be_word_label(t);
    LinComb out;
    if (!rl.empty()) out[rl] = 1;
    return out;
}

namespace {

OperadMorphismData to_point(const OperadData& src, const OperadData& tgt) {
    OperadMorphismData m;
    int bound = std::min(src.arity_bound, tgt.arity_bound);
    m.maps.resize(bound + 1);
    for (int nn = 1; nn <= bound; ++nn) {
        SparseMatrix mat(1, src.space(nn).dim(0));
        for (int j = 0; j < mat.cols; ++j) mat.set(0, j, Scalar(1), src.field);
        m.maps[nn].mats[0] = std::move(mat);
    }
    return m;
}

}  // namespace

OperadMorphismData augmentation_assoc_to_comm(const OperadData& A, const OperadData& C) {
    return to_point(A, C);
}

OperadMorphismData augmentation_be_to_comm(const OperadData& E, const OperadData& C) {
    return to_point(E, C);
}

OperadMorphismData inclusion_assoc_to_be(const OperadData& A, const OperadData& E) {
    OperadMorphismData m;
    int bound = std::min(A.arity_bound, E.arity_bound);
    m.maps.resize(bound + 1);
    for (int n = 1; n <= bound; ++n)
        m.maps[n].mats[0] = matrix_from_images(A.space(n), 0, E.space(n), 0,
                                               [](const Label& l) {
                                                   return LinComb{{l, Scalar(1)}};
                                               });
    return m;
}

namespace {

LinComb act_comb(const OperadData& o, int n, const LinComb& c, const Perm& t) {
    LinComb out;
    for (const auto& [l, v] : c)
        for (const auto& [rl, rv] : o.act(n, l, t))
            comb_accumulate(out, rl, o.field.mul(v, rv), o.field);
    return out;
}

// multilinear extension of the composition to combinations in one slot
LinComb compose_lin(const OperadData& o, int k, int deg, const LinComb& e,
                    const std::vector<std::pair<OperadArg, LinComb>>& args) {
    LinComb out;
    std::function<void(size_t, std::vector<OperadArg>&, const Scalar&)> rec =
        [&](size_t i, std::vector<OperadArg>& cur, const Scalar& coef) {
            if (i == args.size()) {
                for (const auto& [el, ev] : e)
                    for (const auto& [rl, rv] : o.compose(k, deg, el, cur))
                        comb_accumulate(out, rl, o.field.mul(coef, o.field.mul(ev, rv)), o.field);
                return;
            }
            for (const auto& [al, av] : args[i].second) {
                cur.push_back({args[i].first.arity, args[i].first.degree, al});
                rec(i + 1, cur, o.field.mul(coef, av));
                cur.pop_back();
            }
        };
    std::vector<OperadArg> cur;
    rec(0, cur, Scalar(1));
    return out;
}

struct BasisPick {
    int degree;
    Label label;
};

BasisPick random_basis(const DGModule& m, int max_degree, std::mt19937& rng) {
    std::vector<std::pair<int, int>> degs;
    for (const auto& [d, ls] : m.gm.basis)
        if (d <= max_degree && !ls.empty()) degs.push_back({d, static_cast<int>(ls.size())});
    if (degs.empty()) throw Error("random_basis: empty space");
    auto [d, k] = degs[rng() % degs.size()];
    return {d, m.gm.labels(d)[rng() % k]};
}

}  // namespace

IdentityReport check_operad(const OperadData& o, int max_arity, int max_degree, int samples,
                            unsigned seed) {
    IdentityReport rep;
    std::mt19937 rng(seed);
    const Field& F = o.field;
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
    int A = std::min(max_arity, o.arity_bound);

    for (int n = 1; n <= A; ++n) {
        auto r = verify_dsquare(o.space(n), -1, std::min(max_degree, o.degree_bound) + 1);
        if (!r.ok())
            fail("d^2 != 0 in arity " + std::to_string(n) + " at degree " +
                 std::to_string(r.violations[0].degree) + " (witness " + r.violations[0].witness +
                 ")");
    }

    // action laws and action-vs-differential compatibility
    for (int n = 1; n <= A; ++n) {
        auto perms = all_perms(n);
        for (int s = 0; s < samples; ++s) {
            BasisPick x = random_basis(o.space(n), max_degree, rng);
            const Perm& sg = perms[rng() % perms.size()];
            const Perm& tu = perms[rng() % perms.size()];
            LinComb one{{x.label, Scalar(1)}};
            if (act_comb(o, n, one, perm_identity(n)) != one)
                fail("identity permutation acts nontrivially in arity " + std::to_string(n));
            LinComb lhs = act_comb(o, n, o.act(n, x.label, sg), tu);
            LinComb rhs = o.act(n, x.label, perm_compose(sg, tu));
            if (lhs != rhs) fail("action is not a right action in arity " + std::to_string(n));
            if (x.degree >= 1) {
                LinComb dl = act_comb(o, n, o.space(n).d_comb(x.degree, one), sg);
                LinComb dr = o.space(n).d_comb(x.degree, o.act(n, x.label, sg));
                if (dl != dr)
                    fail("action does not commute with d in arity " + std::to_string(n));
            }
        }
    }

    if (!o.compose) return rep;
    int D = std::min({max_degree, o.degree_bound, o.comp_degree_gate});
    int AG = std::min(A, o.comp_arity_gate);

    // unit laws
    for (int n = 1; n <= AG; ++n)
        for (int s = 0; s < samples; ++s) {
            BasisPick x = random_basis(o.space(n), D, rng);
            LinComb one{{x.label, Scalar(1)}};
            LinComb lhs = o.compose(1, 0, o.unit, {{n, x.degree, x.label}});
            if (lhs != one) fail("left unit law fails in arity " + std::to_string(n));
            std::vector<OperadArg> units(n, {1, 0, o.unit});
            if (o.compose(n, x.degree, x.label, units) != one)
                fail("right unit law fails in arity " + std::to_string(n));
        }

    // equivariance on degree-0 inputs
    for (int k = 2; k <= std::min(3, AG); ++k) {
        auto sperms = all_perms(k);
        for (int s = 0; s < samples; ++s) {
            std::vector<OperadArg> args;
            std::vector<int> sizes;
            int total = 0;
            for (int i = 0; i < k; ++i) {
                int ni = 1 + static_cast<int>(rng() % 2);
                if (total + ni + (k - 1 - i) > AG) ni = 1;
                total += ni;
                BasisPick a = random_basis(o.space(ni), 0, rng);
                args.push_back({ni, 0, a.label});
                sizes.push_back(ni);
            }
            BasisPick e = random_basis(o.space(k), 0, rng);
            const Perm& sg = sperms[rng() % sperms.size()];
            LinComb lhs = compose_lin(o, k, 0, o.act(k, e.label, sg),
                                      [&] {
                                          std::vector<std::pair<OperadArg, LinComb>> v;
                                          for (const auto& a : args)
                                              v.push_back({a, LinComb{{a.label, Scalar(1)}}});
                                          return v;
                                      }());
            // permuted arguments a_{sg^{-1}} and the induced block permutation
            Perm si = perm_inverse(sg);
            std::vector<OperadArg> pargs;
            for (int i = 0; i < k; ++i) pargs.push_back(args[si[i]]);
            LinComb inner = o.compose(k, 0, e.label, pargs);
            LinComb rhs = act_comb(o, total, inner, block_perm(sg, sizes));
            if (lhs != rhs) fail("equivariance fails in arity " + std::to_string(k));
        }
    }

    // composition is a chain map (Koszul signs over the argument slots)
    for (int s = 0; s < samples; ++s) {
        int k = 1 + static_cast<int>(rng() % std::min(2, AG));
        std::vector<OperadArg> args;
        int total = 0, degsum = 0;
        bool bad = false;
        for (int i = 0; i < k; ++i) {
            int ni = 1 + static_cast<int>(rng() % 2);
            if (total + ni + (k - 1 - i) > AG) ni = 1;
            total += ni;
            BasisPick a = random_basis(o.space(ni), std::max(0, D - 1 - degsum), rng);
            degsum += a.degree;
            args.push_back({ni, a.degree, a.label});
        }
        BasisPick e = random_basis(o.space(k), std::max(0, D - degsum), rng);
        if (bad) continue;
        int n = total, dtot = e.degree + degsum;
        LinComb val = o.compose(k, e.degree, e.label, args);
        LinComb lhs = o.space(n).d_comb(dtot, val);
        LinComb one{{e.label, Scalar(1)}};
        std::vector<std::pair<OperadArg, LinComb>> slots;
        for (const auto& a : args) slots.push_back({a, LinComb{{a.label, Scalar(1)}}});
        LinComb rhs;
        if (e.degree >= 1)
            rhs = compose_lin(o, k, e.degree - 1, o.space(k).d_comb(e.degree, one), slots);
        int before = e.degree;
        for (size_t i = 0; i < slots.size(); ++i) {
            if (args[i].degree >= 1) {
                auto tmp = slots;
                tmp[i].first.degree -= 1;
                tmp[i].second = o.space(args[i].arity).d_comb(args[i].degree,
                                                             LinComb{{args[i].label, Scalar(1)}});
                Scalar sg = (before % 2 == 0) ? 1 : -1;
                rhs = comb_add(rhs, comb_scale(compose_lin(o, k, e.degree, one, tmp), sg, F), F);
            }
            before += args[i].degree;
        }
        if (lhs != rhs) fail("composition is not a chain map (arity " + std::to_string(n) + ")");
    }

    // associativity on nested samples
    for (int s = 0; s < samples; ++s) {
        // e in arity 2, f1 arity 2, f2 arity 1, g's arity 1
        if (AG < 3) break;
        int budget = D;
        auto pick = [&](int arity, int dmax) {
            BasisPick b = random_basis(o.space(arity), std::max(0, dmax), rng);
            budget -= b.degree;
            return b;
        };
        BasisPick e = pick(2, budget);
        BasisPick f1 = pick(2, budget);
        BasisPick f2 = pick(1, budget);
        BasisPick g1 = pick(1, budget);
        BasisPick g2 = pick(1, budget);
        BasisPick g3 = pick(1, budget);
        if (budget < 0) continue;
        LinComb innerL = o.compose(2, e.degree, e.label,
                                   {{2, f1.degree, f1.label}, {1, f2.degree, f2.label}});
        std::vector<std::pair<OperadArg, LinComb>> gs = {
            {{1, g1.degree, g1.label}, LinComb{{g1.label, Scalar(1)}}},
            {{1, g2.degree, g2.label}, LinComb{{g2.label, Scalar(1)}}},
            {{1, g3.degree, g3.label}, LinComb{{g3.label, Scalar(1)}}}};
        LinComb lhs = compose_lin(o, 3, e.degree + f1.degree + f2.degree, innerL, gs);
        // right side: e(f1(g1,g2), f2(g3)); Koszul sign from moving g1,g2 past f2
        LinComb c1 = o.compose(2, f1.degree, f1.label,
                               {{1, g1.degree, g1.label}, {1, g2.degree, g2.label}});
        LinComb c2 = o.compose(1, f2.degree, f2.label, {{1, g3.degree, g3.label}});
        Scalar sg = ((f2.degree * (g1.degree + g2.degree)) % 2 == 0) ? 1 : -1;
        LinComb rhs = comb_scale(
            compose_lin(o, 2, e.degree,
                        LinComb{{e.label, Scalar(1)}},
                        {{{2, f1.degree + g1.degree + g2.degree, ""}, c1},
                         {{1, f2.degree + g3.degree, ""}, c2}}),
            sg, F);
        if (lhs != rhs) fail("associativity fails on a sampled composite");
    }

    return rep;
}

}  // namespace halg
