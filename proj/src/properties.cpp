#include "pastrev/cheb.hpp"
#include "pastrev/diffop.hpp"
#include "pastrev/factored.hpp"
#include "pastrev/natnum.hpp"
#include "pastrev/parse.hpp"
#include "pastrev/propcheck.hpp"
#include "pastrev/rational_func.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace pastrev::props {

namespace {

// ---------------------------------------------------------------- generators

template <typename K>
Poly<K> rand_poly_exact(Rng& rng, long deg, bool nonzero_const) {
    std::vector<K> c(static_cast<std::size_t>(deg) + 1, K(0));
    for (auto& a : c) a = rng.scalar<K>();
    c.back() = rng.nonzero_scalar<K>();
    if (nonzero_const && c.front().is_zero()) c.front() = rng.nonzero_scalar<K>();
    return Poly<K>(std::move(c));
}

template <typename K>
FactoredLinear<K> rand_factored(Rng& rng, int max_factors) {
    FactoredLinear<K> f;
    f.unit = rng.nonzero_scalar<K>();
    long n = rng.range(1, max_factors);
    for (long i = 0; i < n; ++i)
        f.factors.push_back({rng.nonzero_scalar<K>(), rng.nonzero_scalar<K>()});
    return f;
}

// Factored polynomial whose expansion is certified palindromic or
// antipalindromic: reciprocal root pairs, plus the class-fixing roots
// +1 / -1 as needed for the requested cipher parity.
template <typename K>
FactoredLinear<K> rand_paired_factored(Rng& rng, Symmetry sym, bool even_cipher) {
    FactoredLinear<K> f;
    f.unit = rng.nonzero_scalar<K>();
    auto add_root = [&](const K& rho) {
        K beta = rng.nonzero_scalar<K>();
        f.factors.push_back({beta, beta * rho});
    };
    long pairs = rng.range(1, 5);
    for (long i = 0; i < pairs; ++i) {
        K rho = rng.nonzero_scalar<K>();
        add_root(rho);
        add_root(K(1) / rho);
    }
    if (sym == Symmetry::palindromic) {
        if (even_cipher) add_root(K(-1));
    } else {
        add_root(K(1));
        if (!even_cipher) add_root(K(-1));
    }
    return f;
}

template <typename R>
typename R::Elem rand_elem(Rng& rng, bool nonzero) {
    if constexpr (std::is_same_v<R, ConstRing>) {
        return nonzero ? rng.nonzero_gaussian() : rng.gaussian();
    } else {
        if (!nonzero && rng.range(0, 3) == 0) return {};
        return rng.poly<Rational>(3, false);
    }
}

template <typename R>
DiffOp<R> rand_op(Rng& rng, long max_order, bool nonzero_a0) {
    long ord = rng.range(0, max_order);
    std::vector<typename R::Elem> c(static_cast<std::size_t>(ord) + 1);
    for (auto& a : c) a = rand_elem<R>(rng, false);
    c.back() = rand_elem<R>(rng, true);
    if (nonzero_a0 && c.front().is_zero()) c.front() = rand_elem<R>(rng, true);
    return DiffOp<R>(std::move(c));
}

template <typename R>
DiffOp<R> rand_symmetric_op(Rng& rng, std::size_t cipher, Symmetry sym) {
    std::vector<typename R::Elem> c(cipher);
    std::size_t half = (cipher + 1) / 2;
    for (std::size_t j = 0; j < half; ++j) {
        typename R::Elem a = rand_elem<R>(rng, j == 0);
        c[j] = a;
        c[cipher - 1 - j] = sym == Symmetry::palindromic ? a : -a;
    }
    if (sym == Symmetry::antipalindromic && cipher % 2 == 1) c[cipher / 2] = typename R::Elem();
    return DiffOp<R>(std::move(c));
}

Numeral rand_numeral(Rng& rng, int base, int max_digits, bool last_nonzero) {
    long len = rng.range(1, max_digits);
    mpz_class v = 0;
    for (long i = 0; i < len; ++i) {
        long lo = (i == 0 || (last_nonzero && i == len - 1)) ? 1 : 0;
        v = v * base + rng.range(lo, base - 1);
    }
    return Numeral(std::move(v), base);
}

int rand_base(Rng& rng) { return rng.range(0, 3) == 0 ? static_cast<int>(rng.range(2, 16)) : 10; }

template <typename K>
bool same_multiset(std::vector<K> a, std::vector<K> b) {
    if (a.size() != b.size()) return false;
    auto lt = [](const K& x, const K& y) { return x.cmp(y) < 0; };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    return a == b;
}

template <typename R>
GaussianRational elem_as_gaussian(const typename R::Elem& c) {
    if constexpr (std::is_same_v<R, ConstRing>) return c;
    else return GaussianRational(c.constant_term());
}

// Checks both halves of the division contract: exact reconstruction and the
// remainder acting as the eigenvalue of e^{-cx}.
template <typename R>
bool division_sound(const DiffOp<R>& l, const typename R::Elem& c, const RightDivision<R>& dv,
                    std::string& why) {
    DiffOp<R> divisor = DiffOp<R>::d() + DiffOp<R>(c);
    if (op_mul(dv.quotient, divisor) + DiffOp<R>(dv.remainder) != l) {
        why = "quotient*(D+c) + r != L";
        return false;
    }
    ExpPoly witness = exp_of_linear(-elem_as_gaussian<R>(c));
    if (apply(l, witness) != witness.scaled(R::to_amplitude(dv.remainder))) {
        why = "apply(L, e^{-cx}) != r e^{-cx}";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- field laws

template <typename K, typename Gen>
void ring_axioms_case(Context& ctx, Gen gen, const char* label) {
    K a = gen(), b = gen(), c = gen();
    std::string in = std::string(label) + ": a=" + a.str() + " b=" + b.str() + " c=" + c.str();
    ctx.check((a + b) + c == a + (b + c), in, "(a+b)+c = a+(b+c)", "mismatch");
    ctx.check(a + K(0) == a && K(0) + a == a, in, "0 neutral", "mismatch");
    ctx.check(a + (-a) == K(0), in, "a + (-a) = 0", "mismatch");
    ctx.check(a + b == b + a, in, "a+b = b+a", "mismatch");
    ctx.check((a * b) * c == a * (b * c), in, "(ab)c = a(bc)", "mismatch");
    ctx.check(a * K(1) == a && K(1) * a == a, in, "1 neutral", "mismatch");
    ctx.check(a * (b + c) == a * b + a * c, in, "a(b+c) = ab+ac", "mismatch");
    ctx.check((a + b) * c == a * c + b * c, in, "(a+b)c = ac+bc", "mismatch");
    if (!b.is_zero()) ctx.check((a / b) * b == a, in, "(a/b)b = a", "mismatch");
}

// ------------------------------------------------------------ poly law bodies

template <typename K>
void p11_case(Context& ctx) {
    Poly<K> p = ctx.rng().template poly<K>(16, true);
    Poly<K> rev = reverse(p);
    unsigned long n = static_cast<unsigned long>(p.degree());
    for (int i = 0; i < 10; ++i) {
        K t = ctx.rng().template nonzero_scalar<K>();
        K lhs = rev.eval(t);
        K rhs = pow(t, n) * p.eval(K(1) / t);
        ctx.check(lhs == rhs, "P = " + p.str() + ", t = " + t.str(), rhs.str(), lhs.str());
    }
}

template <typename K>
void p12_case(Context& ctx) {
    FactoredLinear<K> f = rand_factored<K>(ctx.rng(), 8);
    Poly<K> p = expand(f);
    Poly<K> rev = reverse(p);
    for (const auto& [beta, alpha] : f.factors) {
        K rho = alpha / beta;
        ctx.check(rev.eval(K(1) / rho).is_zero(), "P = " + p.str() + ", root = " + rho.str(),
                  "reverse(P)(1/root) = 0", rev.eval(K(1) / rho).str());
    }
    K sigma = ctx.rng().template nonzero_scalar<K>();
    if (!p.eval(sigma).is_zero())
        ctx.check(!rev.eval(K(1) / sigma).is_zero(), "P = " + p.str() + ", sigma = " + sigma.str(),
                  "reverse(P)(1/sigma) != 0", "0");
}

template <typename K>
void p13_case(Context& ctx) {
    FactoredLinear<K> f = rand_factored<K>(ctx.rng(), 8);
    Poly<K> lhs = expand(reverse_factored(f));
    Poly<K> rhs = reverse(expand(f));
    ctx.check(lhs == rhs, "P = " + expand(f).str(), rhs.str(), lhs.str());
}

template <typename K>
void p14_case(Context& ctx) {
    Poly<K> p = ctx.rng().template poly<K>(16, true);
    Poly<K> rr = reverse(reverse(p));
    ctx.check(rr == p, "P = " + p.str(), p.str(), rr.str());
}

template <typename K>
void p15_case(Context& ctx) {
    Poly<K> p = ctx.rng().template poly<K>(16, true);
    ctx.check(cipher(reverse(p)) == cipher(p), "P = " + p.str(), std::to_string(cipher(p)),
              std::to_string(cipher(reverse(p))));
}

template <typename K>
void p16_case(Context& ctx) {
    long deg = ctx.rng().range(0, 16);
    Poly<K> p = rand_poly_exact<K>(ctx.rng(), deg, true);
    Poly<K> q = rand_poly_exact<K>(ctx.rng(), deg, true);
    // the law presumes the sum keeps the cipher and stays in the domain
    while ((p.leading() + q.leading()).is_zero() || (p.constant_term() + q.constant_term()).is_zero())
        q = rand_poly_exact<K>(ctx.rng(), deg, true);
    Poly<K> lhs = reverse(p + q);
    Poly<K> rhs = reverse(p) + reverse(q);
    ctx.check(lhs == rhs, "P = " + p.str() + ", Q = " + q.str(), rhs.str(), lhs.str());
}

template <typename K>
void p17_case(Context& ctx) {
    Poly<K> p = ctx.rng().template poly<K>(10, true);
    Poly<K> q = ctx.rng().template poly<K>(10, true);
    Poly<K> lhs = reverse(p * q);
    Poly<K> rhs = reverse(p) * reverse(q);
    ctx.check(lhs == rhs, "P = " + p.str() + ", Q = " + q.str(), rhs.str(), lhs.str());
}

template <typename K>
void p2_case(Context& ctx) {
    Symmetry sym = ctx.rng().flip() ? Symmetry::palindromic : Symmetry::antipalindromic;
    bool even_cipher = ctx.rng().flip();
    FactoredLinear<K> f = rand_paired_factored<K>(ctx.rng(), sym, even_cipher);
    Poly<K> p = expand(f);
    std::string in = "P = " + p.str();
    Symmetry got = classify(p);
    if (got != sym) {
        ctx.fail(in, to_string(sym), to_string(got));
        return;
    }
    RootPairing<K> rp;
    try {
        rp = root_pairing(f);
    } catch (const verification_error& e) {
        ctx.fail(in, "a reciprocal matching", e.what());
        return;
    }
    std::vector<K> reported;
    for (const auto& [a, b] : rp.pairs) {
        ctx.check(a * b == K(1), in, "pair product 1", (a * b).str());
        reported.push_back(a);
        reported.push_back(b);
    }
    if (rp.unpaired) reported.push_back(*rp.unpaired);
    bool even = p.cipher() % 2 == 0;
    if (even) {
        K forced = sym == Symmetry::palindromic ? K(-1) : K(1);
        ctx.check(rp.unpaired && *rp.unpaired == forced, in, "unpaired root " + forced.str(),
                  rp.unpaired ? rp.unpaired->str() : "none");
    } else {
        ctx.check(!rp.unpaired, in, "no unpaired root", rp.unpaired ? rp.unpaired->str() : "none");
    }
    std::vector<K> roots;
    for (const auto& [beta, alpha] : f.factors) roots.push_back(alpha / beta);
    ctx.check(same_multiset(reported, roots), in, "pairing covers the root multiset", "mismatch");
}

template <typename K>
void p3_sum_case(Context& ctx, Symmetry sym) {
    std::size_t c = static_cast<std::size_t>(ctx.rng().range(1, 17));
    Poly<K> p = ctx.rng().template symmetric_poly<K>(c, sym);
    Poly<K> q = ctx.rng().template symmetric_poly<K>(c, sym);
    while ((p.leading() + q.leading()).is_zero())
        q = ctx.rng().template symmetric_poly<K>(c, sym);
    Symmetry got = classify(p + q);
    ctx.check(got == sym, "P = " + p.str() + ", Q = " + q.str(), to_string(sym), to_string(got));
}

template <typename K>
void p3_mul_case(Context& ctx, Symmetry sa, Symmetry sb, Symmetry expected) {
    // antipalindromic constructions need at least two coefficients
    std::size_t ca = static_cast<std::size_t>(ctx.rng().range(sa == Symmetry::palindromic ? 1 : 2, 12));
    std::size_t cb = static_cast<std::size_t>(ctx.rng().range(sb == Symmetry::palindromic ? 1 : 2, 12));
    Poly<K> p = ctx.rng().template symmetric_poly<K>(ca, sa);
    Poly<K> q = ctx.rng().template symmetric_poly<K>(cb, sb);
    Symmetry got = classify(p * q);
    ctx.check(got == expected, "P = " + p.str() + ", Q = " + q.str(), to_string(expected), to_string(got));
}

template <typename K>
void p41_case(Context& ctx) {
    Poly<K> p = ctx.rng().template poly<K>(12, true);
    Poly<K> q = ctx.rng().template poly<K>(12, true);
    Poly<K> lhs = paste(reverse(p), reverse(q));
    Poly<K> rhs = reverse(paste(q, p));
    ctx.check(lhs == rhs, "P = " + p.str() + ", Q = " + q.str(), rhs.str(), lhs.str());
}

template <typename K>
void p42_case(Context& ctx) {
    Poly<K> p = ctx.rng().template poly<K>(10, false);
    Poly<K> q = ctx.rng().template poly<K>(10, false);
    Poly<K> r = ctx.rng().template poly<K>(10, false);
    Poly<K> lhs = paste(paste(p, q), r);
    Poly<K> rhs = paste(p, paste(q, r));
    ctx.check(lhs == rhs,
              "P = " + p.str() + ", Q = " + q.str() + ", R = " + r.str(), rhs.str(), lhs.str());
}

template <typename K>
void p5_case(Context& ctx) {
    Poly<K> p = ctx.rng().template poly<K>(12, true);
    Poly<K> s = paste(p, reverse(p));
    std::string in = "P = " + p.str();
    ctx.check(classify(s) == Symmetry::palindromic, in, "palindromic", to_string(classify(s)));
    ctx.check(s.cipher() % 2 == 0, in, "even cipher", std::to_string(s.cipher()));
    ctx.check(divides_at(s, K(-1)), in, "x+1 divides", s.eval(K(-1)).str());
}

// --------------------------------------------------------- operator law bodies

template <typename R>
void pdo1_involution_case(Context& ctx) {
    DiffOp<R> l = rand_op<R>(ctx.rng(), 6, true);
    DiffOp<R> rr = op_reverse(op_reverse(l));
    ctx.check(rr == l && op_reverse(l).cipher() == l.cipher(), "L = " + l.str(), l.str(), rr.str());
}

template <typename R>
void pdo13_case(Context& ctx) {
    long ord = ctx.rng().range(0, 6);
    auto gen = [&]() {
        std::vector<typename R::Elem> c(static_cast<std::size_t>(ord) + 1);
        for (auto& a : c) a = rand_elem<R>(ctx.rng(), false);
        c.back() = rand_elem<R>(ctx.rng(), true);
        if (c.front().is_zero()) c.front() = rand_elem<R>(ctx.rng(), true);
        return DiffOp<R>(std::move(c));
    };
    DiffOp<R> l = gen(), r = gen();
    while ((l.leading() + r.leading()).is_zero() || (l.coeff(0) + r.coeff(0)).is_zero()) r = gen();
    DiffOp<R> lhs = op_reverse(l + r);
    DiffOp<R> rhs = op_reverse(l) + op_reverse(r);
    ctx.check(lhs == rhs, "L = " + l.str() + ", R = " + r.str(), rhs.str(), lhs.str());
}

void pdo2_case(Context& ctx) {
    std::size_t cipher = 2 * static_cast<std::size_t>(ctx.rng().range(1, 3));  // even cipher, order <= 5
    bool pal = ctx.rng().flip();
    Symmetry sym = pal ? Symmetry::palindromic : Symmetry::antipalindromic;
    DiffOp<PolyRing> l = rand_symmetric_op<PolyRing>(ctx.rng(), cipher, sym);
    Poly<Rational> c{Rational(pal ? 1 : -1)};
    auto dv = right_divide_monic_linear(l, c);
    std::string in = std::string(to_string(sym)) + " L = " + l.str();
    ctx.check(dv.remainder.is_zero(), in, "remainder 0", dv.remainder.str());
    std::string why;
    if (!division_sound(l, c, dv, why)) ctx.fail(in, "sound division", why);
}

template <typename R>
void pdo3_case(Context& ctx) {
    Symmetry sym = ctx.rng().flip() ? Symmetry::palindromic : Symmetry::antipalindromic;
    std::size_t c = static_cast<std::size_t>(ctx.rng().range(sym == Symmetry::palindromic ? 1 : 2, 7));
    DiffOp<R> l = rand_symmetric_op<R>(ctx.rng(), c, sym);
    DiffOp<R> r = rand_symmetric_op<R>(ctx.rng(), c, sym);
    while ((l.leading() + r.leading()).is_zero()) r = rand_symmetric_op<R>(ctx.rng(), c, sym);
    Symmetry got = op_classify(l + r);
    ctx.check(got == sym, "L = " + l.str() + ", R = " + r.str(), to_string(sym), to_string(got));
}

template <typename R>
void pdo41_case(Context& ctx) {
    DiffOp<R> l = rand_op<R>(ctx.rng(), 5, true);
    DiffOp<R> r = rand_op<R>(ctx.rng(), 5, true);
    DiffOp<R> lhs = op_paste(op_reverse(l), op_reverse(r));
    DiffOp<R> rhs = op_reverse(op_paste(r, l));
    ctx.check(lhs == rhs, "L = " + l.str() + ", R = " + r.str(), rhs.str(), lhs.str());
}

template <typename R>
void pdo42_case(Context& ctx) {
    DiffOp<R> l = rand_op<R>(ctx.rng(), 4, false);
    DiffOp<R> r = rand_op<R>(ctx.rng(), 4, false);
    DiffOp<R> s = rand_op<R>(ctx.rng(), 4, false);
    DiffOp<R> lhs = op_paste(op_paste(l, r), s);
    DiffOp<R> rhs = op_paste(l, op_paste(r, s));
    ctx.check(lhs == rhs, "L = " + l.str() + ", R = " + r.str() + ", S = " + s.str(), rhs.str(),
              lhs.str());
}

template <typename R>
void pdo5_case(Context& ctx) {
    DiffOp<R> l = rand_op<R>(ctx.rng(), 5, true);
    DiffOp<R> m = op_paste(l, op_reverse(l));
    std::string in = "L = " + l.str();
    ctx.check(op_classify(m) == Symmetry::palindromic && m.cipher() % 2 == 0, in,
              "palindromic with even cipher", m.str());
    typename R::Elem one(1);
    auto dv = right_divide_monic_linear(m, one);
    ctx.check(dv.remainder.is_zero(), in, "remainder 0 under D+1", dv.remainder.str());
    std::string why;
    if (!division_sound(m, one, dv, why)) ctx.fail(in, "sound division", why);
}

template <typename R>
void pdodiv_case(Context& ctx) {
    DiffOp<R> l = rand_op<R>(ctx.rng(), 6, false);
    while (l.order() < 1) l = rand_op<R>(ctx.rng(), 6, false);
    typename R::Elem c;
    if constexpr (std::is_same_v<R, ConstRing>) c = ctx.rng().gaussian();
    else c = Poly<Rational>(ctx.rng().rational());
    auto dv = right_divide_monic_linear(l, c);
    std::string why;
    if (!division_sound(l, c, dv, why))
        ctx.fail("L = " + l.str() + ", c = " + R::str(c, 'x'), "sound division", why);
}

void pdoc1_closure_case(Context& ctx, Symmetry sa, Symmetry sb, Symmetry expected) {
    std::size_t ca = static_cast<std::size_t>(ctx.rng().range(sa == Symmetry::palindromic ? 1 : 2, 7));
    std::size_t cb = static_cast<std::size_t>(ctx.rng().range(sb == Symmetry::palindromic ? 1 : 2, 7));
    DiffOp<ConstRing> l = rand_symmetric_op<ConstRing>(ctx.rng(), ca, sa);
    DiffOp<ConstRing> r = rand_symmetric_op<ConstRing>(ctx.rng(), cb, sb);
    DiffOp<ConstRing> prod = op_mul(l, r);
    std::string in = "L = " + l.str() + ", R = " + r.str();
    Symmetry got = op_classify(prod);
    ctx.check(got == expected, in, to_string(expected), to_string(got));
    // the coefficient-polynomial picture must agree
    Symmetry via_poly = classify(char_poly(prod));
    ctx.check(via_poly == got, in, to_string(got), to_string(via_poly));
}

// --------------------------------------------------------------- the registry

std::vector<Spec> build_registry() {
    std::vector<Spec> reg;
    auto add = [&reg](std::string id, std::string anchor, std::string mode, std::uint64_t cases,
                      bool scalable, std::function<void(Context&)> run) {
        reg.push_back({std::move(id), std::move(anchor), std::move(mode), cases, scalable, false,
                       std::move(run)});
    };
    auto add_diag = [&reg](std::string id, std::string anchor, std::function<void(Context&)> run) {
        reg.push_back({std::move(id), std::move(anchor), "diagnostic", 1, false, true, std::move(run)});
    };
    auto each_case = [](Context& ctx, const std::function<void(Context&)>& body) {
        for (std::uint64_t i = 0; i < ctx.cases(); ++i) {
            ctx.count_case();
            body(ctx);
        }
    };
    auto both_fields = [each_case](auto rational_body, auto gaussian_body) {
        return [=](Context& ctx) {
            each_case(ctx, [&](Context& c) {
                if (c.rng().flip()) rational_body(c);
                else gaussian_body(c);
            });
        };
    };
    auto both_rings = [each_case](auto const_body, auto poly_body) {
        return [=](Context& ctx) {
            each_case(ctx, [&](Context& c) {
                if (c.rng().flip()) const_body(c);
                else poly_body(c);
            });
        };
    };

    // ---- exact coefficient fields
    add("F-RING-Q", "ring axioms hold exactly for rational scalars", "randomized", 500, true,
        [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                ring_axioms_case<Rational>(c, [&] { return c.rng().rational(); }, "Q");
            });
        });
    add("F-RING-QI", "ring axioms hold exactly for Gaussian rational scalars", "randomized", 500, true,
        [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                ring_axioms_case<GaussianRational>(c, [&] { return c.rng().gaussian(); }, "Q(i)");
            });
        });
    add("F-RING-QX", "ring axioms hold exactly for rational functions", "randomized", 100, true,
        [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                ring_axioms_case<RationalFunc>(
                    c,
                    [&] {
                        return RationalFunc(c.rng().poly<Rational>(3, false),
                                            c.rng().poly<Rational>(2, false));
                    },
                    "Q(x)");
            });
        });
    add("F-CONJ", "conjugation is an involutive field automorphism of Q(i)", "randomized", 500, true,
        [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                GaussianRational a = c.rng().gaussian(), b = c.rng().gaussian();
                std::string in = "a = " + a.str() + ", b = " + b.str();
                c.check(conj(conj(a)) == a, in, "conj involutive", conj(conj(a)).str());
                c.check(conj(a + b) == conj(a) + conj(b), in, "conj additive", "mismatch");
                c.check(conj(a * b) == conj(a) * conj(b), in, "conj multiplicative", "mismatch");
                if (!b.is_zero())
                    c.check(conj(a / b) == conj(a) / conj(b), in, "conj respects division", "mismatch");
            });
        });

    // ---- derivations
    add("DR-LEIBNIZ-POLY", "d/dx on rational polynomials is additive and satisfies the Leibniz rule",
        "randomized", 500, true, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                Poly<Rational> a = c.rng().poly<Rational>(8, false);
                Poly<Rational> b = c.rng().poly<Rational>(8, false);
                std::string in = "a = " + a.str() + ", b = " + b.str();
                c.check(PolyRing::derive(a + b) == PolyRing::derive(a) + PolyRing::derive(b), in,
                        "additive", "mismatch");
                c.check(PolyRing::derive(a * b) == PolyRing::derive(a) * b + a * PolyRing::derive(b),
                        in, "Leibniz", "mismatch");
            });
        });
    add("DR-LEIBNIZ-CONST", "the zero derivation on constants is trivially additive and Leibniz",
        "randomized", 200, true, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                GaussianRational a = c.rng().gaussian(), b = c.rng().gaussian();
                std::string in = "a = " + a.str() + ", b = " + b.str();
                c.check(ConstRing::derive(a * b).is_zero() && ConstRing::derive(a + b).is_zero(), in,
                        "derivation vanishes", "nonzero");
            });
        });

    // ---- polynomial reversal and pasting
    add("P1.1", "coefficient reversal agrees with x^n P(1/x) at random points", "randomized", 500,
        true, both_fields([](Context& c) { p11_case<Rational>(c); },
                          [](Context& c) { p11_case<GaussianRational>(c); }));
    add("P1.2", "roots of the reversal are the reciprocals of the roots", "randomized", 500, true,
        both_fields([](Context& c) { p12_case<Rational>(c); },
                     [](Context& c) { p12_case<GaussianRational>(c); }));
    add("P1.3", "factored reversal flips each linear factor and carries sign (-1)^n", "randomized",
        500, true, both_fields([](Context& c) { p13_case<Rational>(c); },
                               [](Context& c) { p13_case<GaussianRational>(c); }));
    add("P1.4", "reversal is an involution on polynomials with nonzero constant term", "randomized",
        500, true, both_fields([](Context& c) { p14_case<Rational>(c); },
                               [](Context& c) { p14_case<GaussianRational>(c); }));
    add("P1.5", "reversal preserves the coefficient count", "randomized", 500, true,
        both_fields([](Context& c) { p15_case<Rational>(c); },
                     [](Context& c) { p15_case<GaussianRational>(c); }));
    add("P1.6", "reversal distributes over equal-cipher sums whose edges survive", "randomized", 500,
        true, both_fields([](Context& c) { p16_case<Rational>(c); },
                          [](Context& c) { p16_case<GaussianRational>(c); }));
    add("P1.7", "reversal is multiplicative", "randomized", 500, true,
        both_fields([](Context& c) { p17_case<Rational>(c); },
                     [](Context& c) { p17_case<GaussianRational>(c); }));
    add("P2", "palindromic/antipalindromic roots pair into reciprocals with the forced unit root",
        "randomized", 200, false,
        both_fields([](Context& c) { p2_case<Rational>(c); },
                     [](Context& c) { p2_case<GaussianRational>(c); }));
    add("P3.1", "palindromic + palindromic of equal degree stays palindromic", "randomized", 500, true,
        both_fields([](Context& c) { p3_sum_case<Rational>(c, Symmetry::palindromic); },
                     [](Context& c) { p3_sum_case<GaussianRational>(c, Symmetry::palindromic); }));
    add("P3.2", "palindromic * palindromic stays palindromic", "randomized", 500, true,
        both_fields(
            [](Context& c) {
                p3_mul_case<Rational>(c, Symmetry::palindromic, Symmetry::palindromic,
                                      Symmetry::palindromic);
            },
            [](Context& c) {
                p3_mul_case<GaussianRational>(c, Symmetry::palindromic, Symmetry::palindromic,
                                              Symmetry::palindromic);
            }));
    add("P3.3", "antipalindromic + antipalindromic of equal degree stays antipalindromic",
        "randomized", 500, true,
        both_fields([](Context& c) { p3_sum_case<Rational>(c, Symmetry::antipalindromic); },
                     [](Context& c) { p3_sum_case<GaussianRational>(c, Symmetry::antipalindromic); }));
    add("P3.4", "antipalindromic * antipalindromic is palindromic", "randomized", 500, true,
        both_fields(
            [](Context& c) {
                p3_mul_case<Rational>(c, Symmetry::antipalindromic, Symmetry::antipalindromic,
                                      Symmetry::palindromic);
            },
            [](Context& c) {
                p3_mul_case<GaussianRational>(c, Symmetry::antipalindromic, Symmetry::antipalindromic,
                                              Symmetry::palindromic);
            }));
    add("P3.5", "palindromic * antipalindromic is antipalindromic", "randomized", 500, true,
        both_fields(
            [](Context& c) {
                p3_mul_case<Rational>(c, Symmetry::palindromic, Symmetry::antipalindromic,
                                      Symmetry::antipalindromic);
            },
            [](Context& c) {
                p3_mul_case<GaussianRational>(c, Symmetry::palindromic, Symmetry::antipalindromic,
                                              Symmetry::antipalindromic);
            }));
    add("P4.1", "pasting of reversals is the reversal of the swapped pasting", "randomized", 500, true,
        both_fields([](Context& c) { p41_case<Rational>(c); },
                     [](Context& c) { p41_case<GaussianRational>(c); }));
    add("P4.2", "pasting is associative", "randomized", 500, true,
        both_fields([](Context& c) { p42_case<Rational>(c); },
                     [](Context& c) { p42_case<GaussianRational>(c); }));
    add("P5", "P pasted onto its reversal is palindromic and divisible by x+1", "randomized", 500,
        true, both_fields([](Context& c) { p5_case<Rational>(c); },
                          [](Context& c) { p5_case<GaussianRational>(c); }));
    add("P-REMARK",
        "a zero constant term breaks cipher preservation and involution for the raw flip "
        "(witness x^2+x)",
        "witness", 1, false, [](Context& ctx) {
            ctx.count_case();
            Poly<Rational> p{Rational(0), Rational(1), Rational(1)};  // x^2 + x
            Poly<Rational> flip = raw_coefficient_flip(p);
            std::string in = "P = " + p.str();
            ctx.check(flip == Poly<Rational>{Rational(1), Rational(1)}, in, "x+1", flip.str());
            ctx.check(flip.cipher() != p.cipher(), in, "cipher drops", std::to_string(flip.cipher()));
            ctx.check(raw_coefficient_flip(flip) != p, in, "involution broken", "involution held");
            ctx.check(p.eval(Rational(0)).is_zero() && flip.degree() < p.degree(), in,
                      "root 0 lost by the flip", "root retained");
        });

    // ---- Chebyshev reduction
    add("CH-LEMMA1", "T_n((z+1/z)/2) equals (z^n+z^-n)/2 exactly for n <= 32", "randomized", 330,
        false, [](Context& ctx) {
            for (unsigned n = 0; n <= 32; ++n) {
                Poly<Rational> t = cheb_T(n);
                for (int i = 0; i < 10; ++i) {
                    ctx.count_case();
                    Rational z = ctx.rng().nonzero_rational();
                    Rational w = (z + Rational(1) / z) / Rational(2);
                    Rational lhs = t.eval(w);
                    Rational zn = pow(z, n);
                    Rational rhs = (zn + Rational(1) / zn) / Rational(2);
                    ctx.check(lhs == rhs, "n = " + std::to_string(n) + ", z = " + z.str(), rhs.str(),
                              lhs.str());
                }
            }
        });
    add("CH-SOKOEQ",
        "P(z) = 2 z^n sum c_k T_k((z+1/z)/2) for even-degree palindromic P with the halved "
        "first coefficient",
        "randomized", 100, false, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                unsigned long h = static_cast<unsigned long>(c.rng().range(0, 16));
                Poly<Rational> p =
                    c.rng().symmetric_poly<Rational>(2 * h + 1, Symmetry::palindromic);
                auto ce = palindromic_to_cheb(p);
                for (int i = 0; i < 10; ++i) {
                    Rational z = c.rng().nonzero_rational();
                    Rational w = (z + Rational(1) / z) / Rational(2);
                    Rational lhs = p.eval(z);
                    Rational rhs = Rational(2) * pow(z, h) * eval_cheb_sum(ce.coeffs, w);
                    c.check(lhs == rhs, "P = " + p.str('z') + ", z = " + z.str(), lhs.str(), rhs.str());
                }
            });
        });
    add("CH-ROUNDTRIP", "the half-degree reduction and its inverse compose to the identity",
        "randomized", 100, false, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                unsigned long h = static_cast<unsigned long>(c.rng().range(0, 16));
                Poly<Rational> p =
                    c.rng().symmetric_poly<Rational>(2 * h + 1, Symmetry::palindromic);
                Poly<Rational> back = cheb_to_palindromic(palindromic_to_cheb(p));
                c.check(back == p, "P = " + p.str('z'), p.str('z'), back.str('z'));
                std::vector<Rational> coeffs(h + 1, Rational(0));
                for (auto& a : coeffs) a = c.rng().rational();
                coeffs.back() = c.rng().nonzero_rational();
                ChebExpansion<Rational> ce{coeffs};
                auto round = palindromic_to_cheb(cheb_to_palindromic(ce));
                c.check(round.coeffs == ce.coeffs, "expansion round trip", "identity", "mismatch");
            });
        });
    add_diag("ERR-SOKOEQ",
             "keeping the first reduction coefficient unhalved fails the evaluation identity; "
             "the halved form passes (witness z^2+3z+1)",
             [](Context& ctx) {
                 auto reproduces = [](const Poly<Rational>& p, const Rational& z) {
                     auto ce = palindromic_to_cheb(p);
                     std::vector<Rational> unhalved = ce.coeffs;
                     unhalved[0] = unhalved[0] * Rational(2);
                     unsigned long h = static_cast<unsigned long>(p.degree() / 2);
                     Rational w = (z + Rational(1) / z) / Rational(2);
                     Rational lhs = p.eval(z) / (Rational(2) * pow(z, h));
                     bool corrected_ok = lhs == eval_cheb_sum(ce.coeffs, w);
                     bool printed_fails = lhs != eval_cheb_sum(unhalved, w);
                     return corrected_ok && printed_fails;
                 };
                 ctx.count_case();
                 Poly<Rational> witness{Rational(1), Rational(3), Rational(1)};  // z^2+3z+1
                 if (!reproduces(witness, Rational(2)))
                     ctx.fail("P = " + witness.str('z') + ", z = 2",
                              "unhalved form fails while halved form passes", "no discrepancy");
                 for (int i = 0; i < 20; ++i) {
                     ctx.count_case();
                     unsigned long h = static_cast<unsigned long>(ctx.rng().range(0, 8));
                     Poly<Rational> p =
                         ctx.rng().symmetric_poly<Rational>(2 * h + 1, Symmetry::palindromic);
                     // the two forms differ exactly when the middle coefficient is nonzero
                     if (p.coeff(h).is_zero()) continue;
                     Rational z = ctx.rng().nonzero_rational();
                     if (!reproduces(p, z))
                         ctx.fail("P = " + p.str('z') + ", z = " + z.str(),
                                  "unhalved form fails while halved form passes", "no discrepancy");
                 }
             });

    // ---- natural numbers
    add("N1", "digit reversal is an involution when the last digit is nonzero", "randomized", 500,
        true, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                Numeral n = rand_numeral(c.rng(), rand_base(c.rng()), 12, true);
                Numeral rr = reverse_nat(reverse_nat(n));
                c.check(rr == n, "n = " + n.str() + " (base " + std::to_string(n.base()) + ")",
                        n.str(), rr.str());
            });
        });
    add("N2", "reversal swaps the pasting order when both last digits are nonzero", "randomized", 500,
        true, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                int base = rand_base(c.rng());
                Numeral n = rand_numeral(c.rng(), base, 10, true);
                Numeral m = rand_numeral(c.rng(), base, 10, true);
                Numeral lhs = paste_nat(reverse_nat(n), reverse_nat(m));
                Numeral rhs = reverse_nat(paste_nat(m, n));
                c.check(lhs == rhs, "n = " + n.str() + ", m = " + m.str() +
                                        " (base " + std::to_string(base) + ")",
                        rhs.str(), lhs.str());
            });
        });
    add("N3", "numeral pasting is associative", "randomized", 500, true, [each_case](Context& ctx) {
        each_case(ctx, [](Context& c) {
            int base = rand_base(c.rng());
            Numeral m = rand_numeral(c.rng(), base, 8, false);
            Numeral n = rand_numeral(c.rng(), base, 8, false);
            Numeral p = rand_numeral(c.rng(), base, 8, false);
            Numeral lhs = paste_nat(paste_nat(m, n), p);
            Numeral rhs = paste_nat(m, paste_nat(n, p));
            c.check(lhs == rhs, "m = " + m.str() + ", n = " + n.str() + ", p = " + p.str(), rhs.str(),
                    lhs.str());
        });
    });
    add("N4", "every base-10 palindrome with 2, 4 or 6 digits is divisible by 11", "exhaustive", 999,
        false, [](Context& ctx) {
            auto scan = [&ctx](std::size_t half_len) {
                for (long first = 1; first <= 9; ++first) {
                    std::vector<long> digits{first};
                    std::function<void()> rec = [&]() {
                        if (digits.size() == half_len) {
                            mpz_class v = 0;
                            for (long d : digits) v = v * 10 + d;
                            for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * 10 + *it;
                            ctx.count_case();
                            Numeral n(v, 10);
                            ctx.check(check_eleven(n), "n = " + n.str(), "divisible by 11",
                                      mpz_class(v % 11).get_str());
                            return;
                        }
                        for (long d = 0; d <= 9; ++d) {
                            digits.push_back(d);
                            rec();
                            digits.pop_back();
                        }
                    };
                    rec();
                }
            };
            scan(1);  // cipher 2: d d
            scan(2);  // cipher 4: d a a d
            scan(3);  // cipher 6: d a b b a d
        });
    add("N4-BASES", "even-cipher palindromes are divisible by base+1 in any base", "randomized", 300,
        true, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                int base = static_cast<int>(c.rng().range(2, 16));
                long half_len = c.rng().range(1, 3);
                std::vector<long> half;
                half.push_back(c.rng().range(1, base - 1));
                for (long i = 1; i < half_len; ++i) half.push_back(c.rng().range(0, base - 1));
                mpz_class v = 0;
                for (long d : half) v = v * base + d;
                for (auto it = half.rbegin(); it != half.rend(); ++it) v = v * base + *it;
                Numeral n(v, base);
                c.check(check_eleven(n), "n = " + n.str() + " (base " + std::to_string(base) + ")",
                        "divisible by base+1", mpz_class(v % (base + 1)).get_str());
            });
        });
    add("N5", "n pasted onto its reversal is divisible by 11 for nonzero last digits, n <= 99999",
        "exhaustive", 90000, false, [](Context& ctx) {
            for (long n = 1; n <= 99999; ++n) {
                if (n % 10 == 0) continue;
                ctx.count_case();
                Numeral num(n, 10);
                Numeral pasted = paste_nat(num, reverse_nat(num));
                if (!check_eleven(pasted))
                    ctx.fail("n = " + num.str(), "11 divides n paste reverse(n)", pasted.str());
            }
        });
    add_diag("N5-BOUNDARY",
             "a trailing zero breaks the pasted-reversal divisibility (witness 10 paste 1 = 101)",
             [](Context& ctx) {
                 ctx.count_case();
                 Numeral ten(10L, 10);
                 Numeral pasted = paste_nat(ten, reverse_nat(ten));
                 if (check_eleven(pasted))
                     ctx.fail("n = 10", "11 does not divide " + pasted.str(), "divisible");
             });
    add("GAME1", "the descending-nines rows hold digit for digit", "exhaustive", 10, false,
        [](Context& ctx) {
            static const std::array<const char*, 9> printed = {
                "9 x 9 + 7 = 88",
                "98 x 9 + 6 = 888",
                "987 x 9 + 5 = 8888",
                "9876 x 9 + 4 = 88888",
                "98765 x 9 + 3 = 888888",
                "987654 x 9 + 2 = 8888888",
                "9876543 x 9 + 1 = 88888888",
                "98765432 x 9 + 0 = 888888888",
                "987654321 x 9 - 1 = 8888888888",
            };
            auto rows = game_nines(10);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                ctx.count_case();
                std::string line = rows[i].expr + " = " + rows[i].rhs.get_str();
                if (i < printed.size())
                    ctx.check(line == printed[i], "row " + std::to_string(i), printed[i], line);
                ctx.check(rows[i].equal, line, "lhs = rhs", rows[i].lhs.get_str());
            }
        });
    add("GAME2", "the repunit-square rows hold digit for digit", "exhaustive", 9, false,
        [](Context& ctx) {
            static const std::array<const char*, 9> printed = {
                "1 x 1 = 1",
                "11 x 11 = 121",
                "111 x 111 = 12321",
                "1111 x 1111 = 1234321",
                "11111 x 11111 = 123454321",
                "111111 x 111111 = 12345654321",
                "1111111 x 1111111 = 1234567654321",
                "11111111 x 11111111 = 123456787654321",
                "111111111 x 111111111 = 12345678987654321",
            };
            auto rows = game_repunits(9);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                ctx.count_case();
                std::string line = rows[i].expr + " = " + rows[i].rhs.get_str();
                ctx.check(line == printed[i], "row " + std::to_string(i), printed[i], line);
                ctx.check(rows[i].equal, line, "lhs = rhs", rows[i].lhs.get_str());
            }
        });

    // ---- differential operators
    add("PDO1.1", "operator reversal is an involution and preserves the cipher", "randomized", 500,
        true, both_rings([](Context& c) { pdo1_involution_case<ConstRing>(c); },
                          [](Context& c) { pdo1_involution_case<PolyRing>(c); }));
    add("PDO1.2", "operator reversal preserves the cipher", "randomized", 500, true,
        both_rings(
            [](Context& c) {
                DiffOp<ConstRing> l = rand_op<ConstRing>(c.rng(), 6, true);
                c.check(op_reverse(l).cipher() == l.cipher(), "L = " + l.str(),
                        std::to_string(l.cipher()), std::to_string(op_reverse(l).cipher()));
            },
            [](Context& c) {
                DiffOp<PolyRing> l = rand_op<PolyRing>(c.rng(), 6, true);
                c.check(op_reverse(l).cipher() == l.cipher(), "L = " + l.str(),
                        std::to_string(l.cipher()), std::to_string(op_reverse(l).cipher()));
            }));
    add("PDO1.3", "operator reversal distributes over equal-cipher sums whose edges survive",
        "randomized", 500, true, both_rings([](Context& c) { pdo13_case<ConstRing>(c); },
                                            [](Context& c) { pdo13_case<PolyRing>(c); }));
    add("PDO2",
        "even-cipher palindromic operators admit right divisor D+1; antipalindromic admit D-1",
        "randomized", 200, false,
        [each_case](Context& ctx) { each_case(ctx, [](Context& c) { pdo2_case(c); }); });
    add("PDO3", "equal-order palindromic and antipalindromic operators close under addition",
        "randomized", 500, true, both_rings([](Context& c) { pdo3_case<ConstRing>(c); },
                                            [](Context& c) { pdo3_case<PolyRing>(c); }));
    add("PDO4.1", "operator pasting of reversals is the reversal of the swapped pasting",
        "randomized", 500, true, both_rings([](Context& c) { pdo41_case<ConstRing>(c); },
                                            [](Context& c) { pdo41_case<PolyRing>(c); }));
    add("PDO4.2", "operator pasting is associative", "randomized", 500, true,
        both_rings([](Context& c) { pdo42_case<ConstRing>(c); },
                    [](Context& c) { pdo42_case<PolyRing>(c); }));
    add("PDO5", "L pasted onto its reversal is palindromic with right divisor D+1", "randomized", 500,
        true, both_rings([](Context& c) { pdo5_case<ConstRing>(c); },
                          [](Context& c) { pdo5_case<PolyRing>(c); }));
    add("PDO-DIV", "right division by D+c reconstructs L and matches the e^{-cx} image", "randomized",
        200, false, both_rings([](Context& c) { pdodiv_case<ConstRing>(c); },
                               [](Context& c) { pdodiv_case<PolyRing>(c); }));
    add("PDOC1.1", "constant-operator reversal transfers to coefficient-polynomial reversal",
        "randomized", 500, true, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                DiffOp<ConstRing> l = rand_op<ConstRing>(c.rng(), 6, true);
                Poly<GaussianRational> lhs = char_poly(op_reverse(l));
                Poly<GaussianRational> rhs = reverse(char_poly(l));
                c.check(lhs == rhs, "L = " + l.str(), rhs.str(), lhs.str());
            });
        });
    add("PDOC1.3", "constant factored reversal flips factors with sign (-1)^n", "randomized", 500,
        true, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                long n = c.rng().range(1, 6);
                std::vector<std::pair<GaussianRational, GaussianRational>> factors, swapped;
                for (long i = 0; i < n; ++i) {
                    GaussianRational beta = c.rng().nonzero_gaussian();
                    GaussianRational alpha = c.rng().nonzero_gaussian();
                    factors.emplace_back(beta, alpha);
                    swapped.emplace_back(alpha, beta);
                }
                DiffOp<ConstRing> l = expand_op_factors(factors);
                DiffOp<ConstRing> rhs = expand_op_factors(swapped);
                if (n % 2 == 1) rhs = -rhs;
                DiffOp<ConstRing> lhs = op_reverse(l);
                c.check(lhs == rhs, "L = " + l.str(), rhs.str(), lhs.str());
            });
        });
    add("PDOC1.4", "reversal is multiplicative over constant coefficients", "randomized", 500, true,
        [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                DiffOp<ConstRing> l = rand_op<ConstRing>(c.rng(), 5, true);
                DiffOp<ConstRing> r = rand_op<ConstRing>(c.rng(), 5, true);
                DiffOp<ConstRing> lhs = op_reverse(op_mul(l, r));
                DiffOp<ConstRing> rhs = op_mul(op_reverse(l), op_reverse(r));
                std::string in = "L = " + l.str() + ", R = " + r.str();
                c.check(lhs == rhs, in, rhs.str(), lhs.str());
                c.check(char_poly(op_mul(l, r)) == char_poly(l) * char_poly(r), in,
                        "coefficient polynomials multiply", "mismatch");
            });
        });
    add("PDOC1.6", "palindromic * palindromic constant operators stay palindromic", "randomized", 500,
        true, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                pdoc1_closure_case(c, Symmetry::palindromic, Symmetry::palindromic,
                                   Symmetry::palindromic);
            });
        });
    add("PDOC1.7", "antipalindromic * antipalindromic constant operators are palindromic",
        "randomized", 500, true, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                pdoc1_closure_case(c, Symmetry::antipalindromic, Symmetry::antipalindromic,
                                   Symmetry::palindromic);
            });
        });
    add("PDOC1.8", "palindromic * antipalindromic constant operators are antipalindromic",
        "randomized", 500, true, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                pdoc1_closure_case(c, Symmetry::palindromic, Symmetry::antipalindromic,
                                   Symmetry::antipalindromic);
            });
        });
    add("KERNEL-RECIP",
        "the reversed constant operator annihilates x^j e^{x/lambda} for each kernel exponent lambda",
        "randomized", 100, false, [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                std::vector<std::pair<GaussianRational, GaussianRational>> factors;
                long kinds = c.rng().range(1, 3);
                std::vector<std::pair<GaussianRational, int>> lambdas;
                for (long i = 0; i < kinds; ++i) {
                    GaussianRational lambda = c.rng().nonzero_gaussian();
                    bool fresh = true;
                    for (const auto& [seen, mult] : lambdas) fresh = fresh && seen != lambda;
                    if (!fresh) continue;
                    int mult = static_cast<int>(c.rng().range(1, 2));
                    lambdas.emplace_back(lambda, mult);
                    for (int m = 0; m < mult; ++m) {
                        GaussianRational beta = c.rng().nonzero_gaussian();
                        factors.emplace_back(beta, beta * lambda);
                    }
                }
                DiffOp<ConstRing> l = expand_op_factors(factors);
                DiffOp<ConstRing> lr = op_reverse(l);
                std::string in = "L = " + l.str();
                for (const auto& [lambda, mult] : lambdas) {
                    for (int j = 0; j < mult; ++j) {
                        ExpPoly fwd = apply(l, monomial_times_exp(static_cast<std::size_t>(j), lambda));
                        c.check(fwd.is_zero(), in,
                                "x^" + std::to_string(j) + " e^{lambda x} in ker L", fwd.str());
                        GaussianRational inv = GaussianRational(1) / lambda;
                        ExpPoly bwd = apply(lr, monomial_times_exp(static_cast<std::size_t>(j), inv));
                        c.check(bwd.is_zero(), in,
                                "x^" + std::to_string(j) + " e^{x/lambda} in ker reverse(L)",
                                bwd.str());
                    }
                }
                // exponent multisets of the swapped factors are the reciprocals
                std::vector<std::pair<GaussianRational, GaussianRational>> swapped;
                for (const auto& [beta, alpha] : factors) swapped.emplace_back(alpha, beta);
                std::vector<GaussianRational> recips, swapped_exps;
                for (const auto& [lambda, mult] : kernel_exponents(factors))
                    for (int m = 0; m < mult; ++m) recips.push_back(GaussianRational(1) / lambda);
                for (const auto& [lambda, mult] : kernel_exponents(swapped))
                    for (int m = 0; m < mult; ++m) swapped_exps.push_back(lambda);
                c.check(same_multiset(recips, swapped_exps), in,
                        "swapped factors carry reciprocal exponents", "mismatch");
            });
        });
    add("WEYL", "the commutator of D with multiplication by a is a'", "randomized", 200, true,
        [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                DiffOp<PolyRing> d = DiffOp<PolyRing>::d();
                DiffOp<PolyRing> x(Poly<Rational>::variable());
                DiffOp<PolyRing> one(Poly<Rational>(Rational(1)));
                c.check(op_mul(d, x) - op_mul(x, d) == one, "a = x", "Dx - xD = 1",
                        (op_mul(d, x) - op_mul(x, d)).str());
                Poly<Rational> a = c.rng().poly<Rational>(5, false);
                DiffOp<PolyRing> am(a);
                DiffOp<PolyRing> comm = op_mul(d, am) - op_mul(am, d);
                c.check(comm == DiffOp<PolyRing>(a.derivative()), "a = " + a.str(),
                        a.derivative().str(), comm.str());
            });
        });
    add("REMARK-KER", "D^2 + 1 - x^2 annihilates e^{-x^2/2}", "witness", 1, false, [](Context& ctx) {
        ctx.count_case();
        DiffOp<PolyRing> l(std::vector<Poly<Rational>>{
            Poly<Rational>{Rational(1), Rational(0), Rational(-1)},  // 1 - x^2
            Poly<Rational>{},                                        // no D term
            Poly<Rational>(Rational(1)),                             // D^2
        });
        ExpPoly gaussian_bump = ExpPoly::exponential(
            GPoly(GaussianRational(1)),
            GPoly::monomial(GaussianRational(Rational(-1, 2)), 2));  // e^{-x^2/2}
        ExpPoly image = apply(l, gaussian_bump);
        ctx.check(image.is_zero(), "L = " + l.str() + ", f = " + gaussian_bump.str(), "0",
                  image.str());
    });
    add("LOGDERIV", "order-one log-derivatives of an operator and its reversal multiply to 1",
        "randomized", 100, false,
        both_rings(
            [](Context& c) {
                std::vector<GaussianRational> coeffs{GaussianRational(c.rng().nonzero_rational()),
                                                     GaussianRational(c.rng().nonzero_rational())};
                DiffOp<ConstRing> l(std::move(coeffs));
                LogDerivative ld = log_derivative_product(l);
                c.check(ld.product == RationalFunc(1), "L = " + l.str(), "1", ld.product.str());
                c.check(ld.u1 * ld.u2 == ld.product, "L = " + l.str(), "u1*u2 = product", "mismatch");
            },
            [](Context& c) {
                std::vector<Poly<Rational>> coeffs{c.rng().poly<Rational>(3, false),
                                                   c.rng().poly<Rational>(3, false)};
                DiffOp<PolyRing> l(std::move(coeffs));
                LogDerivative ld = log_derivative_product(l);
                c.check(ld.product == RationalFunc(1), "L = " + l.str(), "1", ld.product.str());
                RationalFunc expect_u1 = -RationalFunc(l.coeff(0)) / RationalFunc(l.coeff(1));
                c.check(ld.u1 == expect_u1, "L = " + l.str(), expect_u1.str(), ld.u1.str());
            }));
    add_diag("ERR-PDOC1-2",
             "the reversed single-factor operator annihilates e^{x/lambda}, not e^{-lambda x} "
             "(witness D-2)",
             [](Context& ctx) {
                 auto reproduces = [](const GaussianRational& lambda) {
                     DiffOp<ConstRing> l(std::vector<GaussianRational>{-lambda, GaussianRational(1)});
                     DiffOp<ConstRing> lr = op_reverse(l);
                     bool printed_fails = !apply(lr, exp_of_linear(-lambda)).is_zero();
                     bool corrected_ok =
                         apply(lr, exp_of_linear(GaussianRational(1) / lambda)).is_zero();
                     return printed_fails && corrected_ok;
                 };
                 ctx.count_case();
                 if (!reproduces(GaussianRational(2)))
                     ctx.fail("L = D-2", "e^{-2x} image nonzero, e^{x/2} image zero",
                              "no discrepancy");
                 for (int i = 0; i < 20; ++i) {
                     ctx.count_case();
                     GaussianRational lambda = ctx.rng().nonzero_gaussian();
                     // at lambda = +-i the two claims coincide since 1/lambda = -lambda
                     if ((lambda * lambda + GaussianRational(1)).is_zero()) continue;
                     if (!reproduces(lambda))
                         ctx.fail("lambda = " + lambda.str(),
                                  "e^{-lambda x} image nonzero, e^{x/lambda} image zero",
                                  "no discrepancy");
                 }
             });

    // ---- text round trips
    add("RT-POLY", "rendering then parsing a polynomial is the identity", "randomized", 500, true,
        [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                Poly<GaussianRational> p = c.rng().poly<GaussianRational>(8, false);
                char var = c.rng().flip() ? 'x' : 'z';
                std::string s = p.str(var);
                ParsedPoly back = parse_poly(s);
                c.check(back.value == p, "text = " + s, p.str(var), back.value.str(var));
            });
        });
    add("RT-NAT", "rendering then parsing a numeral is the identity", "randomized", 500, true,
        [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                Numeral n = rand_numeral(c.rng(), rand_base(c.rng()), 12, false);
                Numeral back = Numeral::parse(n.str(), n.base());
                c.check(back == n, "text = " + n.str(), n.str(), back.str());
            });
        });
    add("RT-OP", "rendering then parsing an operator is the identity", "randomized", 500, true,
        both_rings(
            [](Context& c) {
                DiffOp<ConstRing> l = rand_op<ConstRing>(c.rng(), 5, false);
                ParsedOp back = parse_op(l.str());
                bool ok = std::holds_alternative<DiffOp<ConstRing>>(back.value) &&
                          std::get<DiffOp<ConstRing>>(back.value) == l;
                c.check(ok, "text = " + l.str(), l.str(), op_str(back.value));
            },
            [](Context& c) {
                DiffOp<PolyRing> l = rand_op<PolyRing>(c.rng(), 5, false);
                ParsedOp back = parse_op(l.str());
                // an all-constant rendering legitimately reparses into the constants ring
                DiffOp<PolyRing> got = std::holds_alternative<DiffOp<PolyRing>>(back.value)
                                           ? std::get<DiffOp<PolyRing>>(back.value)
                                           : to_poly_ring(std::get<DiffOp<ConstRing>>(back.value));
                c.check(got == l, "text = " + l.str(), l.str(), got.str());
            }));
    add("RT-EXP", "rendering then parsing an exp-polynomial is the identity", "randomized", 300, true,
        [each_case](Context& ctx) {
            each_case(ctx, [](Context& c) {
                ExpPoly f;
                long terms = c.rng().range(1, 3);
                for (long i = 0; i < terms; ++i) {
                    GPoly amp = c.rng().poly<GaussianRational>(2, false);
                    GPoly expo;
                    if (c.rng().flip()) expo = c.rng().poly<GaussianRational>(2, false);
                    f = f + ExpPoly::exponential(amp, expo);
                }
                std::string s = f.str();
                if (f.is_zero()) return;
                ExpPoly back = parse_exppoly(s);
                c.check(back == f, "text = " + s, f.str(), back.str());
            });
        });

    return reg;
}

}  // namespace

const std::vector<Spec>& registry() {
    static const std::vector<Spec> reg = build_registry();
    return reg;
}

}  // namespace pastrev::props
