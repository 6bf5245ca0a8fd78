"""Independent cross-checks used to freeze expected values in the test suite.

Everything here is computed from first principles with high-precision
arithmetic (mpmath), exact fractions, and brute-force grid search.  The
script deliberately imports nothing from the tourney package so the values
it prints can serve as an independent oracle for the library's own output.

Run:  python tools/independent_checks.py
"""

from fractions import Fraction

import mpmath as mp
import numpy as np

mp.mp.dps = 40


def header(title):
    print()
    print("=" * 72)
    print(title)
    print("=" * 72)


def show(label, value):
    if isinstance(value, (mp.mpf, float)):
        print(f"  {label:<46s} {mp.nstr(mp.mpf(value), 17)}")
    else:
        print(f"  {label:<46s} {value}")


# ----------------------------------------------------------------------
# Shared model pieces, written out longhand on purpose.
# ----------------------------------------------------------------------

def power_cost(a, m):
    c = lambda s: s ** a / m
    cp = lambda s: a * s ** (a - 1) / m
    cpinv = lambda y: (m * y / a) ** (1 / mp.mpf(a - 1))
    cpp = lambda s: a * (a - 1) * s ** (a - 2) / m
    return c, cp, cpinv, cpp


def tullock_p(r, bi, bj):
    if bi == 0 and bj == 0:
        return mp.mpf("0.5")
    return bi ** r / (bi ** r + bj ** r)


def uniform_noise_cdf(a, t):
    # CDF of eps_j - eps_i with eps ~ U[-a, a]; triangular on [-2a, 2a]
    if t <= -2 * a:
        return mp.mpf(0)
    if t >= 2 * a:
        return mp.mpf(1)
    if t <= 0:
        return (2 * a + t) ** 2 / (8 * a ** 2)
    return 1 - (2 * a - t) ** 2 / (8 * a ** 2)


def uniform_noise_pdf(a, t):
    if abs(t) >= 2 * a:
        return mp.mpf(0)
    return (2 * a - abs(t)) / (4 * a ** 2)


# ----------------------------------------------------------------------
# Brute-force grid search for a single player's best deviation.
# ----------------------------------------------------------------------

def grid_best_2d(payoff, x_hi, s_hi, n=1601, rounds=3):
    """Vectorised search over (productive, sabotage) with local refinement."""
    x_lo, s_lo = 0.0, 0.0
    best = None
    for _ in range(rounds):
        xs = np.linspace(x_lo, x_hi, n)
        ss = np.linspace(s_lo, s_hi, n)
        val = payoff(xs[:, None], ss[None, :])
        k = int(np.argmax(val))
        i, j = divmod(k, n)
        best = (float(val[i, j]), float(xs[i]), float(ss[j]))
        dx = (x_hi - x_lo) / (n - 1)
        ds = (s_hi - s_lo) / (n - 1)
        x_lo, x_hi = max(0.0, xs[i] - 2 * dx), xs[i] + 2 * dx
        s_lo, s_hi = max(0.0, ss[j] - 2 * ds), ss[j] + 2 * ds
    return best


def grid_best_1d(payoff, x_hi, n=200001, rounds=3):
    x_lo = 0.0
    best = None
    for _ in range(rounds):
        xs = np.linspace(x_lo, x_hi, n)
        val = payoff(xs)
        i = int(np.argmax(val))
        best = (float(val[i]), float(xs[i]))
        dx = (x_hi - x_lo) / (n - 1)
        x_lo, x_hi = max(0.0, xs[i] - 2 * dx), xs[i] + 2 * dx
    return best


# ----------------------------------------------------------------------
# Scenario 1: ratio-form contest, r = 1, cost s^3/12, prize 80.
# ----------------------------------------------------------------------

def scenario1():
    header("scenario 1: ratio CSF r=1, cost s^3/12, v=80")
    r, v = mp.mpf(1), mp.mpf(80)
    c, cp, cpinv, cpp = power_cost(3, 12)

    bstar = r * v / 4
    sstar = cpinv(1)
    show("final-stage base effort", bstar)
    show("final-stage sabotage", sstar)
    show("cost of final-stage sabotage", c(sstar))

    pi_dd = v / 2 - bstar
    pi_hd = v / 2 - bstar - c(sstar)          # hawk facing dove
    pi_dh = v / 2 - bstar - sstar             # dove facing hawk
    pi_hh = v / 2 - bstar - sstar - c(sstar)
    show("menu dove-vs-dove", pi_dd)
    show("menu hawk-vs-dove", pi_hd)
    show("menu dove-vs-hawk", pi_dh)
    show("menu hawk-vs-hawk", pi_hh)

    A = lambda p: pi_hd - p * (pi_hd - pi_hh)
    B = lambda p: pi_dd - p * (pi_dd - pi_dh)

    # fixed point of p -> A(p)/(A(p)+B(p)); reduces to 6p^2 - 62p + 29 = 0
    pstar = (mp.mpf(31) - mp.sqrt(787)) / 6
    residual = A(pstar) / (A(pstar) + B(pstar)) - pstar
    show("semifinal hawk win prob p*", pstar)
    show("fixed point residual", residual)
    show("quadratic check 6p^2-62p+29", 6 * pstar ** 2 - 62 * pstar + 29)

    Ast, Bst = A(pstar), B(pstar)
    show("hawk continuation value A", Ast)
    show("dove continuation value B", Bst)

    T = Ast + Bst
    b_hawk = Ast ** 2 * Bst / T ** 2
    b_dove = Ast * Bst ** 2 / T ** 2
    s1 = cpinv(Ast / Bst)
    show("semifinal hawk effective effort", b_hawk)
    show("semifinal dove effective effort", b_dove)
    show("semifinal sabotage", s1)

    pay_hawk = pstar * Ast - c(s1) - b_hawk
    pay_dove = (1 - pstar) * Bst - (b_dove + s1)
    show("hawk expected payoff", pay_hawk)
    show("dove expected payoff", pay_dove)
    show("dove type win prob 1-p*", 1 - pstar)

    # corner deviation at the solved candidate: sabotage the dove's whole
    # productive effort, win surely, collect A
    x_dove = b_dove + s1
    corner = Ast - c(x_dove)
    show("corner deviation payoff (solved)", corner)
    show("corner deviation gain (solved)", corner - pay_hawk)

    # reference reconstruction: the published table carries p = 0.466 with
    # A, B evaluated at that p and efforts b_i = p^2 B, b_j = p(1-p) B
    p_ref = mp.mpf("0.466")
    A_ref, B_ref = A(p_ref), B(p_ref)
    bi_ref = p_ref ** 2 * B_ref
    bj_ref = p_ref * (1 - p_ref) * B_ref
    s1_ref = cpinv(A_ref / B_ref)
    show("reference A at p=0.466", A_ref)
    show("reference B at p=0.466", B_ref)
    show("reference hawk effort", bi_ref)
    show("reference dove effort", bj_ref)
    show("reference sabotage", s1_ref)
    corner_ref = A_ref - c(bj_ref + s1_ref)
    pay_ref = p_ref * A_ref - c(s1_ref) - bi_ref
    show("corner deviation payoff (reference)", corner_ref)
    show("corner deviation gain (reference)", corner_ref - pay_ref)

    # hawk FOC residual at the reference candidate: own-effort marginal
    Tr = bi_ref + bj_ref
    show("reference hawk FOC residual", bj_ref / Tr ** 2 * A_ref - 1)
    show("reference dove FOC residual", bi_ref / Tr ** 2 * B_ref - 1)

    # second-order values
    socs2_true = 2 * bstar / (2 * bstar) ** 3 * v - cpp(sstar)
    show("stage-2 sabotage 2nd partial (analytic)", socs2_true)
    show("stage-2 shortcut 1/(4rv) - c''", 1 / (4 * r * v) - cpp(sstar))
    f = lambda s: v * bstar / (bstar + (bstar + sstar - s)) - c(s) - bstar
    h = mp.mpf("2e-5")
    fd = (f(sstar + h) - 2 * f(sstar) + f(sstar - h)) / h ** 2
    show("stage-2 sabotage 2nd partial (FD h=2e-5)", fd)

    socs1 = Ast * 2 * b_hawk / (b_hawk + b_dove) ** 3 - cpp(s1)
    show("stage-1 sabotage 2nd partial (analytic)", socs1)

    # brute-force deviation gains at the solved candidate
    Af, Bf, cf = float(Ast), float(Bst), lambda s: s ** 3 / 12.0
    bh, bd, s1f = float(b_hawk), float(b_dove), float(s1)
    xd = bd + s1f

    def hawk_pay(x, s):
        be_h = x
        be_d = np.maximum(0.0, xd - s)
        tot = be_h + be_d
        p = np.where(tot > 0, be_h / np.where(tot > 0, tot, 1.0), 0.5)
        return p * Af - cf(s) - x

    def dove_pay(x):
        be_d = np.maximum(0.0, x - s1f)
        tot = be_d + bh
        p = np.where(tot > 0, be_d / np.where(tot > 0, tot, 1.0), 0.5)
        return p * Bf - x

    gain_h, xh, sh = grid_best_2d(hawk_pay, 40.0, xd, n=2001)
    gain_d, xdv = grid_best_1d(dove_pay, 40.0)
    show("grid hawk best payoff (solved)", gain_h)
    show("grid hawk gain (solved)", gain_h - float(pay_hawk))
    show("grid dove gain (solved)", gain_d - float(pay_dove))

    # same grids at the reference candidate (dove FOC holds by construction,
    # hawk is off its best response)
    Afr, Bfr = float(A_ref), float(B_ref)
    bir, bjr, s1r = float(bi_ref), float(bj_ref), float(s1_ref)
    xdr = bjr + s1r

    def hawk_pay_ref(x, s):
        be_d = np.maximum(0.0, xdr - s)
        tot = x + be_d
        p = np.where(tot > 0, x / np.where(tot > 0, tot, 1.0), 0.5)
        return p * Afr - cf(s) - x

    gain_hr, _, _ = grid_best_2d(hawk_pay_ref, 40.0, xdr, n=2001)
    show("grid hawk gain (reference)", gain_hr - float(pay_ref))

    return float(pstar)


# ----------------------------------------------------------------------
# Scenario 2: uniform-noise CSF a=5, f=sqrt, cost s^3/27, prize 20.
# ----------------------------------------------------------------------

def scenario2():
    header("scenario 2: uniform noise a=5, f=sqrt, cost s^3/27, v=20")
    a, v = mp.mpf(5), mp.mpf(20)
    beta = mp.mpf("0.5")
    c, cp, cpinv, cpp = power_cost(3, 27)

    # final-stage base effort solves g(0) f'(b) v = 1
    bstar = (beta * v / (2 * a)) ** (1 / (1 - beta))
    sstar = cpinv(1)
    show("final-stage base effort", bstar)
    show("final-stage sabotage", sstar)

    pi_dd = v / 2 - bstar
    pi_hd = v / 2 - bstar - c(sstar)
    pi_dh = v / 2 - bstar - sstar
    pi_hh = v / 2 - bstar - sstar - c(sstar)
    for lbl, val in [("menu dove-vs-dove", pi_dd), ("menu hawk-vs-dove", pi_hd),
                     ("menu dove-vs-hawk", pi_dh), ("menu hawk-vs-hawk", pi_hh)]:
        show(lbl, val)

    A = lambda p: pi_hd - p * (pi_hd - pi_hh)
    B = lambda p: pi_dd - p * (pi_dd - pi_dh)

    def focs(bi, bj):
        d = mp.sqrt(bi) - mp.sqrt(bj)
        p = uniform_noise_cdf(a, d)
        g = uniform_noise_pdf(a, d)
        e1 = g / (2 * mp.sqrt(bi)) * A(p) - 1
        e2 = g / (2 * mp.sqrt(bj)) * B(p) - 1
        return e1, e2

    bi, bj = mp.findroot(focs, (mp.mpf("0.1"), mp.mpf("0.14")))
    d = mp.sqrt(bi) - mp.sqrt(bj)
    p = uniform_noise_cdf(a, d)
    Ast, Bst = A(p), B(p)
    s1 = cpinv(Ast / Bst)
    show("semifinal hawk effective effort", bi)
    show("sqrt of hawk effort", mp.sqrt(bi))
    show("semifinal dove effective effort", bj)
    show("sqrt of dove effort", mp.sqrt(bj))
    show("semifinal hawk win prob", p)
    show("hawk continuation value A", Ast)
    show("dove continuation value B", Bst)
    show("semifinal sabotage", s1)

    pay_hawk = p * Ast - c(s1) - bi
    pay_dove = (1 - p) * Bst - (bj + s1)
    show("hawk expected payoff", pay_hawk)
    show("dove expected payoff", pay_dove)

    # local curvature at the candidate (own sabotage, hawk)
    x_dove = bj + s1

    def hawk_s(s):
        be_d = x_dove - s
        dd = mp.sqrt(bi) - mp.sqrt(be_d)
        return uniform_noise_cdf(a, dd) * Ast - c(s) - bi

    h = mp.mpf("1e-6")
    fd2 = (hawk_s(s1 + h) - 2 * hawk_s(s1) + hawk_s(s1 - h)) / h ** 2
    show("stage-1 hawk sabotage 2nd partial (FD)", fd2)

    g0 = uniform_noise_pdf(a, d)
    analytic = Ast * (mp.mpf(1) / (4 * a ** 2) / (4 * bj)
                      + g0 / (4 * bj ** mp.mpf("1.5"))) - cpp(s1)
    show("stage-1 hawk sabotage 2nd partial (analytic)", analytic)

    # productive-direction curvature stays negative
    def hawk_x(x):
        dd = mp.sqrt(x) - mp.sqrt(bj)
        return uniform_noise_cdf(a, dd) * Ast - c(s1) - x

    fdx = (hawk_x(bi + h) - 2 * hawk_x(bi) + hawk_x(bi - h)) / h ** 2
    show("stage-1 hawk productive 2nd partial (FD)", fdx)

    # exact free-riding gains
    G = lambda t: uniform_noise_cdf(a, t)
    dove_drop = (1 - G(mp.sqrt(bi))) * Bst
    show("stage-1 dove dropout payoff", dove_drop)
    show("stage-1 dove dropout gain", dove_drop - pay_dove)

    hawk_kink = G(mp.sqrt(bi)) * Ast - c(x_dove) - bi
    show("stage-1 hawk full-sabotage payoff", hawk_kink)
    show("stage-1 hawk full-sabotage gain", hawk_kink - pay_hawk)

    # stage-2 gains: dove facing a hawk drops out and keeps G(-f(b*)) v
    pi_dh_drop = G(-mp.sqrt(bstar)) * v
    show("stage-2 dove dropout payoff", pi_dh_drop)
    show("stage-2 dove dropout gain", pi_dh_drop - pi_dh)

    # brute force over the hawk's grid in the all-hawk final
    vf = float(v)
    cf = lambda s: s ** 3 / 27.0
    xr = float(bstar + sstar)          # rival hawk's productive effort

    def hh_pay(x, s):
        be_own = np.maximum(0.0, x - float(sstar))
        be_riv = np.maximum(0.0, xr - s)
        diff = np.sqrt(be_own) - np.sqrt(be_riv)
        t = np.clip(diff, -2 * float(a), 2 * float(a))
        p = np.where(t <= 0, (2 * float(a) + t) ** 2 / (8 * float(a) ** 2),
                     1 - (2 * float(a) - t) ** 2 / (8 * float(a) ** 2))
        return p * vf - cf(s) - x

    best, bx, bs = grid_best_2d(hh_pay, 20.0, xr, n=1601)
    show("stage-2 all-hawk grid best payoff", best)
    show("stage-2 all-hawk grid gain", best - float(pi_hh))
    show("stage-2 all-hawk grid argmax x", bx)
    show("stage-2 all-hawk grid argmax s", bs)


# ----------------------------------------------------------------------
# Alternative seedings, exact rational arithmetic.
# ----------------------------------------------------------------------

def brackets():
    header("alternative seedings at scenario-1 parameters (exact fractions)")
    v = Fraction(80)
    bstar = Fraction(20)
    sstar = Fraction(2)
    cs = Fraction(8, 12)  # cost of sabotage 2 under s^3/12

    def vh(q):
        return v / 2 - bstar - cs - q * sstar

    def vd(q):
        return v / 2 - bstar - q * sstar

    # three hawks, one dove: mixed pair plays beside an all-hawk pair
    A, B = vh(1), vd(1)
    p1 = A / (A + B)
    show("3H1D mixed-pair hawk value A", f"{A} = {float(A):.15g}")
    show("3H1D mixed-pair dove value B", f"{B} = {float(B):.15g}")
    show("3H1D hawk semifinal win prob", f"{p1} = {float(p1):.15g}")
    show("3H1D dove tournament win prob", f"{(1 - p1) / 2} = {float((1 - p1) / 2):.15g}")
    show("3H1D mixed hawk tournament win prob", f"{p1 / 2} = {float(p1 / 2):.15g}")
    show("3H1D parallel hawk tournament win prob", "1/4")

    # one hawk, three doves
    A, B = vh(0), vd(0)
    p1 = A / (A + B)
    show("1H3D mixed-pair hawk value A", f"{A} = {float(A):.15g}")
    show("1H3D mixed-pair dove value B", f"{B} = {float(B):.15g}")
    show("1H3D hawk semifinal win prob", f"{p1} = {float(p1):.15g}")
    show("1H3D mixed dove tournament win prob", f"{(1 - p1) / 2} = {float((1 - p1) / 2):.15g}")
    show("1H3D hawk tournament win prob", f"{p1 / 2} = {float(p1 / 2):.15g}")
    show("1H3D parallel dove tournament win prob", "1/4")


# ----------------------------------------------------------------------
# Interiority thresholds along each scenario's prize axis.
# ----------------------------------------------------------------------

def ratio_candidate(v):
    """Stage-1 candidate for the ratio scenario at prize v (r=1, cost s^3/12)."""
    v = mp.mpf(v)
    c, cp, cpinv, cpp = power_cost(3, 12)
    bstar = v / 4
    sstar = cpinv(1)
    pi_hd = v / 2 - bstar - c(sstar)
    pi_hh = pi_hd - sstar
    pi_dd = v / 2 - bstar
    pi_dh = pi_dd - sstar
    A = lambda p: pi_hd - p * sstar
    B = lambda p: pi_dd - p * sstar
    # p (A+B) = A  ->  quadratic in p
    # A = a0 - 2p, B = b0 - 2p with a0 = pi_hd, b0 = pi_dd
    a0, b0 = pi_hd, pi_dd
    # p(a0 + b0 - 4p) = a0 - 2p -> 4p^2 - (a0+b0+2) p + a0 = 0
    disc = (a0 + b0 + 2) ** 2 - 16 * a0
    p = ((a0 + b0 + 2) - mp.sqrt(disc)) / 8
    Ast, Bst = A(p), B(p)
    T = Ast + Bst
    b_hawk = Ast ** 2 * Bst / T ** 2
    b_dove = Ast * Bst ** 2 / T ** 2
    s1 = cpinv(Ast / Bst)
    pay_h = p * Ast - c(s1) - b_hawk
    pay_d = (1 - p) * Bst - (b_dove + s1)
    corner_gain = (Ast - c(b_dove + s1)) - pay_h
    soc1 = Ast * 2 * b_hawk / T ** 3 - cpp(s1)
    return dict(p=p, A=Ast, B=Bst, b_hawk=b_hawk, b_dove=b_dove, s1=s1,
                pay_h=pay_h, pay_d=pay_d, corner_gain=corner_gain, soc1=soc1)


def thresholds():
    header("interiority threshold scan, ratio scenario family")
    v_lo, v_hi = mp.mpf(11), mp.mpf(80)

    # the stage-2 curvature condition is 4/(r v) < c''(s*) = 1, i.e. v > 4
    def ok(v):
        if v / 4 - mp.mpf(8) / 3 <= 0:
            return False
        if 4 / v >= 1:
            return False
        d = ratio_candidate(v)
        return bool(d["pay_h"] > 0 and d["pay_d"] > 0
                    and d["corner_gain"] <= 0 and d["soc1"] < 0)

    assert not ok(v_lo) and ok(v_hi)
    for _ in range(60):
        mid = (v_lo + v_hi) / 2
        if ok(mid):
            v_hi = mid
        else:
            v_lo = mid
    show("ratio family threshold prize", v_hi)
    for v in (40, 50, 60, 80):
        d = ratio_candidate(v)
        print(f"  v={v:>3}: corner_gain={mp.nstr(d['corner_gain'], 8):>12} "
              f"soc1={mp.nstr(d['soc1'], 8):>12} pay_h={mp.nstr(d['pay_h'], 8):>12}")

    header("noise scenario family: stage-1 dove dropout gain over prizes")
    a = mp.mpf(5)
    beta = mp.mpf("0.5")
    c, cp, cpinv, cpp = power_cost(3, 27)
    for vv in (20, 40, 60, 80, 100, 120, 150, 180):
        v = mp.mpf(vv)
        bstar = (beta * v / (2 * a)) ** 2
        sstar = cpinv(1)
        pi_hd = v / 2 - bstar - c(sstar)
        pi_hh = pi_hd - sstar
        pi_dd = v / 2 - bstar
        pi_dh = pi_dd - sstar
        if pi_hh <= 0:
            print(f"  v={vv:>3}: hawk-vs-hawk menu entry negative, no candidate")
            continue
        A = lambda p: pi_hd - p * sstar
        B = lambda p: pi_dd - p * sstar

        def focs(bi, bj):
            d = mp.sqrt(bi) - mp.sqrt(bj)
            p = uniform_noise_cdf(a, d)
            g = uniform_noise_pdf(a, d)
            return (g / (2 * mp.sqrt(bi)) * A(p) - 1,
                    g / (2 * mp.sqrt(bj)) * B(p) - 1)

        guess = (beta * A(mp.mpf("0.5")) / (2 * a)) ** 2
        try:
            bi, bj = mp.findroot(focs, (guess, guess * mp.mpf("1.05")))
        except Exception:
            print(f"  v={vv:>3}: no interior root found")
            continue
        d = mp.sqrt(bi) - mp.sqrt(bj)
        p = uniform_noise_cdf(a, d)
        Ast, Bst = A(p), B(p)
        s1 = cpinv(Ast / Bst)
        pay_d = (1 - p) * Bst - (bj + s1)
        drop = (1 - uniform_noise_cdf(a, mp.sqrt(bi))) * Bst
        print(f"  v={vv:>3}: dove dropout gain = {mp.nstr(drop - pay_d, 8)}")

    header("modified noise family (cost s^3/0.27, sabotage cap 0.3) at v=100")
    m = mp.mpf("0.27")
    c, cp, cpinv, cpp = power_cost(3, m)
    v = mp.mpf(100)
    bstar = (beta * v / (2 * a)) ** 2
    sstar = cpinv(1)
    show("final-stage base effort", bstar)
    show("final-stage sabotage", sstar)
    pi_hd = v / 2 - bstar - c(sstar)
    pi_hh = pi_hd - sstar
    pi_dd = v / 2 - bstar
    pi_dh = pi_dd - sstar
    A = lambda p: pi_hd - p * sstar
    B = lambda p: pi_dd - p * sstar

    def focs(bi, bj):
        d = mp.sqrt(bi) - mp.sqrt(bj)
        p = uniform_noise_cdf(a, d)
        g = uniform_noise_pdf(a, d)
        return (g / (2 * mp.sqrt(bi)) * A(p) - 1,
                g / (2 * mp.sqrt(bj)) * B(p) - 1)

    bi, bj = mp.findroot(focs, (mp.mpf("1.5"), mp.mpf("1.55")))
    d = mp.sqrt(bi) - mp.sqrt(bj)
    p = uniform_noise_cdf(a, d)
    Ast, Bst = A(p), B(p)
    s1 = cpinv(Ast / Bst)
    pay_h = p * Ast - c(s1) - bi
    pay_d = (1 - p) * Bst - (bj + s1)
    show("hawk effective effort", bi)
    show("dove effective effort", bj)
    show("hawk win prob", p)
    show("sabotage", s1)
    show("hawk payoff", pay_h)
    show("dove payoff", pay_d)
    drop = (1 - uniform_noise_cdf(a, mp.sqrt(bi))) * Bst
    show("dove dropout gain", drop - pay_d)
    kink = uniform_noise_cdf(a, mp.sqrt(bi)) * Ast - c(bj + s1) - bi
    show("hawk full-sabotage gain", kink - pay_h)
    g0 = uniform_noise_pdf(a, d)
    soc = Ast * (mp.mpf(1) / (4 * a ** 2) / (4 * bj)
                 + g0 / (4 * bj ** mp.mpf("1.5"))) - cpp(s1)
    show("hawk sabotage 2nd partial", soc)

    # brute-force both stage-1 players
    Af, Bf = float(Ast), float(Bst)
    cf = lambda s: s ** 3 / float(m)
    bif, bjf, s1f = float(bi), float(bj), float(s1)
    xd = bjf + s1f
    af = float(a)

    def G_np(t):
        t = np.clip(t, -2 * af, 2 * af)
        return np.where(t <= 0, (2 * af + t) ** 2 / (8 * af ** 2),
                        1 - (2 * af - t) ** 2 / (8 * af ** 2))

    def hawk_pay(x, s):
        be_d = np.maximum(0.0, xd - s)
        return G_np(np.sqrt(x) - np.sqrt(be_d)) * Af - cf(s) - x

    def dove_pay(x):
        be_d = np.maximum(0.0, x - s1f)
        return (1 - G_np(np.sqrt(bif) - np.sqrt(be_d))) * Bf - x

    gh, _, _ = grid_best_2d(hawk_pay, 30.0, xd, n=2001)
    gd, _ = grid_best_1d(dove_pay, 30.0)
    show("grid hawk gain", gh - float(pay_h))
    show("grid dove gain", gd - float(pay_d))

    # stage-2 dropout checks at v=100
    drop2 = uniform_noise_cdf(a, -mp.sqrt(bstar)) * v
    show("stage-2 dove dropout gain", drop2 - pi_dh)


if __name__ == "__main__":
    scenario1()
    scenario2()
    brackets()
    thresholds()
