"""Exact checks of the operator identities behind the complexes.

Each ``*_check`` returns a :class:`Report` with one line per identity and
degree.  Identities are compared as exact sparse matrices; on failure the
witness names an input word and the first output word whose coefficients
differ.  The degree bound ``max_deg`` always bounds the index ``n`` of the
identity as written, so a check "at n" may touch degree ``n + 1``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .coalgebra import (
    Coalgebra,
    LeibnizCoalgebra,
    check_coaction,
    check_coalgebra,
    check_leibniz,
    coaction_on_words,
    coalgebra_as_coaction,
    coinvariants_of_dual,
    diagonal_coaction,
    invariants,
    lie_of,
)
from .complexes import (
    COMPLEX_KINDS,
    bar_differential,
    bar_homotopy,
    build_complex,
    build_reduced_ce,
    build_sym_ce,
    ce_differential,
    ce_homotopy,
    change_basis,
    coaction_matrix,
    group_action,
    hochschild_differential,
    homology,
    id_epsilon,
    id_tensor,
    norm_matrix,
    t_matrix,
    tensor_id,
    wedge_vector,
)
from .linalg import DifferentialError, RestrictionError, SparseMatrix, Subspace, image, kernel
from .perm import (
    GroupAlgebraElement,
    Permutation,
    all_permutations,
    antisymmetrizer,
    cyclic,
    direct_sum,
    h_element,
    norm,
    shuffle_sums,
)
from .report import Report
from .tensor import increasing_words, matrix_of, to_vector, word_index, words

# ---------------------------------------------------------------- helpers


def _word_of(i: int, d: int, m: int) -> tuple:
    w = []
    for _ in range(m):
        i, r = divmod(i, d)
        w.append(r)
    return tuple(reversed(w))


def _label(names, word: tuple) -> str:
    return "(" + " (x) ".join(names[x] for x in word) + ")" if word else "(1)"


def _compare(report: Report, identity: str, degree, lhs: SparseMatrix, rhs: SparseMatrix,
             names, m_src: int, m_tgt: int) -> bool:
    if lhs.shape != rhs.shape:
        report.add(identity, degree, False, f"shape {lhs.shape} vs {rhs.shape}")
        return False
    diff = lhs.first_difference(rhs)
    if diff is None:
        report.add(identity, degree, True)
        return True
    r, c, a, b = diff
    d = len(names)
    report.add(identity, degree, False,
               f"on {_label(names, _word_of(c, d, m_src))}: coefficient of "
               f"{_label(names, _word_of(r, d, m_tgt))} is {a} vs {b}")
    return False


def _mat(f, d, m_src, m_tgt) -> SparseMatrix:
    return matrix_of(f, d, m_src, m_tgt)


def _perm_matrix(s: Permutation, d: int) -> SparseMatrix:
    return matrix_of(lambda w: {s.act(w): Fraction(1)}, d, s.n, s.n)


def _kron(x: dict, y: dict, dy: int) -> dict:
    return {i * dy + j: a * b for i, a in x.items() for j, b in y.items()}


def _as_leibniz(X) -> LeibnizCoalgebra:
    return lie_of(X) if isinstance(X, Coalgebra) else X


# ---------------------------------------------------------------- axioms


def axioms_check(C: Coalgebra) -> Report:
    """Coassociativity, counit laws, and the Lie axioms of Lie(C)."""
    rep = Report(f"axioms of {C.name}")
    for r in check_coalgebra(C).results:
        rep.add(r.axiom, None, r.passed, f"basis element {r.witness}")
    if check_coalgebra(C).passed:
        L = lie_of(C)
        for r in check_leibniz(L, antisymmetric=True).results:
            rep.add(f"Lie(C) {r.axiom}", None, r.passed, f"basis element {r.witness}")
    return rep


def comodule_check(C: Coalgebra, max_m: int = 3) -> Report:
    """Diagonal coactions are comodules; C is a Lie(C)-comodule; invariants match dual coinvariants."""
    rep = Report(f"comodules over Lie({C.name})")
    L = lie_of(C)
    res = check_coaction(coalgebra_as_coaction(C)).results[0]
    rep.add("Delta read as a Lie(C)-coaction is a comodule", None, res.passed, f"basis {res.witness}")
    for m in range(1, max_m + 1):
        rho = diagonal_coaction(L, m)
        res = check_coaction(rho).results[0]
        rep.add("diagonal coaction comodule identity", m, res.passed, f"word index {res.witness}")
        inv, co = invariants(rho).dim, coinvariants_of_dual(rho)
        rep.add("dim invariants = dim coinvariants of the dual", m, inv == co, f"{inv} vs {co}")
    return rep


# ---------------------------------------------------------------- homotopies


def bar_homotopy_check(C: Coalgebra, max_deg: int) -> Report:
    """h_{n+1} d^CB_n + (d^CB_{n-1} (x) id) h_n = rho_n for 1 <= n <= max_deg."""
    rep = Report(f"bar homotopy on {C.name}")
    L, d, names = lie_of(C), C.dim, C.basis_names
    dcb = lambda w: bar_differential(C, w)  # noqa: E731
    for n in range(1, max_deg + 1):
        lhs = _mat(bar_homotopy, d, n + 1, n + 1) @ _mat(dcb, d, n, n + 1) \
            + _mat(tensor_id(dcb, 1), d, n, n + 1) @ _mat(bar_homotopy, d, n, n)
        _compare(rep, "h d + (d (x) id) h = rho", n, lhs, coaction_matrix(L, n), names, n, n + 1)
    return rep


def ce_homotopy_check(L, max_deg: int) -> Report:
    """i_{n+1} d^CE_n + (d^CE_{n-1} (x) id) i_n = rho_n for 1 <= n <= max_deg."""
    L = _as_leibniz(L)
    rep = Report(f"CE homotopy on {L.name}")
    rep.notes.append("i_n carries the sign (-1)^n")
    d, names = L.dim, L.basis_names
    dce = lambda w: ce_differential(L, w)  # noqa: E731
    for n in range(1, max_deg + 1):
        lhs = _mat(ce_homotopy, d, n + 1, n + 1) @ _mat(dce, d, n, n + 1) \
            + _mat(tensor_id(dce, 1), d, n, n + 1) @ _mat(ce_homotopy, d, n, n)
        _compare(rep, "i d + (d (x) id) i = rho", n, lhs, coaction_matrix(L, n), names, n, n + 1)
    return rep


def differential_comodule_check(C: Coalgebra, max_deg: int) -> Report:
    """rho_{n+1} d_n = (d_n (x) id) rho_n for d^CB, d^CH and d^CE."""
    rep = Report(f"differentials are comodule maps on {C.name}")
    L, d, names = lie_of(C), C.dim, C.basis_names
    maps = {
        "CB": lambda w: bar_differential(C, w),
        "CH": lambda w: hochschild_differential(C, w),
        "CE": lambda w: ce_differential(L, w),
    }
    for n in range(0, max_deg + 1):
        r_n, r_n1 = coaction_matrix(L, n), coaction_matrix(L, n + 1)
        for key, f in maps.items():
            lhs = r_n1 @ _mat(f, d, n, n + 1)
            rhs = _mat(tensor_id(f, 1), d, n + 1, n + 2) @ r_n
            _compare(rep, f"rho d^{key} = (d^{key} (x) id) rho", n, lhs, rhs, names, n, n + 2)
    return rep


def representation_commute_check(C: Coalgebra, max_n: int = 4) -> Report:
    """rho_n s = (s (x) id_1) rho_n for every s in S_n, and tau-equivariance."""
    rep = Report(f"coaction commutes with permutations on {C.name}")
    L, d, names = lie_of(C), C.dim, C.basis_names
    for n in range(1, max_n + 1):
        r = coaction_matrix(L, n)
        bad = None
        for s in all_permutations(n):
            lhs = r @ _perm_matrix(s, d)
            rhs = _perm_matrix(direct_sum(s, Permutation.identity(1)), d) @ r
            if lhs != rhs:
                bad = s
                break
        rep.add("rho s = (s (x) id) rho for all s", n, bad is None, f"permutation {bad}")
        tau = cyclic(n)
        lhs = r @ _perm_matrix(tau, d)
        rhs = _perm_matrix(direct_sum(tau, Permutation.identity(1)), d) @ r
        _compare(rep, "rho tau = (tau (x) id) rho", n, lhs, rhs, names, n, n + 1)
    return rep


# ---------------------------------------------------------------- algebra structures


def bar_dga_check(C: Coalgebra, max_deg: int) -> Report:
    """d^CB_{n+m} = d^CB_n (x) id_m + (-1)^n id_n (x) d^CB_m for n, m >= 1."""
    rep = Report(f"bar DGA identity on {C.name}")
    d, names = C.dim, C.basis_names
    f = lambda w: bar_differential(C, w)  # noqa: E731
    for total in range(2, max_deg + 1):
        full = _mat(f, d, total, total + 1)
        for n in range(1, total):
            m = total - n
            rhs = _mat(tensor_id(f, m), d, total, total + 1) \
                + _mat(id_tensor(n, f), d, total, total + 1).scale((-1) ** n)
            _compare(rep, "d_{n+m} = d_n (x) id + (-1)^n id (x) d_m", (n, m), full, rhs,
                     names, total, total + 1)
    return rep


def ce_identity_check(L, max_deg: int) -> Report:
    """The decomposition of d^CE_{p+q} through d^CE_p, d^CE_q and moved coaction letters."""
    L = _as_leibniz(L)
    rep = Report(f"CE splitting identity on {L.name}")
    d, names = L.dim, L.basis_names
    dce = lambda w: ce_differential(L, w)  # noqa: E731
    for total in range(2, max_deg + 1):
        full = _mat(dce, d, total, total + 1)
        for p in range(1, total):
            q = total - p

            def moved(word, p=p, q=q):
                out: dict = {}
                tail = word[p:]
                for w, c in coaction_on_words(L, word[:p]).items():
                    letter, head = w[-1], w[:-1]
                    for j in range(1, q + 1):
                        v = head + tail[:j] + (letter,) + tail[j:]
                        sign = -1 if (p + j - 1) % 2 else 1
                        out[v] = out.get(v, 0) + sign * c
                return {k: v for k, v in out.items() if v}

            rhs = _mat(tensor_id(dce, q), d, total, total + 1) \
                + _mat(id_tensor(p, dce), d, total, total + 1).scale((-1) ** p) \
                + _mat(moved, d, total, total + 1)
            _compare(rep, "d_{p+q} = d_p (x) id + (-1)^p id (x) d_q + moved rho_p", (p, q),
                     full, rhs, names, total, total + 1)
    return rep


# ---------------------------------------------------------------- symmetric group identities


def perm_identities_check(max_n: int = 4) -> Report:
    """Group-algebra identities used by the chain maps, for degrees up to max_n."""
    rep = Report("symmetric group algebra identities")
    for n in range(1, max_n + 1):
        eps = antisymmetrizer(n)
        rep.add("eps_n^2 = n! eps_n", n, eps * eps == eps.scale(math.factorial(n)))
        bad = next((s for s in all_permutations(n)
                    if GroupAlgebraElement.of(s) * eps != eps.scale(s.sign())), None)
        rep.add("s eps_n = sgn(s) eps_n", n, bad is None, f"permutation {bad}")
        N = norm(n)
        rep.add("(-1)^{n-1} tau N = N", n,
                GroupAlgebraElement.of(cyclic(n), (-1) ** (n - 1)) * N == N)
        rep.add("(id (x) eps_{n-1}) N_n = eps_n", n, id_epsilon(n) * N == eps)
        if n < max_n:
            lhs = eps.tensor(GroupAlgebraElement.identity(1)) * h_element(n + 1)
            rep.add("(eps_n (x) id) h_{n+1} = (-1)^{n+1} eps_{n+1}", n,
                    lhs == antisymmetrizer(n + 1).scale((-1) ** (n + 1)))
            tau = cyclic(n + 1)
            cosets = [direct_sum(s, Permutation.identity(1)) * tau**j
                      for s in all_permutations(n) for j in range(n + 1)]
            rep.add("S_{n+1} = disjoint union of S_n tau^j", n + 1,
                    len(set(cosets)) == len(cosets) == math.factorial(n + 1))
    for total in range(2, max_n + 1):
        for p in range(1, total):
            q = total - p
            upper, lower = shuffle_sums(p, q)
            block = antisymmetrizer(p).tensor(antisymmetrizer(q))
            full = antisymmetrizer(total)
            rep.add("eps_{p+q} = (eps_p (x) eps_q) eps^{(p,q)}", (p, q), block * upper == full)
            rep.add("eps_{p+q} = eps_{(p,q)} (eps_p (x) eps_q)", (p, q), lower * block == full)
    return rep


# ---------------------------------------------------------------- (t, N) exactness


def tn_exactness_check(C: Coalgebra, max_deg: int) -> Report:
    """ker t = im N and ker N = im t per degree, plus the chain-map squares of t and N."""
    rep = Report(f"(t, N) exactness on {C.name}")
    d, names = C.dim, C.basis_names
    cb = lambda w: bar_differential(C, w)  # noqa: E731
    ch = lambda w: hochschild_differential(C, w)  # noqa: E731
    T = {m: t_matrix(d, m) for m in range(1, max_deg + 2)}
    N = {m: norm_matrix(d, m) for m in range(1, max_deg + 2)}
    for m in range(1, max_deg + 1):
        rep.add("ker t = im N", m, kernel(T[m]) == image(N[m]),
                f"dims {kernel(T[m]).dim} vs {image(N[m]).dim}")
        rep.add("ker N = im t", m, kernel(N[m]) == image(T[m]),
                f"dims {kernel(N[m]).dim} vs {image(T[m]).dim}")
        rep.add("t N = 0 and N t = 0", m, (T[m] @ N[m]).is_zero() and (N[m] @ T[m]).is_zero())
    for n in range(1, max_deg + 1):
        dcb, dch = _mat(cb, d, n, n + 1), _mat(ch, d, n, n + 1)
        _compare(rep, "t_{n+1} d^CH_n = d^CB_n t_n", n, T[n + 1] @ dch, dcb @ T[n], names, n, n + 1)
        _compare(rep, "N_{n+1} d^CB_n = d^CH_n N_n", n, N[n + 1] @ dcb, dch @ N[n], names, n, n + 1)
    return rep


def commutator_check(C: Coalgebra, max_deg: int) -> Report:
    """[CB, CB] = ker N, [CB, CB] inside ker eps, and ker eps a two-sided tensor ideal."""
    rep = Report(f"graded commutators on {C.name}")
    d = C.dim
    eps_mats = {m: matrix_of(group_action(antisymmetrizer(m)), d, m, m) for m in range(1, max_deg + 1)}
    ker_eps = {m: kernel(eps_mats[m]) for m in eps_mats}
    for m in range(1, max_deg + 1):
        vecs = []
        for w in words(d, m):
            for a in range(1, m):
                u, v = w[:a], w[a:]
                t = {u + v: Fraction(1)}
                sign = -1 if (a * (m - a)) % 2 else 1
                t[v + u] = t.get(v + u, 0) - sign
                vecs.append(to_vector({k: c for k, c in t.items() if c}, d))
        comm = Subspace.span(d**m, vecs)
        rep.add("[CB,CB] = ker N", m, comm == kernel(norm_matrix(d, m)))
        rep.add("[CB,CB] inside ker eps", m, ker_eps[m].contains_subspace(comm))
    for total in range(2, max_deg + 1):
        for a in range(1, total):
            b = total - a
            ok = True
            for x in ker_eps[a].basis:
                for j in range(d**b):
                    e = {j: Fraction(1)}
                    if eps_mats[total].apply(_kron(x, e, d**b)) or eps_mats[total].apply(_kron(e, x, d**a)):
                        ok = False
                        break
                if not ok:
                    break
            rep.add("ker eps_a (x) C^b and C^b (x) ker eps_a lie in ker eps", (a, b), ok)
    return rep


# ---------------------------------------------------------------- antisymmetrizer chain maps


def epsilon_chain_map_check(C: Coalgebra, max_deg: int) -> Report:
    """eps and id (x) eps are chain maps, and (id (x) eps_{n-1}) N_n = eps_n."""
    rep = Report(f"antisymmetrizer chain maps on {C.name}")
    rep.notes.append("id (x) eps is checked as (id (x) eps_n) d^CH_n = d^CE_n (id (x) eps_{n-1})")
    L, d, names = lie_of(C), C.dim, C.basis_names
    cb = lambda w: bar_differential(C, w)  # noqa: E731
    ch = lambda w: hochschild_differential(C, w)  # noqa: E731
    ce = lambda w: ce_differential(L, w)  # noqa: E731
    eps = {m: matrix_of(group_action(antisymmetrizer(m)), d, m, m) for m in range(0, max_deg + 2)}
    ide = {m: matrix_of(group_action(id_epsilon(m)), d, m, m) for m in range(1, max_deg + 2)}
    for n in range(0, max_deg + 1):
        dcb, dce = _mat(cb, d, n, n + 1), _mat(ce, d, n, n + 1)
        _compare(rep, "eps_{n+1} d^CB_n = d^CE_n eps_n", n, eps[n + 1] @ dcb, dce @ eps[n],
                 names, n, n + 1)
        if n >= 1:
            dch = _mat(ch, d, n, n + 1)
            _compare(rep, "(id (x) eps_n) d^CH_n = d^CE_n (id (x) eps_{n-1})", n,
                     ide[n + 1] @ dch, dce @ ide[n], names, n, n + 1)
            _compare(rep, "(id (x) eps_{n-1}) N_n = eps_n", n, ide[n] @ norm_matrix(d, n), eps[n],
                     names, n, n)
    return rep


# ---------------------------------------------------------------- shuffle Hopf structure


def _eps_image(d: int, m: int) -> Subspace:
    return Subspace.span(d**m, [wedge_vector(w, d) for w in increasing_words(d, m)])


def _shuffle_product(a: dict, b: dict, p: int, q: int, d: int) -> dict:
    """mu(a, b) = eps_{(p,q)} (a (x) b) on index vectors."""
    lower = shuffle_sums(p, q)[1]
    t = {}
    for i, x in a.items():
        u = _word_of(i, d, p)
        for j, y in b.items():
            t[u + _word_of(j, d, q)] = t.get(u + _word_of(j, d, q), 0) + x * y
    return to_vector(lower.apply(t), d)


def shuffle_product_check(C: Coalgebra, max_p_plus_q: int) -> Report:
    """Closure, graded commutativity and the Leibniz rule of the shuffle product on im(eps)."""
    rep = Report(f"shuffle product on CE^sym(Lie({C.name}))")
    L, d = lie_of(C), C.dim
    dce = {m: _mat(lambda w: ce_differential(L, w), d, m, m + 1) for m in range(1, max_p_plus_q + 1)}
    images = {m: _eps_image(d, m) for m in range(1, max_p_plus_q + 2)}
    basis = {m: [wedge_vector(w, d) for w in increasing_words(d, m)] for m in range(1, max_p_plus_q + 1)}
    for total in range(2, max_p_plus_q + 1):
        for p in range(1, total):
            q = total - p
            upper, lower = shuffle_sums(p, q)
            block = antisymmetrizer(p).tensor(antisymmetrizer(q))
            rep.add("eps_{p+q} = (eps_p (x) eps_q) eps^{(p,q)}", (p, q),
                    block * upper == antisymmetrizer(total))
            closed = commute = leibniz = True
            for a in basis[p]:
                for b in basis[q]:
                    ab = _shuffle_product(a, b, p, q, d)
                    closed &= images[total].contains(ab)
                    ba = _shuffle_product(b, a, q, p, d)
                    sign = -1 if (p * q) % 2 else 1
                    commute &= ba == {k: sign * v for k, v in ab.items()}
                    lhs = dce[total].apply(ab)
                    rhs = _shuffle_product(dce[p].apply(a), b, p + 1, q, d)
                    for k, v in _shuffle_product(a, dce[q].apply(b), p, q + 1, d).items():
                        rhs[k] = rhs.get(k, 0) + (-1) ** p * v
                    leibniz &= lhs == {k: v for k, v in rhs.items() if v}
            rep.add("mu(im eps_p, im eps_q) inside im eps_{p+q}", (p, q), closed)
            rep.add("mu(b, a) = (-1)^{pq} mu(a, b)", (p, q), commute)
            rep.add("d mu(a, b) = mu(da, b) + (-1)^p mu(a, db)", (p, q), leibniz)
    return rep


def deconcat_coproduct_check(C: Coalgebra, max_deg: int) -> Report:
    """Deconcatenation maps im(eps_m) into im(eps_p) (x) im(eps_q), graded cocommutatively."""
    rep = Report(f"deconcatenation on CE^sym(Lie({C.name}))")
    d = C.dim
    for m in range(1, max_deg + 1):
        basis = [wedge_vector(w, d) for w in increasing_words(d, m)]
        for p in range(1, m):
            q = m - p
            target = Subspace.span(d**m, [_kron(x, y, d**q) for x in (wedge_vector(u, d) for u in increasing_words(d, p))
                                          for y in (wedge_vector(v, d) for v in increasing_words(d, q))])
            rep.add("Delta_{p,q}(im eps) inside im eps_p (x) im eps_q", (p, q),
                    all(target.contains(a) for a in basis))
            sign = -1 if (p * q) % 2 else 1
            ok = True
            for a in basis:
                swapped = {}
                for i, c in a.items():
                    w = _word_of(i, d, m)
                    swapped[word_index(w[p:] + w[:p], d)] = c
                ok &= swapped == {k: sign * v for k, v in a.items()}
            rep.add("swap Delta_{p,q} = (-1)^{pq} Delta_{q,p}", (p, q), ok)
    return rep


# ---------------------------------------------------------------- complexes


def differential_squares_check(C: Coalgebra, max_deg: int, kinds=COMPLEX_KINDS) -> Report:
    """d_{m+1} d_m = 0 for each requested complex, built up to max_deg."""
    rep = Report(f"d^2 = 0 on complexes of {C.name}")
    for kind in kinds:
        try:
            X = build_complex(C, kind, max_deg)
        except (DifferentialError, RestrictionError) as exc:
            rep.add(f"{kind}: construction", None, False, str(exc))
            continue
        for m in range(X.lo, X.hi - 1):
            rep.add(f"{kind}: d_{{m+1}} d_m = 0", m, (X.d(m + 1) @ X.d(m)).is_zero())
    return rep


def sym_ce_cross_check(C: Coalgebra, max_deg: int) -> Report:
    """The wedge-basis differential agrees with d^CE applied to explicit eps-images."""
    rep = Report(f"CE^sym wedge basis vs explicit im(eps) on {C.name}")
    L, d = lie_of(C), C.dim
    top = min(max_deg, 4)
    X = build_sym_ce(C, top)
    for m in range(0, top + 1):
        eps = matrix_of(group_action(antisymmetrizer(m)), d, m, m)
        dim = image(eps).dim
        rep.add("dim im eps_m = binomial(dim C, m)", m, dim == X.dim(m), f"{dim} vs {X.dim(m)}")
    for m in range(0, top):
        dce = _mat(lambda w: ce_differential(L, w), d, m, m + 1)
        ok = True
        for j, w in enumerate(X.bases[m]):
            lhs = dce.apply(wedge_vector(w, d))
            rhs: dict = {}
            for r, c in X.d(m).columns[j].items():
                for k, v in wedge_vector(X.bases[m + 1][r], d).items():
                    rhs[k] = rhs.get(k, 0) + c * v
            ok &= lhs == {k: v for k, v in rhs.items() if v}
        rep.add("d^CE eps(w) = sum of wedge coefficients times eps(u)", m, ok)
    return rep


def reduced_ce_check(L, max_deg: int) -> Report:
    """CE^red is a subcomplex closed under tensor product, with the graded Leibniz rule."""
    L = _as_leibniz(L)
    rep = Report(f"CE^red on {L.name}")
    d = L.dim
    try:
        X = build_reduced_ce(L, max_deg)
    except RestrictionError as exc:
        rep.add("d^CE preserves ker rho", None, False, str(exc))
        return rep
    rep.add("d^CE preserves ker rho", None, True)
    dce = {m: _mat(lambda w: ce_differential(L, w), d, m, m + 1) for m in range(0, max_deg + 1)}
    for total in range(2, max_deg + 1):
        for a in range(1, total):
            b = total - a
            closed = leibniz = True
            for x in X.bases[a].basis:
                for y in X.bases[b].basis:
                    xy = _kron(x, y, d**b)
                    closed &= X.bases[total].contains(xy)
                    lhs = dce[total].apply(xy)
                    rhs = _kron(dce[a].apply(x), y, d**b)
                    for k, v in _kron(x, dce[b].apply(y), d**(b + 1)).items():
                        rhs[k] = rhs.get(k, 0) + (-1) ** a * v
                    leibniz &= lhs == {k: v for k, v in rhs.items() if v}
            rep.add("ker rho_a (x) ker rho_b inside ker rho_{a+b}", (a, b), closed)
            rep.add("d(x (x) y) = dx (x) y + (-1)^a x (x) dy", (a, b), leibniz)
    return rep


def basis_change_check(C: Coalgebra, max_deg: int, seed: int = 0, kinds=COMPLEX_KINDS) -> Report:
    """Homology dimensions survive conjugation by random invertible matrices."""
    rep = Report(f"basis-change invariance on {C.name} (seed {seed})")
    for i, kind in enumerate(kinds):
        X = build_complex(C, kind, max_deg)
        h, h2 = homology(X), homology(change_basis(X, seed + i))
        rep.add(f"{kind}: homology unchanged by a random basis", None, h == h2,
                f"{h.values} vs {h2.values}")
    return rep


__all__ = [
    "axioms_check", "comodule_check", "bar_homotopy_check", "ce_homotopy_check",
    "differential_comodule_check", "representation_commute_check", "bar_dga_check",
    "ce_identity_check", "perm_identities_check", "tn_exactness_check", "commutator_check",
    "epsilon_chain_map_check", "shuffle_product_check", "deconcat_coproduct_check",
    "differential_squares_check", "sym_ce_cross_check", "reduced_ce_check", "basis_change_check",
]
