"""The resolution of the base field over a presented graded algebra.

Modules are C_n (x) A with C_n the free span of the n-chains; elements are
dicts mapping (chain index, normal word) to a rational coefficient.  The
differential and its splitting are mutually recursive:

    d_0(x (x) 1)  = 1 (x) x
    d_n(gt (x) 1) = g (x) t - i_{n-1}(d_{n-1}(g (x) t))
    i_0(1 (x) w)  = w[0] (x) w[1:]
    i_n(u)        = alpha g (x) c + i_n(u - alpha d_n(g (x) c))

where in the last line (f, s) is the leading pair of u under the order
"f (x) s < g (x) t iff fs < gt", and fs = (word of an n-chain g) . (normal
word c) -- that factorization exists and is unique for kernel leading words,
and both facts are asserted rather than assumed.  Values of d on free
generators are memoized; d on c (x) a follows by right multiplication and
normal-form reduction.

Everything downstream lives here too: the d.d = 0 and splitting checks,
graded exactness ranks, the Euler identity, tensoring with the base field,
Tor dimensions, and the minimality test.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AlgebraError, BoundError
from .chains import enumerate_chains
from .linalg import sparse_rank
from .noncommutative import (
    count_normal_words,
    find_subword,
    nc_buchberger,
    nc_normal_form,
    normal_words,
)


class AnickResolution:
    """Differentials d_n for 0 <= n <= max_level on the chain generators.

    ``check_splitting`` verifies d(i(u)) = u at every internal splitting;
    failures are collected, not raised, so a verification report can show
    them.
    """

    def __init__(self, presentation, gb, chain_set, max_level, max_degree,
                 check_splitting=True):
        presentation.require_graded()
        if gb.presentation is not presentation and gb.presentation != presentation:
            raise AlgebraError("basis belongs to a different presentation")
        if max_degree > gb.complete_to_degree:
            raise BoundError(
                f"resolution to degree {max_degree} needs a basis certified "
                f"that far; have {gb.complete_to_degree}")
        if chain_set.max_level < max_level or chain_set.max_degree < max_degree:
            raise BoundError(
                f"chain set covers level {chain_set.max_level}, degree "
                f"{chain_set.max_degree}; need level {max_level}, degree {max_degree}")
        self.presentation = presentation
        self.gb = gb
        self.chain_set = chain_set
        self.max_level = max_level
        self.max_degree = max_degree
        pres = presentation
        self.levels = {}
        for n in range(-1, max_level + 1):
            self.levels[n] = tuple(
                c for c in chain_set.levels.get(n, ())
                if pres.monomial_degree(c.word) <= max_degree)
        self._word_index = {
            n: {c.word: k for k, c in enumerate(chains)}
            for n, chains in self.levels.items()}
        self._gen_chain = {c.word[0]: k for k, c in enumerate(self.levels[0])}
        self._basis = list(gb.basis)
        self._lead = [g.leading[0] for g in self._basis]
        self._nf_cache = {}
        self._normal_cache = {}
        self._check_splitting = check_splitting
        self.split_checks = 0
        self.split_failures = []
        self.diff = {0: [{(0, c.word): Fraction(1)} for c in self.levels[0]]}
        for n in range(1, max_level + 1):
            rows = []
            for c in self.levels[n]:
                rows.append(self._build_d(n, c))
            self.diff[n] = rows

    # -- plumbing ----------------------------------------------------------

    def _nf_word(self, word):
        """Normal form of a single word as a terms tuple."""
        cached = self._nf_cache.get(word)
        if cached is None:
            pres = self.presentation
            if pres.monomial_degree(word) > self.gb.complete_to_degree:
                raise BoundError(
                    f"reduction of degree {pres.monomial_degree(word)} exceeds "
                    f"the certified degree {self.gb.complete_to_degree}")
            cached = nc_normal_form(
                pres, pres.monomial_poly(word), self._basis).terms
            self._nf_cache[word] = cached
        return cached

    def _is_normal(self, word):
        cached = self._normal_cache.get(word)
        if cached is None:
            cached = not any(find_subword(word, lt) for lt in self._lead)
            self._normal_cache[word] = cached
        return cached

    def _pair_key(self, n, key):
        ci, word = key
        return self.presentation.term_key(self.levels[n][ci].word + word)

    def chain_degree(self, n, ci):
        return self.presentation.monomial_degree(self.levels[n][ci].word)

    def element_degree(self, n, elem):
        pres = self.presentation
        degs = {self.chain_degree(n, ci) + pres.monomial_degree(w)
                for ci, w in elem}
        if len(degs) > 1:
            raise AlgebraError("inhomogeneous element")
        return degs.pop() if degs else None

    # -- the maps ----------------------------------------------------------

    def apply_d(self, n, elem):
        """d_n on an arbitrary element of C_n (x) A (n >= 0)."""
        out = {}
        for (ci, w), coeff in elem.items():
            if not coeff:
                continue
            for (cj, u), val in self.diff[n][ci].items():
                for m, beta in self._nf_word(u + w):
                    key = (cj, m)
                    acc = out.get(key, Fraction(0)) + coeff * val * beta
                    if acc:
                        out[key] = acc
                    else:
                        out.pop(key, None)
        return out

    def _i0(self, elem):
        """Splitting at the bottom: 1 (x) w -> w[0] (x) w[1:]."""
        out = {}
        for (_, w), coeff in elem.items():
            if not coeff:
                continue
            if not w:
                raise AlgebraError(
                    "splitting a level -1 element with a constant term: "
                    "not in the augmentation kernel")
            key = (self._gen_chain[w[0]], w[1:])
            acc = out.get(key, Fraction(0)) + coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return out

    def _isplit(self, m, elem):
        """Splitting i_m for m >= 1: level m-1 kernel elements to level m."""
        pres = self.presentation
        work = {k: v for k, v in elem.items() if v}
        out = {}
        last_key = None
        while work:
            lead = max(work, key=lambda k: self._pair_key(m - 1, k))
            lead_key = self._pair_key(m - 1, lead)
            ties = [k for k in work
                    if k != lead and self._pair_key(m - 1, k) == lead_key]
            if ties:
                raise AlgebraError("leading pair of a kernel element is ambiguous")
            if last_key is not None and lead_key >= last_key:
                raise AlgebraError("splitting recursion failed to descend")
            last_key = lead_key
            ci, s = lead
            alpha = work[lead]
            w = self.levels[m - 1][ci].word + s
            candidates = []
            for gi, g in enumerate(self.levels[m]):
                k = len(g.word)
                if len(w) >= k and w[:k] == g.word and self._is_normal(w[k:]):
                    candidates.append((gi, w[k:]))
            if not candidates:
                raise AlgebraError(
                    f"kernel leading word {pres.format_monomial(w)} admits no "
                    f"(chain).(normal word) factorization at level {m}")
            if len(candidates) > 1:
                raise AlgebraError(
                    f"kernel leading word {pres.format_monomial(w)} admits "
                    f"{len(candidates)} chain factorizations at level {m}")
            gi, cw = candidates[0]
            if (gi, cw) in out:
                raise AlgebraError("splitting revisited a chain generator")
            out[(gi, cw)] = alpha
            for k, v in self.apply_d(m, {(gi, cw): Fraction(1)}).items():
                acc = work.get(k, Fraction(0)) - alpha * v
                if acc:
                    work[k] = acc
                else:
                    work.pop(k, None)
        return out

    def split(self, m, elem):
        """i_m with the optional d(i(u)) = u audit."""
        result = self._i0(elem) if m == 0 else self._isplit(m, elem)
        if self._check_splitting:
            back = self.apply_d(m, result)
            self.split_checks += 1
            if back != {k: v for k, v in elem.items() if v}:
                self.split_failures.append((m, elem, back))
        return result

    def _build_d(self, n, chain):
        pi = self._word_index[n - 1][chain.parent.word]
        head = {(pi, chain.tail): Fraction(1)}
        v = self.apply_d(n - 1, head)
        result = dict(head)
        if v:
            correction = self.split(n - 1, v)
            for k, val in correction.items():
                acc = result.get(k, Fraction(0)) - val
                if acc:
                    result[k] = acc
                else:
                    result.pop(k, None)
        self.element_degree(n - 1, result)
        return result


def build_resolution(presentation, max_level, max_degree, gb=None,
                     chain_set=None, check_splitting=True):
    """Convenience constructor running completion and chain enumeration."""
    if gb is None:
        gb = nc_buchberger(presentation, max_degree=max_degree)
    if chain_set is None:
        chain_set = enumerate_chains(
            presentation, [g.leading[0] for g in gb.basis],
            max_level, max_degree)
    return AnickResolution(presentation, gb, chain_set, max_level, max_degree,
                           check_splitting=check_splitting)


# -- verification ------------------------------------------------------------


def _hilbert_counts(res, max_degree):
    return count_normal_words(
        res.presentation, [g.leading[0] for g in res.gb.basis], max_degree)


def module_dimension(res, n, degree, h):
    """dim of the degree-d part of C_n (x) A, from the algebra's counts."""
    if n == -1:
        return h[degree] if degree < len(h) else 0
    total = 0
    for ci in range(len(res.levels[n])):
        dc = res.chain_degree(n, ci)
        if dc <= degree:
            total += h[degree - dc]
    return total


def euler_horizon(res):
    """Largest degree where levels beyond max_level provably cannot reach."""
    pres = res.presentation
    horizon = res.max_degree
    for n in range(0, res.max_level + 1):
        if not res.levels[n]:
            return horizon
    last = res.levels[res.max_level]
    return min(horizon, min(pres.monomial_degree(c.word) for c in last))


def _block_columns(res, n, degree, words_by_degree):
    """Columns of (d_n)_degree as sparse vectors, one per basis pair."""
    cols = []
    labels = []
    for ci in range(len(res.levels[n])):
        dc = res.chain_degree(n, ci)
        if dc > degree:
            continue
        for w in words_by_degree[degree - dc]:
            labels.append((ci, w))
            cols.append(res.apply_d(n, {(ci, w): Fraction(1)}))
    return labels, cols


def block_rank_degree(res, budget):
    """Largest degree whose cumulative column count stays within budget."""
    h = _hilbert_counts(res, res.max_degree)
    total = 0
    chosen = -1
    for d in range(res.max_degree + 1):
        cost = sum(module_dimension(res, n, d, h)
                   for n in range(0, res.max_level + 1))
        if total + cost > budget and chosen >= 0:
            break
        total += cost
        chosen = d
    return max(chosen, 0)


def verify_resolution(res, rank_budget=4000, rank_degree=None):
    """Full audit: d.d = 0, splitting, Euler identity, graded exactness.

    Exactness ranks cost memory quadratic in the graded dimensions, so their
    degree is capped: explicitly by rank_degree, else by the largest degree
    whose cumulative block columns fit in rank_budget.  The other three
    checks always run to the full built degree.
    """
    report = {"ok": True}

    failures = []
    checked = 0
    for n in range(1, res.max_level + 1):
        for ci in range(len(res.levels[n])):
            checked += 1
            if res.apply_d(n - 1, res.diff[n][ci]):
                failures.append((n, ci))
    report["dd_zero"] = {"checked": checked, "failures": failures,
                         "ok": not failures}

    report["splitting"] = {"checked": res.split_checks,
                           "failures": res.split_failures[:4],
                           "ok": not res.split_failures}

    horizon = euler_horizon(res)
    h = _hilbert_counts(res, horizon)
    euler_failures = []
    for d in range(horizon + 1):
        total = 0
        for n in range(-1, res.max_level + 1):
            sign = -1 if n % 2 == 0 else 1
            total += sign * module_dimension(res, n, d, h)
        if total != (1 if d == 0 else 0):
            euler_failures.append(d)
    report["euler"] = {"degree": horizon, "failures": euler_failures,
                       "ok": not euler_failures}

    if rank_degree is None:
        rank_degree = block_rank_degree(res, rank_budget)
    rank_degree = min(rank_degree, res.max_degree)
    words = normal_words(res.gb, rank_degree)
    hh = _hilbert_counts(res, rank_degree)
    ranks = {}
    for n in range(0, res.max_level + 1):
        ranks[n] = {}
        for d in range(rank_degree + 1):
            _, cols = _block_columns(res, n, d, words)
            ranks[n][d] = sparse_rank(cols)
    blocks = []
    exact_ok = True
    for n in range(-1, res.max_level):
        for d in range(rank_degree + 1):
            dim = module_dimension(res, n, d, hh)
            rank_out = (1 if d == 0 else 0) if n == -1 else ranks[n][d]
            rank_in = ranks[n + 1][d]
            ok = rank_out + rank_in == dim
            exact_ok = exact_ok and ok
            blocks.append({"level": n, "degree": d, "dim": dim,
                           "rank_out": rank_out, "rank_in": rank_in,
                           "ok": ok})
    report["exactness"] = {"degree": rank_degree, "blocks": blocks,
                           "ok": exact_ok}
    report["ok"] = all(report[k]["ok"] for k in
                       ("dd_zero", "splitting", "euler", "exactness"))
    return report


# -- Tor, minimality ----------------------------------------------------------


def tensor_with_k(res):
    """Scalar parts of the differentials: matrices C_n -> C_{n-1}.

    Entry keys are (row index at level n-1, column index at level n).
    """
    out = {}
    for n in range(0, res.max_level + 1):
        m = {}
        for ci in range(len(res.levels[n])):
            for (cj, w), coeff in res.diff[n][ci].items():
                if not w:
                    m[(cj, ci)] = coeff
        out[n] = m
    return out


def is_minimal(res):
    """Whether all tensored differentials vanish; witness = (level, row
    chain word, column chain word) of the first nonzero entry."""
    tensored = tensor_with_k(res)
    for n in range(0, res.max_level + 1):
        entries = tensored[n]
        if entries:
            cj, ci = min(entries, key=lambda rc: (rc[1], rc[0]))
            return False, (n, res.levels[n - 1][cj].word, res.levels[n][ci].word)
    return True, None


def tor_dimensions(res):
    """Homology of the tensored complex, keyed by chain level then degree.

    Row i is ker(M_i)/im(M_{i+1}) for the scalar matrices M; when the
    resolution is minimal this is just the chain count table.  Row i needs
    M_{i+1}, so the table stops one level below the built resolution.
    """
    pres = res.presentation
    tensored = tensor_with_k(res)

    def level_degrees(n):
        out = {}
        for c in res.levels[n]:
            d = pres.monomial_degree(c.word)
            out[d] = out.get(d, 0) + 1
        return out

    def graded_rank(n):
        if n < 0 or n > res.max_level:
            return {}
        cols = {}
        for (cj, ci), coeff in tensored[n].items():
            d = res.chain_degree(n, ci)
            cols.setdefault(d, {}).setdefault(ci, {})[cj] = coeff
        return {d: sparse_rank(by_col.values()) for d, by_col in cols.items()}

    table = {}
    for i in range(-1, res.max_level):
        counts = level_degrees(i)
        rank_i = graded_rank(i)
        rank_next = graded_rank(i + 1)
        row = {}
        for d in sorted(set(counts) | set(rank_next)):
            dim = counts.get(d, 0) - rank_i.get(d, 0) - rank_next.get(d, 0)
            if dim < 0:
                raise AlgebraError("tensored complex ranks exceed dimensions")
            if dim:
                row[d] = dim
        table[i] = row
    return table
