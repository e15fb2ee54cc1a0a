"""The color-word representations on (C^N)^(x)n: generator actions, charge
blocks, the symmetrizing operator on the first N strands, harmonic
submodules and localization.

A basis vector is a word of colors 1..N.  The braid generator multiplies
by x when the two touched letters agree and otherwise swaps them; the
symmetry generator fixes equal-letter words and swaps with a sign.  Both
preserve the color content of the word, so every computation happens
inside a fixed-content charge block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, RowSpan, WeightedPerm
from .rings import LQ, QQ, LaurentPoly
from .symmetric import (hook_dim, multinomial, partitions, perm_words,
                        sign, young_symmetrizer_coeffs)


@dataclass(frozen=True)
class TauRep:
    """Parameters of the diagonal tensor representation.

    form "x": braid weight x on equal colors over the rationals;
    form "q": weights q and 1/q over the Laurent ring (x = q^2 rescale).
    """
    N: int
    x: object = Fraction(2)
    form: str = "x"

    def __post_init__(self):
        assert self.form in ("x", "q")
        if self.form == "x":
            object.__setattr__(self, "x", Fraction(self.x))

    @property
    def ring(self):
        return QQ if self.form == "x" else LQ

    def weights(self):
        """(equal-color weight, swap weight) for the braid generator."""
        if self.form == "x":
            return self.x, Fraction(1)
        q = LaurentPoly.gen()
        return q, q.inverse()


def sigma_action(rep: TauRep, j: int, w: tuple) -> list:
    """sigma_j applied to a word; a list of (word, coefficient) pairs."""
    eq_w, sw_w = rep.weights()
    if w[j - 1] == w[j]:
        return [(w, eq_w)]
    return [(_swap(w, j), sw_w)]


def s_action(rep: TauRep, j: int, w: tuple) -> list:
    one = rep.ring.one
    if w[j - 1] == w[j]:
        return [(w, one)]
    return [(_swap(w, j), -one)]


def u_action(rep: TauRep, j: int, w: tuple) -> list:
    """u = 1 - s: kills equal-letter words, symmetrizes the others."""
    one = rep.ring.one
    if w[j - 1] == w[j]:
        return []
    return [(w, one), (_swap(w, j), one)]


def _swap(w, j):
    lst = list(w)
    lst[j - 1], lst[j] = lst[j], lst[j - 1]
    return tuple(lst)


def right_color_action(w: tuple, pi: tuple) -> tuple:
    """Relabel every letter by the color permutation pi (1-based images)."""
    return tuple(pi[c - 1] for c in w)


# ---------------------------------------------------------------------------
# Charge blocks.

class ChargeBlock:
    """All words with one fixed color content, in lexicographic order."""

    def __init__(self, N, n, comp):
        assert len(comp) == N and sum(comp) == n
        self.N = N
        self.n = n
        self.comp = tuple(comp)
        self.lam = tuple(sorted((c for c in comp if c), reverse=True))
        self.words = _words_with_content(N, comp)
        self.index = {w: i for i, w in enumerate(self.words)}

    @property
    def dim(self):
        return len(self.words)

    def is_partition_block(self):
        return self.comp == tuple(sorted(self.comp, reverse=True))

    def sigma_op(self, j, rep: TauRep) -> WeightedPerm:
        eq_w, sw_w = rep.weights()
        tgt, wts = [], []
        for w in self.words:
            if w[j - 1] == w[j]:
                tgt.append(self.index[w])
                wts.append(eq_w)
            else:
                tgt.append(self.index[_swap(w, j)])
                wts.append(sw_w)
        return WeightedPerm(rep.ring, tgt, wts)

    def s_op(self, j, rep: TauRep) -> WeightedPerm:
        one = rep.ring.one
        tgt, wts = [], []
        for w in self.words:
            if w[j - 1] == w[j]:
                tgt.append(self.index[w])
                wts.append(one)
            else:
                tgt.append(self.index[_swap(w, j)])
                wts.append(-one)
        return WeightedPerm(rep.ring, tgt, wts)

    def u_matrix(self, j, rep: TauRep) -> Matrix:
        ring = rep.ring
        m = Matrix.zeros(ring, self.dim, self.dim)
        for col, w in enumerate(self.words):
            for tw, cf in u_action(rep, j, w):
                m.rows[self.index[tw]][col] = m.rows[self.index[tw]][col] + cf
        return m

    def right_op(self, pi: tuple) -> WeightedPerm:
        """Operator of the color relabeling; needs pi to preserve the content."""
        tgt = [self.index[right_color_action(w, pi)] for w in self.words]
        return WeightedPerm(QQ, tgt, [QQ.one] * self.dim)

    def generator_ops(self, rep: TauRep) -> dict:
        ops = {}
        for j in range(1, self.n):
            ops[("sigma", j)] = self.sigma_op(j, rep)
            ops[("s", j)] = self.s_op(j, rep)
        return ops


def _words_with_content(N, comp):
    words = []

    def rec(remaining, prefix):
        if not any(remaining):
            words.append(tuple(prefix))
            return
        for c in range(N):
            if remaining[c]:
                remaining[c] -= 1
                prefix.append(c + 1)
                rec(remaining, prefix)
                prefix.pop()
                remaining[c] += 1

    rec(list(comp), [])
    return words


def charge_blocks(N, n):
    """Blocks for every composition, plus the partition index with
    multiplicities; sum over the index of m_lam * dim equals N^n."""
    blocks = {}
    mult = {}
    for comp in _compositions(n, N):
        blocks[comp] = ChargeBlock(N, n, comp)
        lam = tuple(sorted((c for c in comp if c), reverse=True))
        mult[lam] = mult.get(lam, 0) + 1
    index = sorted(mult.items(), reverse=True)
    return blocks, index


def partition_block(N, n, lam) -> ChargeBlock:
    comp = tuple(lam) + (0,) * (N - len(lam))
    return ChargeBlock(N, n, comp)


def _compositions(n, N):
    if N == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, N - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Full tensor-power images (small n only; blocks are the scalable route).

def full_images(rep: TauRep, n: int) -> dict:
    """Images of all generators on the full N^n-dimensional tensor power."""
    N = rep.N
    d = N ** n
    assert d <= 10 ** 4, "use charge blocks beyond 10^4 dimensions"
    words = [tuple(_digits(i, N, n)) for i in range(d)]
    index = {w: i for i, w in enumerate(words)}
    eq_w, sw_w = rep.weights()
    one = rep.ring.one
    images = {}
    for j in range(1, n):
        tgt_s, wts_s, tgt_p, wts_p = [], [], [], []
        for w in words:
            if w[j - 1] == w[j]:
                tgt_s.append(index[w])
                wts_s.append(eq_w)
                tgt_p.append(index[w])
                wts_p.append(one)
            else:
                k = index[_swap(w, j)]
                tgt_s.append(k)
                wts_s.append(sw_w)
                tgt_p.append(k)
                wts_p.append(-one)
        images[("sigma", j)] = WeightedPerm(rep.ring, tgt_s, wts_s)
        images[("s", j)] = WeightedPerm(rep.ring, tgt_p, wts_p)
    return images


def _digits(i, N, n):
    out = []
    for _ in range(n):
        out.append(i % N + 1)
        i //= N
    return reversed(out)


# ---------------------------------------------------------------------------
# The symmetrizer on the first N strands.

def f_operator(N: int, block: ChargeBlock, rep: TauRep = None) -> Matrix:
    """Signed sum over S_N of the symmetry-generator actions on the first
    N strands; kills words whose prefix is not a permutation of 1..N and
    symmetrizes the rest.  Kept unnormalized (f^2 = N! f)."""
    assert block.n >= N, "need at least N strands"
    rep = rep or TauRep(block.N, Fraction(1))
    ring = rep.ring
    ident = WeightedPerm.identity(ring, block.dim)
    s_ops = {j: block.s_op(j, rep) for j in range(1, N)}
    total = Matrix.zeros(ring, block.dim, block.dim)
    for perm, word in perm_words(N).items():
        op = ident
        for letter in word:
            op = op * s_ops[letter]
        sgn = sign(perm)
        for j in range(block.dim):
            total.rows[op.tgt[j]][j] = total.rows[op.tgt[j]][j] + (
                op.wts[j] if sgn > 0 else -op.wts[j])
    return total


def f_operator_blocks(N: int, n: int) -> dict:
    """The symmetrizer on every partition block at (N, n), keyed by content."""
    out = {}
    for comp in _compositions(n, N):
        if comp == tuple(sorted(comp, reverse=True)):
            out[comp] = f_operator(N, ChargeBlock(N, n, comp))
    return out


def symmetrized_seed_vector(block: ChargeBlock, rep: TauRep) -> list:
    """Sum over all of S_n of the signed symmetry action applied to the
    lexicographically first basis word (the classical one-dimensional
    seed; spans an invariant line only at the degenerate parameter)."""
    ring = rep.ring
    s_ops = {j: block.s_op(j, rep) for j in range(1, block.n)}
    vec = [ring.zero] * block.dim
    ident = WeightedPerm.identity(ring, block.dim)
    for perm, word in perm_words(block.n).items():
        op = ident
        for letter in word:
            op = op * s_ops[letter]
        vec[op.tgt[0]] = vec[op.tgt[0]] + op.wts[0]
    return vec


# ---------------------------------------------------------------------------
# Harmonic labels and projectors.

@dataclass(frozen=True)
class HarmonicLabel:
    """lam plus one partition per distinct nonzero row length of lam,
    components ordered by strictly decreasing row length."""
    lam: tuple
    mu: tuple   # tuple of partitions

    def delta_dim(self) -> int:
        out = 1
        for m in self.mu:
            out *= hook_dim(m)
        return out

    def to_json(self):
        return {"lambda": list(self.lam), "mu": [list(m) for m in self.mu]}

    def short(self):
        mus = ",".join("(%s)" % ",".join(map(str, m)) for m in self.mu)
        return "Y[%s]^(%s)" % (",".join(map(str, self.lam)), mus)


def multiplicity_classes(lam) -> list:
    """[(row length, [colors with that multiplicity])] by decreasing length.

    Colors of multiplicity zero are excluded: permuting unused colors acts
    as the identity on the block, so their idempotent component is forced
    trivial.
    """
    classes = {}
    for color, length in enumerate(lam, start=1):
        if length:
            classes.setdefault(length, []).append(color)
    return [(length, classes[length]) for length in sorted(classes, reverse=True)]


def harmonic_labels(lam) -> list:
    classes = multiplicity_classes(lam)
    label_sets = [partitions(len(colors)) for _, colors in classes]
    return [HarmonicLabel(tuple(lam), tuple(mu)) for mu in itertools.product(*label_sets)]


def harmonic_projector(block: ChargeBlock, label: HarmonicLabel) -> Matrix:
    """Idempotent on the block projecting onto one copy of the label.

    Product over the multiplicity classes of a Young-symmetrizer primitive
    idempotent acting by color relabeling; commutes with every generator
    action.
    """
    assert block.is_partition_block(), "harmonic decomposition needs the sorted block"
    classes = multiplicity_classes(block.lam)
    assert len(classes) == len(label.mu)
    per_class = []
    for (_, colors), mu in zip(classes, label.mu):
        coeffs = young_symmetrizer_coeffs(mu)
        per_class.append((colors, coeffs))
    total = Matrix.zeros(QQ, block.dim, block.dim)
    for combo in itertools.product(*(c.items() for _, c in per_class)):
        pi = list(range(1, block.N + 1))
        coeff = Fraction(1)
        for (colors, _), (perm, c) in zip(per_class, combo):
            coeff *= c
            for a, b in zip(colors, (colors[perm[i]] for i in range(len(colors)))):
                pi[a - 1] = b
        op = block.right_op(tuple(pi))
        for j in range(block.dim):
            total.rows[op.tgt[j]][j] = total.rows[op.tgt[j]][j] + coeff
    return total


class ModuleSpec:
    """A charge block together with a spanning basis (and, when it comes
    from an idempotent, the projector).  Generator actions restricted to
    the basis are computed on demand."""

    def __init__(self, block: ChargeBlock, rep: TauRep, label, projector, basis_rows):
        self.block = block
        self.rep = rep
        self.label = label          # HarmonicLabel, or None for the full block
        self.projector = projector  # Matrix or None (identity)
        self.span = RowSpan(block.dim)
        for row in basis_rows:
            self.span.insert(row)

    @property
    def dim(self):
        return self.span.dim

    def label_json(self):
        if self.label is not None:
            return self.label.to_json()
        return {"lambda": list(self.block.lam), "mu": None}

    def coords(self, vec):
        """Coordinates of a member vector in the reduced basis."""
        cs = [vec[c] for c, _ in sorted(self.span.pivot_of.items())]
        order = [ri for _, ri in sorted(self.span.pivot_of.items())]
        out = [None] * self.span.dim
        for coeff, ri in zip(cs, order):
            out[ri] = coeff
        residual = list(vec)
        for coeff, ri in zip(cs, order):
            row = self.span.rows[ri]
            residual = [a - coeff * b for a, b in zip(residual, row)]
        assert all(v == 0 for v in residual), "vector is outside the module"
        return out

    def restricted_ops(self) -> list:
        """Matrices of all generators in the module basis."""
        out = []
        for j in range(1, self.block.n):
            for kind in ("sigma", "s"):
                op = (self.block.sigma_op(j, self.rep) if kind == "sigma"
                      else self.block.s_op(j, self.rep))
                cols = [self.coords(_apply_wp(op, row)) for row in self.span.rows]
                out.append(Matrix(QQ, [[cols[c][r] for c in range(self.dim)]
                                       for r in range(self.dim)]))
        return out

    def contains(self, vec) -> bool:
        return self.span.contains(vec)


def _apply_wp(op: WeightedPerm, vec):
    out = [op.ring.zero] * op.n
    for j, v in enumerate(vec):
        if v:
            out[op.tgt[j]] = out[op.tgt[j]] + op.wts[j] * v
    return out


def harmonic_decompose(block: ChargeBlock, rep: TauRep = None) -> list:
    """One ModuleSpec per primary label; dimensions satisfy the weighted
    sum identity sum(dim Delta * dim piece) = dim block."""
    rep = rep or TauRep(block.N)
    out = []
    for label in harmonic_labels(block.lam):
        if all(len(colors) == 1 for _, colors in multiplicity_classes(block.lam)):
            ident_rows = [[QQ.one if i == j else QQ.zero for j in range(block.dim)]
                          for i in range(block.dim)]
            out.append(ModuleSpec(block, rep, label, None, ident_rows))
            continue
        proj = harmonic_projector(block, label)
        cols = [[proj.rows[i][j] for i in range(block.dim)] for j in range(block.dim)]
        out.append(ModuleSpec(block, rep, label, proj, cols))
    total = sum(m.label.delta_dim() * m.dim for m in out)
    assert total == block.dim, "idempotent decomposition does not fill the block"
    return out


def young_module(block: ChargeBlock, rep: TauRep = None) -> ModuleSpec:
    rep = rep or TauRep(block.N)
    rows = [[QQ.one if i == j else QQ.zero for j in range(block.dim)]
            for i in range(block.dim)]
    return ModuleSpec(block, rep, None, None, rows)


# ---------------------------------------------------------------------------
# Localization along the symmetrizer.

def localize(f_mat: Matrix, mspec: ModuleSpec):
    """Image of the module under the first-strand symmetrizer, rewritten
    as a module for the residual strands (generators reindexed down by N).

    Returns (localized ModuleSpec at n - N, ok) where ok records that the
    residual generator actions agree with the level n - N block actions.
    """
    block = mspec.block
    N = block.N
    n = block.n
    assert n > N, "nothing left after localizing"
    prefix = tuple(range(1, N + 1))
    images = [f_mat.mul_vec(row) for row in mspec.span.rows]
    if all(all(v == 0 for v in img) for img in images):
        return None, True  # the module is annihilated
    comp = tuple(v - 1 for v in block.comp)
    assert all(v >= 0 for v in comp), "nonzero image forces full depth"
    target = ChargeBlock(N, n - N, comp)
    span = RowSpan(target.dim)
    for img in images:
        span.insert(_project_prefix(img, block, target, prefix))
    localized = ModuleSpec(target, mspec.rep, None, None, span.rows)
    ok = _residual_action_ok(f_mat, mspec, localized, prefix)
    return localized, ok


def _residual_action_ok(f_mat, mspec, localized, prefix):
    block = mspec.block
    target = localized.block
    N = block.N
    for j in range(1, target.n):
        for kind in ("sigma", "s"):
            src = (block.sigma_op(j + N, mspec.rep) if kind == "sigma"
                   else block.s_op(j + N, mspec.rep))
            dst = (target.sigma_op(j, mspec.rep) if kind == "sigma"
                   else target.s_op(j, mspec.rep))
            for row in mspec.span.rows:
                lhs = _project_prefix(f_mat.mul_vec(_apply_wp(src, row)),
                                      block, target, prefix)
                via = _project_prefix(f_mat.mul_vec(row), block, target, prefix)
                if lhs != _apply_wp(dst, via):
                    return False
    return True


def _project_prefix(vec, block, target, prefix):
    out = [QQ.zero] * target.dim
    for j, v in enumerate(vec):
        if v:
            w = block.words[j]
            if w[:block.N] == prefix:
                out[target.index[w[block.N:]]] = v
    return out


def localized_young_dim(N, lam, n) -> int:
    """Predicted dimension of the localized Young module."""
    lam = tuple(lam) + (0,) * (N - len(lam))
    if lam[N - 1] == 0:
        return 0
    shifted = [v - 1 for v in lam]
    return multinomial(n - N, shifted)


def localized_harmonic_prediction(N, label: HarmonicLabel, n):
    """(predicted label at n - N or None, predicted dimension).

    Four cases split on the depth-N row length and, when it is 1, on the
    shape of the component attached to the shortest row length.
    """
    lam = tuple(label.lam) + (0,) * (N - len(label.lam))
    if lam[N - 1] == 0:
        return None, 0
    shifted = tuple(v - 1 for v in lam if v > 1)
    if lam[N - 1] > 1:
        target = HarmonicLabel(tuple(v - 1 for v in lam), label.mu)
        return target, _harmonic_dim(N, target, n - N)
    mu_last = label.mu[-1]
    if len(mu_last) > 1:  # (mu_l)_2 > 0
        return None, 0
    target = HarmonicLabel(shifted, label.mu[:-1])
    return target, _harmonic_dim(N, target, n - N)


def _harmonic_dim(N, label: HarmonicLabel, n) -> int:
    if n == 0:
        return 1 if not label.lam else 0
    block = partition_block(N, n, label.lam)
    for m in harmonic_decompose(block):
        if m.label == label:
            return m.dim
    raise KeyError("label %r not found at n=%d" % (label, n))


def tensor_dimension_checks(N, n) -> dict:
    """Bookkeeping identities for the charge decomposition at (N, n)."""
    blocks, index = charge_blocks(N, n)
    total = sum(mult * partition_block(N, n, lam).dim for lam, mult in index)
    harmonic_ok = True
    for lam, _ in index:
        block = partition_block(N, n, lam)
        mods = harmonic_decompose(block)
        if sum(m.label.delta_dim() * m.dim for m in mods) != block.dim:
            harmonic_ok = False
    return {"total": total, "expected": N ** n,
            "young_ok": total == N ** n, "harmonic_ok": harmonic_ok}
