"""Runnable invariant suites over the algebra, twist, sequence and residue layers.

Each suite draws seeded random data, counts individual checks, and
collects failure descriptions instead of raising, so a driver can report
totals and exit nonzero only at the end.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .algebra import (AlgebraSignature, Convention, Element, make_algebra,
                      quadratic_check)
from . import fibonacci as fibmod
from . import residue as resmod
from . import twist as twistmod

GAMMA_POOL = (-1, 1, -2, 2, 3, Fraction(1, 2), Fraction(-1, 2), Fraction(2, 3))


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    max_recorded = 20

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, condition: bool, message: str) -> None:
        self.checks += 1
        if not condition and len(self.failures) < self.max_recorded:
            self.failures.append(message)

    def summary(self) -> str:
        status = "ok" if self.passed else "FAILED"
        lines = [f"{self.name}: {self.checks} checks, "
                 f"{len(self.failures)} failures [{status}]"]
        lines.extend(f"  {msg}" for msg in self.failures)
        return "\n".join(lines)


def random_element(sig: AlgebraSignature, rng: random.Random,
                   span: int = 9, fraction_rate: float = 0.0) -> Element:
    """Random element with small integer (or occasional fractional) coefficients."""
    coeffs = []
    for _ in range(sig.dimension):
        if fraction_rate and rng.random() < fraction_rate:
            coeffs.append(Fraction(rng.randint(-span, span), rng.randint(1, span)))
        else:
            coeffs.append(rng.randint(-span, span))
    return sig.element(coeffs)


def random_signature(t: int, rng: random.Random,
                     convention: Optional[Convention] = None) -> AlgebraSignature:
    gammas = [rng.choice(GAMMA_POOL) for _ in range(t)]
    if convention is None:
        convention = rng.choice(list(Convention))
    return make_algebra(t, gammas, convention)


def run_core_suite(samples: int = 200, depths: Sequence[int] = (1, 2, 3, 4),
                   seed: int = 20250101) -> SuiteResult:
    """Involution, quadratic, flexibility, power and norm laws on random data."""
    rng = random.Random(seed)
    out = SuiteResult("core")
    for t in depths:
        for conv in Convention:
            sig = random_signature(t, rng, conv)
            _basis_law_checks(sig, out)
            for _ in range(samples):
                sig = random_signature(t, rng, conv)
                x = random_element(sig, rng, fraction_rate=0.05)
                y = random_element(sig, rng, fraction_rate=0.05)
                tag = f"t={t} {conv.value}"
                xc = x.conjugate()
                out.expect(xc.conjugate() == x, f"{tag}: double conjugation")
                out.expect((x * y).conjugate() == y.conjugate() * xc,
                           f"{tag}: conjugation reverses products")
                s = x + xc
                out.expect(not any(s.coeffs[1:]) and s.coeffs[0] == x.trace(),
                           f"{tag}: x + conj(x) is the trace scalar")
                n = x * xc
                out.expect(not any(n.coeffs[1:]) and n.coeffs[0] == x.norm(),
                           f"{tag}: x * conj(x) is the norm scalar")
                out.expect(quadratic_check(x), f"{tag}: quadratic identity")
                out.expect(x * (y * x) == (x * y) * x, f"{tag}: flexibility")
                powers = [sig.one()]
                for _ in range(6):
                    powers.append(powers[-1] * x)
                for i in range(1, 6):
                    for j in range(1, 7 - i):
                        out.expect(powers[i] * powers[j] == powers[i + j],
                                   f"{tag}: power associativity ({i},{j})")
    return out


def _basis_law_checks(sig: AlgebraSignature, out: SuiteResult) -> None:
    n = sig.dimension
    tag = f"t={sig.t} {sig.convention.value}"
    basis = [sig.basis(p) for p in range(n)]
    for p in range(n):
        sq = basis[p] * basis[p]
        out.expect(not any(sq.coeffs[1:]), f"{tag}: e{p}^2 is scalar")
        ep_sq = sq.scalar_part()
        x = basis[(p + 1) % n]
        out.expect(basis[p] * (basis[p] * x) == ep_sq * x,
                   f"{tag}: left double product by e{p}")
        out.expect((x * basis[p]) * basis[p] == ep_sq * x,
                   f"{tag}: right double product by e{p}")
    for p in range(1, n):
        for q in range(1, n):
            if p != q:
                out.expect(basis[p] * basis[q] == -(basis[q] * basis[p]),
                           f"{tag}: e{p},e{q} anticommute")


def run_twist_suite(exhaustive_depth: int = 5, random_pairs: int = 2000,
                    table_depth: int = 8, seed: int = 20250102) -> SuiteResult:
    """Structure constants against the elementwise product, plus table laws."""
    rng = random.Random(seed)
    out = SuiteResult("twist")
    mixed = (2, -3, Fraction(5, 7), Fraction(-1, 2), 11, -1, Fraction(3, 4), 5)
    for t in range(1, exhaustive_depth + 1):
        for conv in Convention:
            for gammas in ((-1,) * t, mixed[:t]):
                sig = make_algebra(t, gammas, conv)
                for p in range(sig.dimension):
                    for q in range(sig.dimension):
                        coeff, idx = twistmod.basis_product(p, q, sig)
                        out.expect(idx == p ^ q, f"t={t}: index law at ({p},{q})")
                        got = coeff.value(sig.gammas) * sig.basis(idx)
                        out.expect(got == sig.basis(p) * sig.basis(q),
                                   f"t={t} {conv.value} gammas={gammas}: "
                                   f"coefficient at ({p},{q})")
    for t in (6, 7, 8):
        sig = make_algebra(t, (-1,) * t, Convention.CONJUGATE_RIGHT)
        for _ in range(random_pairs):
            p = rng.randrange(sig.dimension)
            q = rng.randrange(sig.dimension)
            coeff, idx = twistmod.basis_product(p, q, sig)
            got = coeff.value(sig.gammas) * sig.basis(idx)
            out.expect(got == sig.basis(p) * sig.basis(q),
                       f"t={t}: random pair ({p},{q})")
    for t in range(1, table_depth + 1):
        for conv in Convention:
            table = twistmod.build_table(t, conv)
            signs = table.sign_table()
            n = table.dimension
            out.expect(all(signs[0, q] == 1 for q in range(n))
                       and all(signs[p, 0] == 1 for p in range(n)),
                       f"t={t} {conv.value}: unit row and column")
            out.expect(all(signs[p, p] == -1 for p in range(1, n)),
                       f"t={t} {conv.value}: diagonal")
            ok = all(signs[p, q] * signs[q, p] == -1
                     for p in range(1, n) for q in range(1, n) if p != q)
            out.expect(ok, f"t={t} {conv.value}: anticommutation in signs")
            sample = [(rng.randrange(n), rng.randrange(n)) for _ in range(64)]
            out.expect(all(signs[p, q] == twistmod.twist_sign(p, q, t, conv)
                           for p, q in sample),
                       f"t={t} {conv.value}: table matches pointwise signs")
            out.expect(table == twistmod.build_table(t, conv),
                       f"t={t} {conv.value}: deterministic rebuild")
            try:
                kinds = twistmod.partition_blocks(
                    table, strict=(conv is Convention.CONJUGATE_LEFT))
                out.expect(kinds[0, 0] == twistmod.BlockKind.A_CORNER,
                           f"t={t} {conv.value}: corner kind")
            except twistmod.BlockClassificationError as exc:
                out.expect(False, f"t={t} {conv.value}: {exc}")
    for report in twistmod.sweep_power_row_claims(5):
        out.expect(report.supported_index_reading in ("computed", "both"),
                   f"power-row ({report.r},{report.k},{report.i}): index reading")
        out.expect(report.tree_forms_c_tile,
                   f"power-row ({report.r},{report.k},{report.i}): C tile")
    return out


def run_fib_suite(norm_range: int = 40, random_params: int = 200,
                  threshold_params: int = 20, seed: int = 20250103) -> SuiteResult:
    """Norm identities, closed form, golden-field laws, sign criterion."""
    rng = random.Random(seed)
    out = SuiteResult("fib")
    unit = fibmod.QuaternionParams(1, 1)
    for n in range(norm_range + 1):
        out.expect(fibmod.fib_norm_direct(n, unit) == 3 * fibmod.fib(2 * n + 3),
                   f"unit-parameter norm at n={n}")
    for _ in range(random_params):
        n = rng.randrange(0, 31)
        params = _random_params(rng)
        direct = fibmod.fib_norm_direct(n, params)
        out.expect(direct == fibmod.fib_norm_formula(n, params),
                   f"closed form at n={n} params={params}")
        a1, a2 = params.alpha1, params.alpha2
        f = fibmod.fib
        quad = (f(n) ** 2 + a1 * f(n + 1) ** 2 + a2 * f(n + 2) ** 2
                + a1 * a2 * f(n + 3) ** 2)
        out.expect(direct == quad, f"diagonal form at n={n} params={params}")
    for n in range(61):
        out.expect(fibmod.binet_residual(n).holds, f"closed-form root power n={n}")
    for _ in range(64):
        x = fibmod.GoldenNumber(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                                Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        y = fibmod.GoldenNumber(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                                Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        prod = x * y
        out.expect(prod.u == x.u * y.u + x.v * y.v
                   and prod.v == x.u * y.v + x.v * y.u + x.v * y.v,
                   "golden product expansion")
    for _ in range(threshold_params):
        params = _random_params(rng)
        e = fibmod.energy(params)
        out.expect(not e.is_zero(), f"energy nonzero for {params}")
        if e.is_zero():
            continue
        n0 = fibmod.invertibility_threshold(params, n_max=200)
        out.expect(n0 is not None, f"sign stabilizes by 200 for {params}")
        if n0 is not None and n0 > 0:
            prev = fibmod.fib_norm_direct(n0 - 1, params)
            sign = 0 if prev == 0 else (1 if prev > 0 else -1)
            out.expect(sign != e.sign(), f"threshold minimality for {params}")
    return out


def _random_params(rng: random.Random) -> "fibmod.QuaternionParams":
    def draw():
        return Fraction(rng.choice([x for x in range(-9, 10) if x]),
                        rng.randint(1, 9))
    return fibmod.QuaternionParams(draw(), draw())


def run_residue_suite(pairs: int = 500, seed: int = 20250104) -> SuiteResult:
    """Golden-example field, remainder bounds, labelling homomorphism, roots."""
    rng = random.Random(seed)
    out = SuiteResult("residue")
    gen = resmod.make_w(2, (1, 2, 3), (1, 1, 1, 1))
    out.expect(gen.q == 2 and gen.m == 4, "generator quadratic data")
    pi = gen.element(-1, 2)
    out.expect(pi.norm() == 13, "prime norm")
    fieldp = resmod.residue_field(pi)
    out.expect(fieldp.s == 7, "labelling root")
    expected = ((0, 0), (1, 0), (2, 0), (3, 0), (-3, 1), (-2, 1), (-1, 1),
                (1, -1), (2, -1), (3, -1), (-3, 0), (-2, 0), (-1, 0))
    out.expect(tuple((u.a, u.b) for u in fieldp.reps) == expected,
               "representative set")
    euclidean = [resmod.make_w(2, (1, 2, 3), (0, 1, 0, 0)),
                 resmod.make_w(2, (1, 2, 3), (1, 1, 0, 0)),
                 resmod.make_w(3, (1, 2, 4), (1, 1, 1, 0))]
    per_gen = max(1, pairs // (len(euclidean) + 1))
    for g in euclidean:
        for _ in range(per_gen):
            x = g.element(rng.randint(-60, 60), rng.randint(-60, 60))
            y = g.element(rng.randint(-25, 25), rng.randint(-25, 25))
            if y.is_zero():
                continue
            out.expect(resmod.u_mod(x, y).norm() < y.norm(),
                       f"remainder bound for {x} mod {y} over (q={g.q}, m={g.m})")
    for _ in range(per_gen):
        x = gen.element(rng.randint(-60, 60), rng.randint(-60, 60))
        out.expect(resmod.u_mod(x, pi).norm() < 13,
                   f"remainder bound for {x} mod the golden prime")
    for i in range(13):
        for j in range(13):
            ui, uj = fieldp.reps[i], fieldp.reps[j]
            out.expect(fieldp.label(resmod.u_mod(ui + uj, pi)) == (i + j) % 13,
                       f"additive labelling at ({i},{j})")
            out.expect(fieldp.label(resmod.u_mod(ui * uj, pi)) == (i * j) % 13,
                       f"multiplicative labelling at ({i},{j})")
    for _ in range(100):
        x = gen.element(rng.randint(-30, 30), rng.randint(-30, 30))
        z = gen.element(rng.randint(-10, 10), rng.randint(-10, 10))
        out.expect(fieldp.label(x) == fieldp.label(x + z * pi),
                   "labels constant on classes")
    for t in (2, 3):
        for m in range(1, 51):
            z = resmod.four_square_root(m, (1, 2, 3), t)
            residue = z * z - (2 * z[0]) * z + m * z.signature.one()
            out.expect(residue.is_zero(), f"quadratic root for m={m} t={t}")
    ks = [rng.randrange(13) for _ in range(32)]
    out.expect(resmod.decode_symbols(resmod.encode_symbols(ks, fieldp), fieldp) == ks,
               "codec round trip")
    return out


SUITES = {
    "core": run_core_suite,
    "twist": run_twist_suite,
    "fib": run_fib_suite,
    "residue": run_residue_suite,
}


def run_suites(names: Sequence[str], **kwargs) -> List[SuiteResult]:
    return [SUITES[name](**kwargs.get(name, {})) for name in names]
