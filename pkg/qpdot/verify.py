#  qpdot: spectra and thermodynamics of quantum pseudodots in external fields.
#  Copyright (C) 2026 The qpdot developers
#
#   This program is free software: you can redistribute it and/or modify
#   it under the terms of the GNU General Public License as published by
#   the Free Software Foundation, either version 3 of the License, or
#   (at your option) any later version.
#
#   This program is distributed in the hope that it will be useful,
#   but WITHOUT ANY WARRANTY; without even the implied warranty of
#   MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#   GNU General Public License for more details.
#
#   You should have received a copy of the GNU General Public License
#   along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Verification suite.

The asserted checks compare the analytic results with the independent numerical references of `qpdot.oracle`,
test limits and symmetries of the spectrum, and test the internal consistency of every thermodynamic backend. The
errata diagnostics quantify where the published closed-form expressions depart from the analytic derivations;
they are reported but never asserted.
"""
import logging
import time
from dataclasses import asdict, dataclass, field
from math import pi, sqrt
from typing import Callable

import pandas as pd
from numpy import isfinite

from . import spectrum
from .errors import VerificationError
from .figures import FIGURES, build_figure
from .oracle import central_difference, characteristic_exact, partition_sum, shoot_radial_eigenvalue, thermo_exact
from .specfun import hurwitz_zeta, kummer_1f1
from .spectrum import Constants, FieldConfig, PotentialParams, _ladder_offset, landau_limit_energy
from .thermo import (characteristic_asymptotic, characteristic_closed, dX_ddelta_paper, dX_ddelta_residue,
                     field_response, free_energy, offset_derivatives, paper_current_chain_rule, paper_thermo,
                     thermo_closed)

__all__ = ['CheckResult', 'Diagnostic', 'VerificationReport', 'run_checks', 'errata_diagnostics', 'verify', 'CHECKS']

logger = logging.getLogger(__name__)

_NATURAL = Constants()


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one asserted check."""
    name: str
    passed: bool
    expected: str
    actual: str


@dataclass(frozen=True)
class Diagnostic:
    """A non-asserted comparison between a published expression and its analytic counterpart."""
    name: str
    published: float
    derived: float
    note: str

    @property
    def difference(self) -> float:
        return self.published - self.derived


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)
    errata: list[Diagnostic] = field(default_factory=list)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failed

    def checks_frame(self) -> pd.DataFrame:
        df = pd.DataFrame([asdict(c) for c in self.checks], columns=['name', 'passed', 'expected', 'actual'])
        df['passed'] = df['passed'].map({True: 'PASS', False: 'FAIL'})
        return df.rename(columns={'passed': 'status'})

    def errata_frame(self) -> pd.DataFrame:
        return pd.DataFrame([dict(name=d.name, published=d.published, derived=d.derived, difference=d.difference,
                                  note=d.note) for d in self.errata],
                            columns=['name', 'published', 'derived', 'difference', 'note'])

    def format(self) -> str:
        lines = [self.checks_frame().to_string(index=False)]
        if self.errata:
            lines += ['', 'Errata diagnostics (not asserted)',
                      self.errata_frame().to_string(index=False, float_format=lambda v: f"{v:.9g}")]
        lines += ['', f"{len(self.checks) - len(self.failed)}/{len(self.checks)} checks passed"]
        return '\n'.join(lines)

    def raise_for_failures(self) -> None:
        if self.failed:
            raise VerificationError(self.failed)


def _rel(value: float, reference: float, floor: float = 1e-300) -> float:
    return abs(value - reference) / max(abs(reference), floor)


def _result(name: str, worst: float, tol: float, what: str = 'rel') -> CheckResult:
    return CheckResult(name, bool(worst < tol), f"{what} < {tol:.0e}", f"{worst:.3e}")


CHECKS: list[tuple[str, Callable[[], CheckResult]]] = []


def check(name: str):
    def register(fn: Callable[[], CheckResult]):
        CHECKS.append((name, fn))
        return fn
    return register


# (n_r, m, B, Phi_AB, V0, r0)
_SHOOTING_CASES = ((0, 0, 0.0, 0.0, 5.0, 1.0), (1, 1, 2.0, 5.0, 5.0, 1.0), (0, 1, 0.0, 0.0, 5.0, 1.0),
                   (2, 0, 1.0, 0.0, 5.0, 1.0), (0, -1, 1.0, 2.0, 5.0, 1.0), (1, 2, 3.0, 0.0, 2.0, 1.0),
                   (0, 0, 2.0, 0.0, 0.0, 1.0), (3, 1, 0.5, 1.0, 5.0, 2.0), (1, -2, 4.0, 3.0, 1.0, 1.5),
                   (0, 3, 1.0, 10.0, 5.0, 0.5))


@check('radial spectrum vs shooting')
def check_shooting() -> CheckResult:
    t0 = time.perf_counter()
    worst = 0.0
    for n_r, m, b, phi, v0, r0 in _SHOOTING_CASES:
        fields, potential = FieldConfig(b=b, phi_ab=phi), PotentialParams(v0=v0, r0=r0)
        analytic = spectrum.radial_energy(n_r, m, fields, potential, _NATURAL)
        shot = shoot_radial_eigenvalue(n_r, m, fields, potential, _NATURAL)
        worst = max(worst, _rel(analytic, shot))
    logger.info("Shooting cross-check of %d states took %.2f s", len(_SHOOTING_CASES), time.perf_counter() - t0)
    return _result('radial spectrum vs shooting', worst, 1e-6)


@check('pinned energies')
def check_pinned_energies() -> CheckResult:
    pot = PotentialParams(v0=5.0, r0=1.0, k_osc=1.0)
    fig = FieldConfig(b=2.0, phi_ab=5.0, eps=5.0)
    values = [(spectrum.radial_energy(0, 0, FieldConfig(), pot, _NATURAL), sqrt(10.0), 1e-9),
              (spectrum.radial_energy(1, 1, FieldConfig(b=2.0, phi_ab=5.0), pot, _NATURAL), 13.8069, 1e-4),
              (spectrum.axial_energy(1, fig, pot, _NATURAL), -5.25, 1e-12),
              (spectrum.ladder_params(1, fig, pot, _NATURAL).a, 1.42360, 1e-4)]
    worst = max(abs(v - ref) / tol for v, ref, tol in values)
    return CheckResult('pinned energies', bool(worst <= 1.0), 'all within tolerance', f"worst {worst:.3f} × tol")


@check('radial equation residual')
def check_residual() -> CheckResult:
    r = [0.05 * (i + 1) for i in range(20)]
    res = spectrum.radial_equation_residual(0, 0, FieldConfig(), PotentialParams(), _NATURAL, r)
    return _result('radial equation residual', float(res.max()), 1e-8)


@check('Landau limit and m degeneracy')
def check_limits() -> CheckResult:
    worst = 0.0
    fields = FieldConfig(b=1.5, phi_ab=3.0)
    for n in range(4):
        for m in (-2, -1, 0, 1, 2):
            e = spectrum.radial_energy(n, m, fields, PotentialParams(v0=0.0), _NATURAL)
            worst = max(worst, _rel(e, landau_limit_energy(n, m, fields, _NATURAL)))
    for n in range(3):
        for m in (1, 2, 3):
            for v0, r0 in ((5.0, 1.0), (1.0, 2.5)):
                pot = PotentialParams(v0=v0, r0=r0)
                worst = max(worst, _rel(spectrum.radial_energy(n, m, FieldConfig(), pot, _NATURAL),
                                        spectrum.radial_energy(n, -m, FieldConfig(), pot, _NATURAL)))
    return _result('Landau limit and m degeneracy', worst, 1e-12)


@check('flux periodicity')
def check_gauge() -> CheckResult:
    phi0 = spectrum.flux_quantum(_NATURAL)
    worst = 0.0
    for n_r, m, b, phi in ((0, 0, 0.0, 7.0), (1, 1, 2.0, 10.0), (2, -1, 1.0, 15.0), (0, 3, 4.0, 6.5),
                           (1, -2, 0.5, 20.0), (3, 0, 3.0, 8.0), (0, 1, 2.0, 12.5), (2, 2, 5.0, 9.0),
                           (1, -3, 1.5, 18.0), (0, -1, 0.0, 7.5)):
        pot = PotentialParams()
        e1 = spectrum.radial_energy(n_r, m, FieldConfig(b=b, phi_ab=phi), pot, _NATURAL)
        e2 = spectrum.radial_energy(n_r, m + 1, FieldConfig(b=b, phi_ab=phi - phi0), pot, _NATURAL)
        worst = max(worst, _rel(e2, e1))
    return _result('flux periodicity', worst, 1e-12)


def _temperatures(n: int = 20, tmin: float = 0.5, tmax: float = 50.0) -> list[float]:
    return [tmin * (tmax / tmin)**(i / (n - 1)) for i in range(n)]


@check('exact backend identities')
def check_exact_identities() -> CheckResult:
    worst_f = worst_u = worst_cv = 0.0
    for xi in (1.0, 2.84720):
        for t in _temperatures():
            p = thermo_exact(xi, 1.0, t)
            worst_f = max(worst_f, _rel(p.F, -t * p.X))
            worst_u = max(worst_u, _rel(p.F + t * p.S, p.U))
            dudt = central_difference(lambda x: thermo_exact(xi, 1.0, x).U, t, 1, 1e-2 * t)
            worst_cv = max(worst_cv, _rel(dudt, p.Cv))
    passed = worst_f < 1e-10 and worst_u < 1e-7 and worst_cv < 1e-6
    return CheckResult('exact backend identities', passed, 'F < 1e-10, U < 1e-07, Cv < 1e-06',
                       f"F {worst_f:.2e}, U {worst_u:.2e}, Cv {worst_cv:.2e}")


@check('pinned partition values')
def check_partition_values() -> CheckResult:
    s1, s3 = partition_sum(1.0, 1.0, 1.0), partition_sum(3.0, 1.0, 1.0)
    dev = max(abs(s1.value - 0.38648), abs(s3.value - 0.13397))
    tail = max(s1.tail_bound, s3.tail_bound)
    return CheckResult('pinned partition values', bool(dev < 1e-4 and tail < 1e-10), 'dev < 1e-04, tail < 1e-10',
                       f"dev {dev:.2e}, tail {tail:.1e}")


@check('closed backend consistency')
def check_closed_consistency() -> CheckResult:
    worst = 0.0
    for a in (0.2, 0.5, 1.4236, 3.0):
        for t in (0.5, 1.0, 2.0, 5.0, 20.0):
            p = thermo_closed(a, t, _NATURAL)

            def x_of(x):
                return characteristic_closed(a, 1.0 / x, _NATURAL)

            def u_of(x):
                return thermo_closed(a, x, _NATURAL).U

            def f_of(x):
                return thermo_closed(a, x, _NATURAL).F

            pairs = ((p.U, t**2 * central_difference(x_of, t)), (p.Cv, central_difference(u_of, t)),
                     (p.S, -central_difference(f_of, t)))
            worst = max(worst, *(abs(v - fd) / max(abs(fd), 1.0) for v, fd in pairs))
    pinned = abs(characteristic_closed(0.5, 1.0, _NATURAL) + 1.1152568)
    return CheckResult('closed backend consistency', bool(worst < 1e-6 and pinned < 1e-6),
                       'FD < 1e-06, X(1/2, 1) = -1.1152568', f"FD {worst:.2e}, X dev {pinned:.1e}")


@check('high-temperature agreement')
def check_asymptotic() -> CheckResult:
    exact = characteristic_exact(1.0, 1.0, 0.01)
    closed = characteristic_closed(0.5, 0.01, _NATURAL)
    return _result('high-temperature agreement', _rel(closed, exact), 2e-2)


@check('special functions')
def check_special_functions() -> CheckResult:
    worst = max(abs(hurwitz_zeta(2.0, 1.0) - pi**2 / 6.0), abs(hurwitz_zeta(0.0, 0.5)))
    worst_fd = 0.0
    for s in (-0.5, 1.5, 2.0, 3.0, 4.0):
        for q in (0.5, 1.0, 2.0, 5.0):
            fd = central_difference(lambda x: hurwitz_zeta(s, x), q)
            worst_fd = max(worst_fd, _rel(fd, -s * hurwitz_zeta(s + 1.0, q)))
    worst_poly = 0.0
    for b in (0.5, 1.0, 2.5):
        for x in (-3.0, -0.5, 0.7, 4.0):
            worst_poly = max(worst_poly, abs(kummer_1f1(0.0, b, x) - 1.0),
                             _rel(kummer_1f1(-1.0, b, x), 1.0 - x / b, 1.0),
                             _rel(kummer_1f1(-2.0, b, x), 1.0 - 2.0 * x / b + x * x / (b * (b + 1.0)), 1.0))
    passed = worst < 1e-12 and worst_fd < 1e-6 and worst_poly < 1e-13
    return CheckResult('special functions', passed, 'zeta < 1e-12, FD < 1e-06, 1F1 < 1e-13',
                       f"zeta {worst:.1e}, FD {worst_fd:.1e}, 1F1 {worst_poly:.1e}")


# (m, B, Phi_AB, eps, T)
_FIELD_POINTS = ((1, 2.0, 5.0, 5.0, 1.0), (0, 1.0, 0.5, 4.0, 2.0), (2, 3.0, 2.0, 5.0, 1.5),
                 (-1, 0.5, 1.0, 3.0, 1.0), (1, 4.0, 10.0, 6.0, 3.0))


@check('field responses')
def check_field_responses() -> CheckResult:
    pot = PotentialParams()
    worst_closed = worst_exact = 0.0
    for m, b, phi, eps, t in _FIELD_POINTS:
        fields = FieldConfig(b=b, phi_ab=phi, eps=eps)
        d = offset_derivatives(m, fields, pot, _NATURAL)
        a = _ladder_offset(m, b, phi, eps, pot, _NATURAL)

        def f_closed(bb, pp):
            return free_energy(_ladder_offset(m, bb, pp, eps, pot, _NATURAL), t, _NATURAL, 'closed')

        closed = field_response(m, fields, pot, _NATURAL, t, 'closed')
        direct = (-central_difference(lambda x: f_closed(b, x), phi),
                  -central_difference(lambda x: f_closed(x, phi), b),
                  -central_difference(lambda x: f_closed(x, phi), b, 2))
        worst_closed = max(worst_closed, *(_rel(v, ref) for v, ref in zip(closed, direct)))

        def f_exact(x):
            return free_energy(x, t, _NATURAL, 'exact')

        fa = central_difference(f_exact, a)
        faa = central_difference(f_exact, a, 2)
        chain = (-fa * d.da_dPhi, -fa * d.da_dB, -(faa * d.da_dB**2 + fa * d.d2a_dB2))
        exact = field_response(m, fields, pot, _NATURAL, t, 'exact')
        worst_exact = max(worst_exact, *(_rel(v, ref) for v, ref in zip(exact, chain)))
    symmetric = field_response(0, FieldConfig(), pot, _NATURAL, 1.0, 'closed').M
    passed = worst_closed < 1e-4 and worst_exact < 1e-4 and symmetric == 0.0
    return CheckResult('field responses', passed, 'closed < 1e-04, exact < 1e-04, M(0) = 0',
                       f"closed {worst_closed:.1e}, exact {worst_exact:.1e}, M(0) = {symmetric:g}")


@check('energy figure trends')
def check_figure_trends() -> CheckResult:
    failures = []
    fig1, fig2, fig3, fig4 = (build_figure(i) for i in (1, 2, 3, 4))
    if not all(s.is_increasing() for s in fig1):
        failures.append('E(B) at fixed Phi_AB')
    if not all((fig1[i + 1].values > fig1[i].values).all() for i in range(len(fig1) - 1)):
        failures.append('E(Phi_AB) at fixed B')
    spacing = [fig2[i + 1].values - fig2[i].values for i in range(len(fig2) - 1)]
    scale = max(abs(fig2[-1].values).max(), 1.0)
    if not all((abs(d - spacing[0]) <= 1e-9 * scale).all() for d in spacing):
        failures.append('E affine in n_r')
    for fig in (fig3, fig4):
        if not all((fig[i + 1].values > fig[i].values).all() for i in range(len(fig) - 1)):
            failures.append(f'E(m) in {fig.variable} sweep')
    return CheckResult('energy figure trends', not failures, 'four trends hold', ', '.join(failures) or 'all hold')


@check('figure datasets')
def check_figures() -> CheckResult:
    t0 = time.perf_counter()
    incomplete = [i for i in FIGURES if not all(isfinite(s.values).all() for s in build_figure(i))]
    elapsed = time.perf_counter() - t0
    passed = not incomplete and elapsed < 30.0
    return CheckResult('figure datasets', passed, f'{len(FIGURES)} complete in < 30 s',
                       f"{len(FIGURES) - len(incomplete)} complete in {elapsed:.1f} s")


def run_checks() -> list[CheckResult]:
    """Run every asserted check. A check that raises is recorded as failed with the exception as its value."""
    results = []
    for name, fn in CHECKS:
        try:
            r = fn()
        except Exception as exc:
            r = CheckResult(name, False, 'no error', f"{exc.__class__.__name__}: {exc}")
        logger.info("%s %s: %s", 'PASS' if r.passed else 'FAIL', r.name, r.actual)
        results.append(r)
    return results


def errata_diagnostics() -> list[Diagnostic]:
    """Compare the published expressions with their analytic counterparts at the figure defaults."""
    pot = PotentialParams()
    fields = FieldConfig(b=2.0, phi_ab=5.0, eps=5.0)
    lp = spectrum.ladder_params(1, fields, pot, _NATURAL)
    out = []

    for t in (0.5, 1.0, 5.0):
        paper, closed = paper_thermo(lp.a, t, _NATURAL), thermo_closed(lp.a, t, _NATURAL)
        for q in ('U', 'Cv', 'F', 'S'):
            out.append(Diagnostic(f"{q} at T = {t:g}", getattr(paper, q), getattr(closed, q),
                                  'published thermodynamics vs derivatives of the closed form'))

    delta, xi = 0.01, 1.0
    beta = 4.0 * pi * delta
    dx_exact = 4.0 * pi * central_difference(lambda b: characteristic_exact(xi, 1.0, b), beta)
    out.append(Diagnostic('dX/ddelta at delta = 0.01', dX_ddelta_paper(delta, xi), dX_ddelta_residue(delta, xi),
                          'pi/94 prefactor vs pi/24 from the residue at s = 2'))
    out.append(Diagnostic('dX/ddelta residue form vs exact', dX_ddelta_residue(delta, xi), dx_exact,
                          'residue expansion vs derivative of the exact sum'))

    t = 100.0
    out.append(Diagnostic('X constant term at T = 100', characteristic_closed(0.5 * _NATURAL.hbar, 1.0 / t, _NATURAL),
                          characteristic_asymptotic(1.0, 1.0, 1.0 / t),
                          '-ln 4pi vs ln Gamma(3/2) - ln(2pi)/2 of the Mellin expansion'))
    out.append(Diagnostic('F form at T = 1', paper_thermo(lp.a, 1.0, _NATURAL).F,
                          -characteristic_closed(lp.a, 1.0, _NATURAL),
                          'published F vs -T X of the closed form'))

    fl = FieldConfig(b=2.0, phi_ab=5.0)
    out.append(Diagnostic('zero-potential energy n = 0, m = 1', landau_limit_energy(0, 1, fl, _NATURAL, 'paper'),
                          landau_limit_energy(0, 1, fl, _NATURAL, 'derived'),
                          '(m + xi)/2 vs the v0 -> 0 limit of the radial spectrum'))

    paper_i = field_response(1, fields, pot, _NATURAL, 1.0, 'paper').I
    out.append(Diagnostic('persistent current at T = 1', paper_i, paper_current_chain_rule(1, fields, pot, _NATURAL, 1.0),
                          'published current vs the chain-rule factor 1/sqrt((m+xi)^2 + 2 mu V0 r0^2/hbar^2)'))
    return out


def verify(errata: bool = True) -> VerificationReport:
    """Run the verification suite, optionally with the errata diagnostics."""
    return VerificationReport(run_checks(), errata_diagnostics() if errata else [])
