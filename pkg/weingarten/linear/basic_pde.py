"""
Натуральные уравнения десяти базовых классов и их однопараметрические семейства до подобия.

Ось x соответствует первому главному параметру u, ось y второму v.
"""
import numpy as np

from weingarten.errors import UsageError
from weingarten.linear.classification import BasicClassId, basic_id
from weingarten.pde.operators import OperatorKind
from weingarten.pde.problem import NaturalPDEProblem


def _identity(lam):
    return np.asarray(lam, dtype=float)


def _ones(lam):
    return np.ones_like(np.asarray(lam, dtype=float))


def _zeros(lam):
    return np.zeros_like(np.asarray(lam, dtype=float))


def _linear_unknown(**kwargs):
    return dict(w=_identity, dw=_ones, d2w=_zeros, w_inverse=_identity, **kwargs)


def _exponential_unknown(scale: float = 1.0, **kwargs):
    """w = e^{scale lambda}."""
    return dict(
        w=lambda lam: np.exp(scale * np.asarray(lam, dtype=float)),
        dw=lambda lam: scale * np.exp(scale * np.asarray(lam, dtype=float)),
        d2w=lambda lam: scale**2 * np.exp(scale * np.asarray(lam, dtype=float)),
        w_inverse=lambda q: np.log(q) / scale,
        **kwargs,
    )


def _power_unknown(beta: float, **kwargs):
    """w = lambda^beta при lambda > 0."""
    return dict(
        w=lambda lam: np.asarray(lam, dtype=float) ** beta,
        dw=lambda lam: beta * np.asarray(lam, dtype=float) ** (beta - 1.0),
        d2w=lambda lam: beta * (beta - 1.0) * np.asarray(lam, dtype=float) ** (beta - 2.0),
        w_inverse=lambda q: np.asarray(q, dtype=float) ** (1.0 / beta),
        domain=(0.0, np.inf),
        **kwargs,
    )


def _row1(params):
    return NaturalPDEProblem(
        row=1, kind=OperatorKind.LAPLACE,
        rhs=lambda lam: -np.exp(lam), drhs=lambda lam: -np.exp(lam),
        nu_of=lambda lam: -np.exp(lam), lambda_of_nu=lambda nu: np.log(-np.asarray(nu, dtype=float)),
        equation="Δλ = -e^λ", substitution="ν = -e^λ", params=params,
        **_linear_unknown(),
    )


def _row2(params):
    H = float(params.get("H", 0.5))
    if H == 0.0:
        raise UsageError("Для семейства строки 2 нужно H != 0 (H = 0 - строка 1)")
    h = abs(H)
    return NaturalPDEProblem(
        row=2, kind=OperatorKind.LAPLACE,
        rhs=lambda lam: -2.0 * h * np.sinh(lam), drhs=lambda lam: -2.0 * h * np.cosh(lam),
        nu_of=lambda lam: H - h * np.exp(lam), lambda_of_nu=lambda nu: np.log((H - np.asarray(nu, dtype=float)) / h),
        equation=f"Δλ = -{2 * h:g} sinh λ", substitution=f"ν = {H:g} - {h:g} e^λ", params={"H": H},
        **_linear_unknown(),
    )


def _row3(params):
    c = float(params.get("h_prime", 1.0))
    if c == 0.0:
        raise UsageError("Для семейства строки 3 нужно H' != 0")
    return NaturalPDEProblem(
        row=3, kind=OperatorKind.STAR,
        rhs=lambda lam: -2.0 * lam * (lam + 2.0 * c), drhs=lambda lam: -4.0 * lam - 4.0 * c,
        nu_of=_identity, lambda_of_nu=_identity,
        equation=f"Δ*(e^(ν/{c:g})) = -2ν(ν + {2 * c:g})", substitution="ν = λ", params={"h_prime": c},
        **_exponential_unknown(1.0 / c),
    )


def _row45(row, params):
    beta = float(params["beta"])
    c = -2.0 * beta * (beta + 1.0) / (beta - 1.0) ** 2
    kind = OperatorKind.STAR if row == 4 else OperatorKind.WAVE_STAR
    return NaturalPDEProblem(
        row=row, kind=kind,
        rhs=lambda lam: c * np.asarray(lam, dtype=float), drhs=lambda lam: c * _ones(lam),
        nu_of=_identity, lambda_of_nu=_identity,
        equation=f"{kind.symbol}(ν^{beta:g}) = {c:g} ν", substitution="ν = λ", params={"beta": beta},
        **_power_unknown(beta),
    )


def _row67(row, params):
    beta = float(params["beta"])
    k = float(params.get("k", 1.0))
    factor = -beta / (2.0 * (beta - 1.0))
    kind = OperatorKind.STAR if row == 6 else OperatorKind.WAVE_STAR

    def rhs(lam):
        lam = np.asarray(lam, dtype=float)
        return factor * ((beta - 1.0) * lam + 2.0 * k) * ((beta + 1.0) * lam + 2.0 * k) / lam

    def drhs(lam):
        lam = np.asarray(lam, dtype=float)
        return factor * ((beta**2 - 1.0) - 4.0 * k**2 / lam**2)

    return NaturalPDEProblem(
        row=row, kind=kind, rhs=rhs, drhs=drhs,
        nu_of=lambda lam: 0.5 * (beta - 1.0) * np.asarray(lam, dtype=float) + k,
        lambda_of_nu=lambda nu: 2.0 * (np.asarray(nu, dtype=float) - k) / (beta - 1.0),
        equation=f"{kind.symbol}(λ^{beta:g}) = {factor:g} ((β-1)λ + 2k)((β+1)λ + 2k)/λ",
        substitution=f"ν = ((β-1)λ + 2k)/2, k = {k:g}", params={"beta": beta, "k": k},
        **_power_unknown(beta),
    )


def _row8(params):
    K = float(params.get("K", -1.0))
    if K >= 0.0:
        raise UsageError(f"Семейство строки 8 требует K < 0, получено K = {K:g}")
    s = np.sqrt(-K)
    return NaturalPDEProblem(
        row=8, kind=OperatorKind.WAVE,
        rhs=lambda lam: K**2 * np.sin(lam), drhs=lambda lam: K**2 * np.cos(lam),
        nu_of=lambda lam: s * np.tan(0.5 * np.asarray(lam, dtype=float)),
        lambda_of_nu=lambda nu: 2.0 * np.arctan(np.asarray(nu, dtype=float) / s),
        potential=lambda lam: K**2 * (1.0 - np.cos(lam)),
        equation=f"Δ̄λ = {K**2:g} sin λ", substitution=f"λ = 2 arctan(ν/{s:g})", params={"K": K},
        **_linear_unknown(),
    )


def _row9(params):
    beta = float(params.get("beta", 2.0))
    constant = -beta**4 / 8.0

    def nu_of(lam):
        lam = np.asarray(lam, dtype=float)
        return 0.5 * beta * (lam - 4.0) / (lam - 2.0)

    return NaturalPDEProblem(
        row=9, kind=OperatorKind.STAR,
        rhs=lambda lam: constant * _ones(lam), drhs=_zeros,
        nu_of=nu_of,
        lambda_of_nu=lambda nu: 4.0 * (np.asarray(nu, dtype=float) - beta) / (2.0 * np.asarray(nu, dtype=float) - beta),
        equation=f"Δ*(e^λ) = {constant:g}", substitution=f"λ = 4(ν - {beta:g})/(2ν - {beta:g})",
        params={"beta": beta},
        **_exponential_unknown(),
    )


def _row10(params):
    beta, gamma = float(params["beta"]), float(params["gamma"])
    s = np.sqrt(-gamma)

    def integral(lam):
        return np.arctan(np.asarray(lam, dtype=float) / s) / s

    def d_integral(lam):
        return 1.0 / (np.asarray(lam, dtype=float) ** 2 - gamma)

    def w(lam):
        return np.exp(beta * integral(lam))

    def dw(lam):
        return beta * d_integral(lam) * w(lam)

    def d2w(lam):
        lam = np.asarray(lam, dtype=float)
        second = -2.0 * lam / (lam**2 - gamma) ** 2
        return (beta * second + beta**2 * d_integral(lam) ** 2) * w(lam)

    def rhs(lam):
        lam = np.asarray(lam, dtype=float)
        return 0.5 * beta * gamma * lam * (beta * lam + 2.0 * gamma) / (lam**2 - gamma)

    def drhs(lam):
        lam = np.asarray(lam, dtype=float)
        numerator = (2.0 * beta * lam + 2.0 * gamma) * (lam**2 - gamma) - (beta * lam**2 + 2.0 * gamma * lam) * 2.0 * lam
        return 0.5 * beta * gamma * numerator / (lam**2 - gamma) ** 2

    return NaturalPDEProblem(
        row=10, kind=OperatorKind.STAR, w=w, dw=dw, d2w=d2w,
        w_inverse=lambda q: s * np.tan(s * np.log(q) / beta),
        rhs=rhs, drhs=drhs,
        nu_of=lambda lam: np.asarray(lam, dtype=float) + 0.5 * beta,
        lambda_of_nu=lambda nu: np.asarray(nu, dtype=float) - 0.5 * beta,
        equation=f"Δ*(e^(βI)) = (βγ/2) λ(βλ + 2γ)/(λ² - γ), β = {beta:g}, γ = {gamma:g}",
        substitution="ν = λ + β/2, I = arctan(λ/√-γ)/√-γ", params={"beta": beta, "gamma": gamma},
    )


_BUILDERS = {
    1: _row1,
    2: _row2,
    3: _row3,
    4: lambda params: _row45(4, params),
    5: lambda params: _row45(5, params),
    6: lambda params: _row67(6, params),
    7: lambda params: _row67(7, params),
    8: _row8,
    9: _row9,
    10: _row10,
}

# Параметры классификации, задающие подобие, а не сам базовый класс.
_SIMILARITY_KEYS = {2: ("H",), 8: ("K",)}


def basic_pde(basic: BasicClassId) -> NaturalPDEProblem:
    """
    Натуральное уравнение базового класса (после приведения подобием).

    :param basic: Базовый класс.
    :return: NaturalPDEProblem.
    """
    params = {k: v for k, v in basic.params.items() if k not in _SIMILARITY_KEYS.get(basic.row, ())}
    return _BUILDERS[basic.row](params)


def scaled_basic_pde(row: int, params: dict = None) -> NaturalPDEProblem:
    """
    Однопараметрическое семейство до подобия: строка 2 с H, строка 3 с h_prime (H' = h_prime),
    строки 6/7 с k (H = beta H' + k), строка 8 с K < 0, строка 9 с beta (K = beta H').

    :raises UsageError: Если параметры вне допустимой области.
    """
    basic = basic_id(row, {k: v for k, v in (params or {}).items() if k in ("beta", "gamma")})
    return _BUILDERS[row]({**basic.params, **(params or {})})
