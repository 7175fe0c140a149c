"""Decimal rendering of exact rationals and certified enclosures.

Scientific notation is fixed to the form ``d.dd...e±XX`` (two-digit,
zero-padded exponent) with round-half-even applied to the exact value, so
rendered strings are deterministic functions of the rational inputs.
"""

from __future__ import annotations

from decimal import Context, Decimal, ROUND_HALF_EVEN
from fractions import Fraction

from .errors import DomainError
from .spectral import RootEnclosure, sqrt_enclosure


def sci_notation(value: Fraction, sig_digits: int) -> str:
    """Exact rational -> scientific notation at sig_digits, round-half-even."""
    if sig_digits < 1:
        raise DomainError(f"need at least one significant digit, got {sig_digits}")
    value = Fraction(value)
    if value == 0:
        return "0." + "0" * (sig_digits - 1) + "e+00"
    # Decimal division is correctly rounded at the context precision
    ctx = Context(prec=sig_digits, rounding=ROUND_HALF_EVEN)
    d = ctx.divide(Decimal(value.numerator), Decimal(value.denominator))
    sign, digits, exp = d.as_tuple()
    digits = list(digits)
    # pad in case the quotient needed fewer digits (e.g. exact short values)
    while len(digits) < sig_digits:
        digits.append(0)
        exp -= 1
    mantissa = f"{digits[0]}.{''.join(str(x) for x in digits[1:])}"
    if sig_digits == 1:
        mantissa = str(digits[0])
    exponent = exp + len(digits) - 1
    return f"{'-' if sign else ''}{mantissa}e{'+' if exponent >= 0 else '-'}{abs(exponent):02d}"


def render_enclosure(
    enc: RootEnclosure, sig_digits: int, sqrt: bool = False
) -> str | None:
    """Render an enclosure as one decimal string, or None when the interval
    is still too wide to round unambiguously.

    With ``sqrt=True`` the enclosure is treated as holding a squared value
    (sigma_min^2) and an outward-rounded square root is rendered.
    """
    low, high = enc.low, enc.high
    if sqrt:
        low, high = sqrt_enclosure(low, high)
    s_low = sci_notation(low, sig_digits)
    s_high = sci_notation(high, sig_digits)
    return s_low if s_low == s_high else None


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse rational {text!r}") from exc
