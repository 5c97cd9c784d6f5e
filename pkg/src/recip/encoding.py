"""Text and JSON encodings of elements, fractions and certificates.

JSON element encodings:

* integers: decimal strings, e.g. ``"-5"`` (bare JSON ints are accepted)
* Gaussian integers: ``{"re": "1", "im": "-1"}``
* polynomials: ``{"coeffs": ["1/2", "0", "3"], "coef_field": "Q"}``, lowest
  degree first; ``coef_field`` is ``"Q"`` or ``"Fp:<p>"``

Human syntax, accepted wherever an element is read:

* Gaussian integers: ``3``, ``-i``, ``1+i``, ``2-3i``
* polynomials: ``x^2+1``, ``3x+1/2``, ``(1/2)x``, ``2*x^3-x``

Polynomial grammar (whitespace ignored)::

    poly  := sign? term (sign term)*
    term  := coef ('*'? mono)? | mono
    coef  := INT ('/' INT)? | '(' INT '/' INT ')'
    mono  := 'x' ('^' INT)?

A fraction on the command line is ``num/den``.  Inside a polynomial ``1/2``
is a coefficient, so a polynomial fraction should parenthesize its numerator,
``(x+1)/(x+2)``.  Text that fails to parse as a single polynomial is split at
its first top-level slash, which makes ``x/1`` a fraction.
"""
from __future__ import annotations

import fractions
import re
import sys

from .decompose import Decomposition
from .domain import EuclideanDomain, Fraction
from .instances import GaussInt, Poly, PolynomialRing, make_domain


# greedy tails produce denominators with thousands of digits
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


class EncodingError(ValueError):
    """Malformed element or certificate text."""


# ---------------------------------------------------------------------------
# elements


def encode_element(D: EuclideanDomain, a):
    if D.selector == "z":
        return str(a)
    if D.selector == "zi":
        return {"re": str(a.re), "im": str(a.im)}
    return {"coeffs": [str(c) for c in a.coeffs], "coef_field": D.field.name}


def decode_element(D: EuclideanDomain, obj):
    if isinstance(obj, str):
        return parse_element(D, obj)
    if isinstance(obj, bool):
        raise EncodingError(f"not an element: {obj!r}")
    if isinstance(obj, int):
        return D.convert(obj)
    if isinstance(obj, dict):
        if D.selector == "zi" and set(obj) == {"re", "im"}:
            try:
                return GaussInt(int(obj["re"]), int(obj["im"]))
            except (TypeError, ValueError):
                raise EncodingError(f"bad Gaussian integer {obj!r}") from None
        if isinstance(D, PolynomialRing) and "coeffs" in obj:
            field = obj.get("coef_field", D.field.name)
            if field.lower() != D.field.name.lower():
                raise EncodingError(f"coef_field {field!r} does not match domain {D.selector}")
            try:
                coeffs = [_parse_rational(str(c)) for c in obj["coeffs"]]
                return Poly(coeffs, D.field)
            except (ValueError, ZeroDivisionError) as exc:
                raise EncodingError(f"bad coefficient list {obj['coeffs']!r}: {exc}") from None
    raise EncodingError(f"cannot decode {obj!r} as an element of {D.selector}")


def _parse_rational(s: str) -> fractions.Fraction:
    if not re.fullmatch(r"\s*[+-]?\d+\s*(/\s*\d+\s*)?", s):
        raise ValueError(f"bad rational {s!r}")
    return fractions.Fraction(s.replace(" ", ""))


def parse_element(D: EuclideanDomain, text: str):
    text = text.strip()
    while _wrapped(text):
        text = text[1:-1].strip()
    if D.selector == "z":
        if not re.fullmatch(r"[+-]?\d+", text):
            raise EncodingError(f"bad integer {text!r} at position 0")
        return int(text)
    if D.selector == "zi":
        return _parse_gaussian(text)
    return _PolyParser(text, D).parse()


def _wrapped(text: str) -> bool:
    """True when the outer parentheses enclose the whole string."""
    if not (text.startswith("(") and text.endswith(")")):
        return False
    depth = 0
    for i, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and i < len(text) - 1:
            return False
    return True


_GAUSS_TERM = re.compile(r"([+-]?)(\d*)(\*?i)?")


def _parse_gaussian(text: str) -> GaussInt:
    s = text.replace(" ", "")
    if not s:
        raise EncodingError("empty Gaussian integer")
    re_part = im_part = 0
    pos = 0
    while pos < len(s):
        m = _GAUSS_TERM.match(s, pos)
        sign, digits, unit = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (not digits and not unit) or (pos > 0 and not sign):
            raise EncodingError(f"bad Gaussian integer {text!r} at position {pos}")
        k = int(digits) if digits else 1
        if sign == "-":
            k = -k
        if unit:
            im_part += k
        else:
            re_part += k
        pos = m.end()
    return GaussInt(re_part, im_part)


class _PolyParser:
    _TOKEN = re.compile(r"\s*(?:(\d+)|(.))")

    def __init__(self, text: str, D: PolynomialRing):
        self.text = text
        self.D = D
        self.tokens = []
        for m in self._TOKEN.finditer(text):
            if m.group(1) is not None:
                self.tokens.append(("int", int(m.group(1)), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append((m.group(2), m.group(2), m.start(2)))
        self.i = 0

    def _peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def _take(self, kind):
        if self._peek() != kind:
            pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
            raise EncodingError(f"bad polynomial {self.text!r}: expected {kind!r} at position {pos}")
        tok = self.tokens[self.i]
        self.i += 1
        return tok[1]

    def parse(self) -> Poly:
        if not self.tokens:
            raise EncodingError("empty polynomial")
        terms = {}
        sign = 1
        if self._peek() in ("+", "-"):
            sign = -1 if self._take(self._peek()) == "-" else 1
        while True:
            try:
                coef, deg = self._term()
            except ZeroDivisionError:
                raise EncodingError(f"bad polynomial {self.text!r}: zero denominator") from None
            terms[deg] = terms.get(deg, 0) + sign * coef
            nxt = self._peek()
            if nxt is None:
                break
            if nxt not in ("+", "-"):
                self._take("+")
            sign = -1 if self._take(nxt) == "-" else 1
        top = max(terms)
        coeffs = [terms.get(k, 0) for k in range(top + 1)]
        try:
            return Poly(coeffs, self.D.field)
        except ZeroDivisionError as exc:
            raise EncodingError(f"bad polynomial {self.text!r}: {exc}") from None

    def _coef(self):
        if self._peek() == "(":
            self._take("(")
            n = self._take("int")
            self._take("/")
            d = self._take("int")
            self._take(")")
            return fractions.Fraction(n, d)
        n = self._take("int")
        if self._peek() == "/":
            self._take("/")
            return fractions.Fraction(n, self._take("int"))
        return fractions.Fraction(n)

    def _term(self):
        if self._peek() == "x":
            return fractions.Fraction(1), self._mono()
        coef = self._coef()
        if self._peek() == "*":
            self._take("*")
            return coef, self._mono()
        if self._peek() == "x":
            return coef, self._mono()
        return coef, 0

    def _mono(self) -> int:
        self._take("x")
        if self._peek() == "^":
            self._take("^")
            return self._take("int")
        return 1


# ---------------------------------------------------------------------------
# fractions


def _split_fraction(text: str) -> tuple[str, str] | None:
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return text[:i], text[i + 1:]
    return None


def parse_fraction(D: EuclideanDomain, text: str) -> Fraction:
    text = text.strip()
    if isinstance(D, PolynomialRing):
        parts = _split_fraction(text)
        if parts and _wrapped(parts[0].strip()):
            num, den = parts
        elif parts:
            # "3x+1/2" is a polynomial; "x/1" only makes sense as a fraction
            try:
                return D.frac(parse_element(D, text))
            except EncodingError:
                num, den = parts
        else:
            num, den = text, "1"
    else:
        parts = _split_fraction(text)
        num, den = parts if parts else (text, "1")
    n, d = parse_element(D, num), parse_element(D, den)
    if d == D.zero:
        raise EncodingError(f"zero denominator in {text!r}")
    return D.reduce(n, d)


def encode_fraction(alpha: Fraction) -> dict:
    D = alpha.domain
    return {"num": encode_element(D, alpha.num), "den": encode_element(D, alpha.den)}


def decode_fraction(D: EuclideanDomain, obj) -> Fraction:
    if isinstance(obj, str):
        return parse_fraction(D, obj)
    if isinstance(obj, dict) and "num" in obj:
        n = decode_element(D, obj["num"])
        d = decode_element(D, obj.get("den", 1))
        if d == D.zero:
            raise EncodingError("zero denominator")
        return D.reduce(n, d)
    return D.frac(decode_element(D, obj))


# ---------------------------------------------------------------------------
# certificates


def encode_decomposition(dec: Decomposition) -> dict:
    D = dec.domain
    return {
        "domain": D.selector,
        "target": encode_fraction(dec.target),
        "denominators": [encode_element(D, x) for x in dec.denominators],
        "distinct": dec.distinct,
        "method": dec.method,
    }


def decode_decomposition(obj: dict) -> Decomposition:
    try:
        D = make_domain(obj["domain"])
        target = decode_fraction(D, obj["target"])
        dens = tuple(decode_element(D, x) for x in obj["denominators"])
    except KeyError as exc:
        raise EncodingError(f"certificate missing field {exc}") from None
    return Decomposition(D, target, dens, bool(obj.get("distinct", False)),
                         obj.get("method", "euclid"))


def encode_extension(cert) -> dict:
    Q = make_domain("qx")
    return {
        "domain": "z",
        "g": encode_element(Q, cert.g),
        "clearing_element": str(cert.clearing_element),
        "d_decomposition": encode_decomposition(cert.d_decomposition),
        "final_denominators": [encode_element(Q, h) for h in cert.final_denominators],
    }


def decode_extension(obj: dict):
    from .extension import ExtensionCertificate

    Q = make_domain("qx")
    try:
        return ExtensionCertificate(
            decode_element(Q, obj["g"]),
            int(obj["clearing_element"]),
            decode_decomposition(obj["d_decomposition"]),
            tuple(decode_element(Q, h) for h in obj["final_denominators"]),
        )
    except KeyError as exc:
        raise EncodingError(f"certificate missing field {exc}") from None


def encode_classification(c) -> dict:
    D = c.domain
    y = c.uniformizer_denominator
    w = c.units_field.witness
    return {
        "domain": D.selector,
        "branch": c.branch,
        "uniformizer_den": None if y is None else encode_element(D, y),
        "units_field": c.units_field.is_field,
        "witness": None if w is None else [encode_element(D, u) for u in w],
    }
