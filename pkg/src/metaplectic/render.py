"""Rendering of Laurent polynomials: plain text, JSON, LaTeX.

The plain form round-trips through the expression parser; JSON terms are
sorted lexicographically by exponent vector; comparison of anything rendered
is always done symbolically upstream, so formatting is presentation only.
"""

from __future__ import annotations

from .group_algebra import LaurentElement
from .scalars import scalar_to_json, scalar_to_str


def _term_plain(field, exp, coeff, var_prefix="x") -> str:
    xs = []
    for i, e in enumerate(exp):
        if e == 0:
            continue
        xs.append(f"{var_prefix}{i + 1}" + (f"^{e}" if e != 1 else ""))
    cs = scalar_to_str(coeff)
    if not xs:
        return cs if ("/" in cs or not cs.startswith("(")) else cs
    mono = "*".join(xs)
    if cs == "1":
        return mono
    if cs == "-1":
        return f"-{mono}"
    if any(op in cs for op in (" + ", " - ", "/")):
        cs = f"({cs})"
    return f"{cs}*{mono}"


def laurent_to_plain(f: LaurentElement, var_prefix="x") -> str:
    if not f.terms:
        return "0"
    bits = []
    for exp in sorted(f.terms, reverse=True):
        t = _term_plain(f.field, exp, f.terms[exp], var_prefix)
        if bits:
            bits.append("- " + t[1:] if t.startswith("-") else "+ " + t)
        else:
            bits.append(t)
    return " ".join(bits)


def laurent_to_json(f: LaurentElement) -> dict:
    terms = [{"exp": list(exp), "coeff": scalar_to_json(f.terms[exp])}
             for exp in sorted(f.terms)]
    return {"vars": list(getattr(f.field, "var_names", ())), "terms": terms}


def _scalar_latex(field, s) -> str:
    from .scalars import poly_to_str, _is_const_one
    s = s.reduced()

    def pretty(p):
        out = poly_to_str(field, p).replace("*", " ")
        out = out.replace("k_sh", "k_{sh}").replace("k_lg", "k_{lg}")
        out = out.replace("g1_", "g_{1,").replace("g2_", "g_{2,")
        if "g_{1," in out or "g_{2," in out:
            out = out.replace(",sh", ",sh}").replace(",lg", ",lg}")
        return out

    if _is_const_one(s.den):
        return pretty(s.num)
    return r"\frac{%s}{%s}" % (pretty(s.num), pretty(s.den))


def laurent_to_latex(f: LaurentElement, var_prefix="x") -> str:
    if not f.terms:
        return "0"
    bits = []
    for exp in sorted(f.terms, reverse=True):
        c = _scalar_latex(f.field, f.terms[exp])
        xs = "".join(
            f"{var_prefix}_{{{i + 1}}}" + (f"^{{{e}}}" if e != 1 else "")
            for i, e in enumerate(exp) if e)
        if not xs:
            term = c
        elif c == "1":
            term = xs
        elif c == "-1":
            term = "-" + xs
        else:
            wrapped = c if c.startswith(r"\frac") else f"({c})"
            term = f"{wrapped}\\, {xs}"
        if bits:
            bits.append("- " + term[1:] if term.startswith("-")
                        else "+ " + term)
        else:
            bits.append(term)
    return " ".join(bits)


def render_laurent(f: LaurentElement, fmt: str, var_prefix="x"):
    if fmt == "plain":
        return laurent_to_plain(f, var_prefix)
    if fmt == "json":
        return laurent_to_json(f)
    if fmt == "latex":
        return laurent_to_latex(f, var_prefix)
    raise ValueError(f"unknown format {fmt!r}")
