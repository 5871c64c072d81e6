"""
Element Grammar
Parsing and formatting of group elements: "pi^k s_i1 ... s_il", "pi[c1,...]" and type A windows "[w1,...,wn]"
"""

import re
from typing import List, Optional, Tuple

from .errors import AffineKLError, ElementSyntaxError, InvalidWindowError
from .finite_weyl import pi_with_translation
from .group_element import GroupElement, identity, pi_power
from .root_datum import RootDatum

_TOKEN = re.compile(
    r"""
    (?P<space>[\s*·]+)
  | (?P<identity>(?:e|id)\b)
  | (?P<pi_vector>pi\s*\[(?P<pi_body>[^\]]*)\])
  | (?P<pi>pi(?:\s*\^\s*(?P<pi_exp>[+-]?\d+|\{[+-]?\d+\}))?)
  | (?P<gen>s_?(?:\{(?P<gen_braced>\d+)\}|(?P<gen_plain>\d+)))
  | (?P<window>\[(?P<window_body>[^\]]*)\])
    """,
    re.VERBOSE,
)


def _int_list(body: str, offset: int) -> Tuple[int, ...]:
    if not body.strip():
        return ()
    values = []
    for part in body.split(","):
        try:
            values.append(int(part))
        except ValueError:
            raise ElementSyntaxError(f"'{part.strip()}' is not an integer", offset)
    return tuple(values)


def _tokens(text: str) -> List[Tuple[str, re.Match]]:
    pos = 0
    found = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ElementSyntaxError(f"unexpected '{text[pos]}'", pos)
        if m.lastgroup != "space":
            found.append((m.lastgroup, m))
        pos = m.end()
    return found


def _factor(kind: str, m: re.Match, datum: RootDatum) -> GroupElement:
    start = m.start()
    if kind == "identity":
        return identity(datum)
    if kind == "gen":
        i = int(m.group("gen_braced") or m.group("gen_plain"))
        if i not in datum.affine_indices:
            raise ElementSyntaxError(f"generator s{i} out of range 0..{datum.rank}", start)
        return identity(datum).left_reflect(i)
    if kind == "pi":
        if not datum.is_type_a:
            raise ElementSyntaxError(f"pi^k needs a type A datum; write pi[...] for {datum.selector}", start)
        exponent = (m.group("pi_exp") or "1").strip("{}")
        return pi_power(datum, int(exponent))
    if kind == "pi_vector":
        weight = _int_list(m.group("pi_body"), start)
        if len(weight) != datum.lattice_dim:
            raise ElementSyntaxError(f"pi[...] needs {datum.lattice_dim} coordinates", start)
        try:
            return pi_with_translation(datum, weight)
        except AffineKLError as e:
            raise ElementSyntaxError(str(e), start)
    from .type_a import element_of

    if not datum.is_type_a:
        raise ElementSyntaxError(f"window notation needs a type A datum, got {datum.selector}", start)
    try:
        return element_of(datum, _int_list(m.group("window_body"), start))
    except InvalidWindowError as e:
        raise ElementSyntaxError(str(e), start)


def parse_element(text: str, datum: RootDatum) -> GroupElement:
    """
    Read an element expression.

    Factors are multiplied left to right; an empty string is the identity.
    Windows must stand alone.
    """
    tokens = _tokens(text)
    if any(kind == "window" for kind, _ in tokens) and len(tokens) > 1:
        raise ElementSyntaxError("a window cannot be combined with other factors", tokens[1][1].start())
    result: Optional[GroupElement] = None
    for kind, m in tokens:
        factor = _factor(kind, m, datum)
        result = factor if result is None else result * factor
    return identity(datum) if result is None else result


def format_element(g: GroupElement) -> str:
    """Normal form: Pi-token, then the lexicographically greedy reduced word"""
    return g.reduced_word().format()
