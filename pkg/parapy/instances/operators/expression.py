"""Operator expression mini-language.

    expression := term+
    term       := "b(" α ")" | "bd(" α ")" | "E" | "Q" | "G(" a "," b ")"
                | "Groot(" kind "," k ["," l] ")" | "I(" a ")" | "even(" kind "," α "," β ")"

Terms are written as an operator product: "G(1,2) bd(1)" applies bd(1) first.
"""
from __future__ import annotations

from typing import List, Tuple

from pyparsing import Keyword, OneOrMore, Optional, ParseException, StringEnd, Suppress, Word, nums, oneOf

from parapy.framework.errors import ExpressionParseError, InvalidLabelError, ParityError
from parapy.framework.fock import ModelParams, State
from parapy.framework.labels import check_index
from parapy.framework.operator import Operator, Product
from parapy.instances.operators.energy import conformal_energy, spin_orbit
from parapy.instances.operators.even import EVEN_KINDS, EvenOpLabel, even_operator
from parapy.instances.operators.gauge import GaugeRootLabel, LONG_KINDS, SHORT_KINDS, gauge_generator, \
    gauge_root, inversion
from parapy.instances.operators.odd import annihilator, creator

Token = Tuple[str, Tuple]


def _build_grammar():
    integer = Word(nums).setParseAction(lambda tokens: int(tokens[0]))
    lpar, rpar, comma = map(Suppress, "(),")

    def term(keyword: str, *arguments):
        expression = Keyword(keyword)
        if arguments:
            expression += lpar + arguments[0]
            for argument in arguments[1:]:
                expression += comma + argument
            expression += rpar
        return expression.setParseAction(lambda tokens: [(tokens[0], tuple(tokens[1:]))])

    root_kind = oneOf(" ".join(LONG_KINDS + SHORT_KINDS))
    groot = (Keyword("Groot") + lpar + root_kind + comma + integer + Optional(comma + integer) + rpar) \
        .setParseAction(lambda tokens: [(tokens[0], tuple(tokens[1:]))])
    terms = (term("bd", integer) | term("b", integer) | term("E") | term("Q") | groot
             | term("G", integer, integer) | term("I", integer) | term("even", oneOf(" ".join(EVEN_KINDS)),
                                                                       integer, integer))
    return OneOrMore(terms) + StringEnd()


_GRAMMAR = _build_grammar()


def parse_expression(text: str) -> List[Token]:
    try:
        return list(_GRAMMAR.parseString(text, parseAll=True))
    except ParseException as exception:
        raise ExpressionParseError(f"[expression] Cannot parse '{text}': {exception}") from exception


def _token_operator(params: ModelParams, token: Token) -> Operator:
    name, arguments = token
    if name == "b":
        return annihilator(params, check_index("b", arguments[0], params.n))
    if name == "bd":
        return creator(params, check_index("bd", arguments[0], params.n))
    if name == "E":
        return conformal_energy(params)
    if name == "Q":
        return spin_orbit(params)
    if name == "G":
        a, b = (check_index("G", index, params.p) for index in arguments)
        if a == b:
            raise InvalidLabelError(f"[expression] G needs two different indices, got G({a + 1},{b + 1})")
        return gauge_generator(params, a, b)
    if name == "Groot":
        return gauge_root(params, GaugeRootLabel(*arguments))
    if name == "I":
        if params.eps:
            raise ParityError(f"[expression] I(a) requires even p, got p={params.p}")
        return inversion(params, check_index("I", arguments[0], params.p))
    return even_operator(params, EvenOpLabel(*arguments))


def build_operator(params: ModelParams, text: str) -> Operator:
    tokens = parse_expression(text)
    return Product(params, [_token_operator(params, token) for token in tokens], name=text)


def apply_expression(text: str, v: State) -> State:
    return build_operator(v.params, text)(v)
