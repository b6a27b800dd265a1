"""
Parser for .praaf documents.

The format extends APX with an optional probability argument:

    arg(a).          # certain argument
    arg(c, 0.4).     # probabilistic argument
    att(a, c).       # certain attack
    att(a, c, 0.3).  # probabilistic attack

Statements may share a line or span several; `#` starts a comment that runs
to the end of the line.
"""
import bisect
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from praaf.errors import ParseError, Violation
from praaf.models import AttackEdge, PrAAF, is_argument_id, to_probability

logger = logging.getLogger(__name__)

_STATEMENT = re.compile(r"(?P<predicate>[A-Za-z_]\w*)\s*\((?P<body>[^()#]*)\)\s*\.")
_PROBABILITY = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_WHITESPACE = re.compile(r"\s+")
_COMMENT = re.compile(r"#[^\n]*")


@dataclass(frozen=True)
class Statement:
    """One declaration or comment of a document, with its source position"""
    kind: str
    ids: Tuple[str, ...] = ()
    probability: Optional[str] = None
    line: int = 0
    column: int = 0
    text: str = ""


@dataclass
class PraafDocument:
    """The ordered statements of a .praaf document"""
    statements: List[Statement] = field(default_factory=list)

    @property
    def declarations(self) -> List[Statement]:
        return [s for s in self.statements if s.kind != 'comment']


class _Positions:
    """Translate string offsets into 1-based line and column numbers"""

    def __init__(self, text: str):
        self.line_starts = [0] + [i + 1 for i, char in enumerate(text) if char == '\n']

    def __call__(self, offset: int) -> Tuple[int, int]:
        line = bisect.bisect_right(self.line_starts, offset) - 1
        return line + 1, offset - self.line_starts[line] + 1


def _normalize(text: str) -> str:
    return text.replace('\r\n', '\n').replace('\r', '\n')


def parse_document(text: str) -> PraafDocument:
    """
    Split a document into positioned statements.

    Raises:
        ParseError: On the first syntax error
    """
    text = _normalize(text)
    position = _Positions(text)
    document = PraafDocument()

    offset = 0
    while offset < len(text):
        blank = _WHITESPACE.match(text, offset)
        if blank:
            offset = blank.end()
            continue

        line, column = position(offset)
        comment = _COMMENT.match(text, offset)
        if comment:
            document.statements.append(
                Statement(kind='comment', line=line, column=column, text=comment.group()[1:].strip())
            )
            offset = comment.end()
            continue

        statement = _STATEMENT.match(text, offset)
        if not statement:
            snippet = text[offset:offset + 20].split('\n')[0]
            error = Violation("syntax", f"'{snippet}'", "expected arg(...). or att(...).", line, column)
            logger.error(f"Syntax error: {error}")
            raise ParseError([error])

        predicate = statement.group('predicate')
        if predicate not in ('arg', 'att'):
            raise ParseError([
                Violation("unknown-predicate", predicate, "only arg and att are allowed", line, column)
            ])
        parts = [part.strip() for part in statement.group('body').split(',')]
        arity = 1 if predicate == 'arg' else 2
        if len(parts) not in (arity, arity + 1):
            raise ParseError([
                Violation("syntax", statement.group(), f"{predicate} takes {arity} ids and an optional probability", line, column)
            ])
        document.statements.append(Statement(
            kind=predicate,
            ids=tuple(parts[:arity]),
            probability=parts[arity] if len(parts) > arity else None,
            line=line,
            column=column,
            text=statement.group()
        ))
        offset = statement.end()

    return document


def _probability(statement: Statement, location: str, exact: bool) -> Tuple[object, List[Violation]]:
    if statement.probability is None:
        return to_probability(1, exact), []
    literal = statement.probability
    if not _PROBABILITY.fullmatch(literal):
        return None, [Violation("syntax", location, f"'{literal}' is not a decimal probability", statement.line, statement.column)]
    value = to_probability(literal, exact)
    if value == 0:
        return None, [Violation("zero-probability", location, "zero probability is redundant; remove the element", statement.line, statement.column)]
    if value < 0 or value > 1:
        return None, [Violation("probability-out-of-range", location, f"probability {literal} is outside (0,1]", statement.line, statement.column)]
    return value, []


def parse_praaf(text: str, exact: bool = False) -> PrAAF:
    """
    Parse a .praaf document into a validated PrAAF.

    Args:
        text: The document
        exact: Read probabilities as fractions

    Returns:
        PrAAF: The framework

    Raises:
        ParseError: With every syntax, id, duplicate, endpoint and probability error found
    """
    document = parse_document(text)
    violations: List[Violation] = []
    p_args: Dict[str, object] = {}
    p_atts: Dict[AttackEdge, object] = {}
    attacks: List[Tuple[AttackEdge, Statement]] = []
    seen_args: Set[str] = set()
    seen_attacks: Set[AttackEdge] = set()

    for statement in document.declarations:
        location = statement.text
        bad_ids = [i for i in statement.ids if not is_argument_id(i)]
        if bad_ids:
            violations.append(Violation("invalid-id", location, f"invalid argument id '{bad_ids[0]}'", statement.line, statement.column))
            continue
        value, problems = _probability(statement, location, exact)
        violations.extend(problems)

        if statement.kind == 'arg':
            argument = statement.ids[0]
            if argument in seen_args:
                violations.append(Violation("duplicate-declaration", location, f"argument '{argument}' declared twice", statement.line, statement.column))
                continue
            seen_args.add(argument)
            if value is not None:
                p_args[argument] = value
        else:
            edge = AttackEdge(*statement.ids)
            if edge in seen_attacks:
                violations.append(Violation("duplicate-declaration", location, f"attack {edge} declared twice", statement.line, statement.column))
                continue
            seen_attacks.add(edge)
            attacks.append((edge, statement))
            if value is not None:
                p_atts[edge] = value

    for edge, statement in attacks:
        for endpoint in (edge.source, edge.target):
            if endpoint not in seen_args:
                violations.append(Violation("unknown-endpoint", statement.text, f"unknown endpoint '{endpoint}'", statement.line, statement.column))
                break

    if violations:
        logger.error(f"Document has {len(violations)} errors, first: {violations[0]}")
        raise ParseError(violations)

    praaf = PrAAF(args=frozenset(p_args), p_args=p_args, atts=frozenset(p_atts), p_atts=p_atts)
    logger.debug(f"Parsed {len(praaf.args)} arguments and {len(praaf.atts)} attacks")
    return praaf
