"""
Reader for the conjunctive QF_NRA slice of SMT-LIB 2.

The text is tokenized into s-expressions that remember their line and
column. parse() walks the commands and flattens each assertion into a list
of atoms (two real terms and a relation); anything outside the supported
slice raises UnsupportedError at the offending position.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple, Union

from ...common.errors import ParseError, UnsupportedError
from ..engine import Relation

SUPPORTED_LOGICS = ("QF_NRA",)

IGNORED_COMMANDS = ("set-info", "set-option", "get-info", "get-option", "echo")

_RELATIONS = {"<", "<=", ">", ">=", "="}


class Token(NamedTuple):
    text: str
    line: int
    column: int
    quoted: bool = False


@dataclass
class SExpr:
    items: List[Union[Token, "SExpr"]]
    line: int
    column: int

    @property
    def head(self) -> Optional[str]:
        if self.items and isinstance(self.items[0], Token) and not self.items[0].quoted:
            return self.items[0].text
        return None


Node = Union[Token, SExpr]


class Tokenizer:
    """Splits SMT-LIB text into tokens following the LISP rules."""

    def __init__(self, text: str):
        self.text = text
        self.line = 1
        self.column = 1
        self.index = 0

    def _advance(self) -> str:
        char = self.text[self.index]
        self.index += 1
        if char == "\n":
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        return char

    def _peek(self) -> str:
        return self.text[self.index] if self.index < len(self.text) else ""

    def tokens(self) -> Iterator[Token]:
        while self.index < len(self.text):
            char = self._peek()
            line, column = self.line, self.column
            if char.isspace():
                self._advance()
            elif char == ";":
                while self._peek() and self._peek() != "\n":
                    self._advance()
            elif char in "()":
                self._advance()
                yield Token(char, line, column)
            elif char == "|":
                self._advance()
                chars = []
                while self._peek() != "|":
                    if not self._peek():
                        raise ParseError("unterminated quoted symbol", line, column)
                    chars.append(self._advance())
                self._advance()
                yield Token("".join(chars), line, column, quoted=True)
            elif char == '"':
                self._advance()
                chars = []
                while True:
                    if not self._peek():
                        raise ParseError("unterminated string literal", line, column)
                    current = self._advance()
                    if current == '"':
                        if self._peek() == '"':
                            chars.append(self._advance())
                            continue
                        break
                    chars.append(current)
                yield Token('"' + "".join(chars) + '"', line, column, quoted=True)
            else:
                chars = []
                while self._peek() and not self._peek().isspace() and self._peek() not in '()|";':
                    chars.append(self._advance())
                yield Token("".join(chars), line, column)


def read_sexprs(text: str) -> List[Node]:
    """All top-level s-expressions of ``text``."""
    stack: List[SExpr] = []
    top: List[Node] = []
    for token in Tokenizer(text).tokens():
        if token.text == "(" and not token.quoted:
            stack.append(SExpr([], token.line, token.column))
        elif token.text == ")" and not token.quoted:
            if not stack:
                raise ParseError("unexpected ')'", token.line, token.column)
            done = stack.pop()
            (stack[-1].items if stack else top).append(done)
        else:
            (stack[-1].items if stack else top).append(token)
    if stack:
        raise ParseError("missing ')'", stack[-1].line, stack[-1].column)
    return top


def position(node: Node) -> Tuple[int, int]:
    return node.line, node.column


def _fail(node: Node, message: str, unsupported: bool = False):
    error = UnsupportedError if unsupported else ParseError
    raise error(message, *position(node))


# ----------------------------------------------------------------------
# Scripts
# ----------------------------------------------------------------------

@dataclass
class Binding:
    """A let-bound term together with the scope it was bound in."""

    term: Node
    scope: Dict[str, "Binding"]


@dataclass
class Atom:
    """``lhs relation rhs`` over real terms, with the let scope of both sides."""

    relation: Relation
    lhs: Node
    rhs: Node
    scope: Dict[str, Binding]
    line: int
    column: int

    @classmethod
    def constant(cls, holds: bool, node: Node) -> "Atom":
        zero = Token("0", *position(node))
        return cls(Relation.EQ if holds else Relation.NE, zero, zero, {}, *position(node))


@dataclass
class Command:
    name: str
    args: List[Node]
    line: int
    column: int


@dataclass
class SourceScript:
    """The supported content of an SMT-LIB script."""

    logic: Optional[str] = None
    variables: List[str] = field(default_factory=list)
    atoms: List[Atom] = field(default_factory=list)
    commands: List[Command] = field(default_factory=list)
    check_sat: bool = False
    get_model: bool = False


def _symbol(node: Node, what: str) -> str:
    if not isinstance(node, Token) or node.text in "()":
        _fail(node, f"expected {what}")
    return node.text


def parse(text: str) -> SourceScript:
    """Parse SMT-LIB text; raises ParseError or UnsupportedError with a position."""
    script = SourceScript()
    for node in read_sexprs(text):
        if not isinstance(node, SExpr) or node.head is None:
            _fail(node, "expected a command")
        name = node.head
        args = node.items[1:]
        script.commands.append(Command(name, args, node.line, node.column))
        if name in IGNORED_COMMANDS:
            continue
        if name == "set-logic":
            logic = _symbol(args[0] if args else node, "a logic name")
            if logic not in SUPPORTED_LOGICS:
                _fail(node, f"unsupported logic {logic}", unsupported=True)
            script.logic = logic
        elif name in ("declare-fun", "declare-const"):
            _declare(script, node, args, name == "declare-fun")
        elif name == "assert":
            if len(args) != 1:
                _fail(node, "assert takes exactly one term")
            _flatten(args[0], True, {}, script)
        elif name == "check-sat":
            if script.check_sat:
                _fail(node, "more than one check-sat", unsupported=True)
            script.check_sat = True
        elif name == "get-model":
            script.get_model = True
        elif name == "exit":
            break
        else:
            _fail(node, f"unsupported command {name}", unsupported=True)
    return script


def _declare(script: SourceScript, node: SExpr, args: List[Node], with_domain: bool) -> None:
    expected = 3 if with_domain else 2
    if len(args) != expected:
        _fail(node, "malformed declaration")
    var = _symbol(args[0], "a variable name")
    if with_domain and not (isinstance(args[1], SExpr) and not args[1].items):
        _fail(args[1], "function symbols with arguments are not supported", unsupported=True)
    sort = args[-1]
    if not isinstance(sort, Token) or sort.text != "Real":
        _fail(sort, f"unsupported sort {sort.text if isinstance(sort, Token) else '(...)'}", unsupported=True)
    if var in script.variables:
        _fail(args[0], f"variable {var} declared twice")
    script.variables.append(var)


def _flatten(term: Node, positive: bool, scope: Dict[str, Binding], script: SourceScript) -> None:
    """Append the atoms whose conjunction is equivalent to ``term`` (negated unless positive)."""
    if isinstance(term, Token):
        if term.text in ("true", "false"):
            if (term.text == "true") != positive:
                script.atoms.append(Atom.constant(False, term))
            return
        if term.text in scope:
            binding = scope[term.text]
            _flatten(binding.term, positive, binding.scope, script)
            return
        _fail(term, f"unsupported boolean term {term.text}", unsupported=True)

    head = term.head
    args = term.items[1:]
    if head == "!":
        if not args:
            _fail(term, "empty annotation")
        _flatten(args[0], positive, scope, script)
    elif head == "let":
        _flatten(args[-1] if args else term, positive, _bind(term, args, scope), script)
    elif head == "not":
        if len(args) != 1:
            _fail(term, "not takes exactly one argument")
        _flatten(args[0], not positive, scope, script)
    elif head in ("and", "or"):
        conjunctive = (head == "and") == positive
        if not conjunctive and len(args) > 1:
            _fail(term, "disjunctions are not supported", unsupported=True)
        for arg in args:
            _flatten(arg, positive, scope, script)
    elif head == "=>":
        if positive or len(args) != 2:
            _fail(term, "implications are not supported", unsupported=True)
        _flatten(args[0], True, scope, script)
        _flatten(args[1], False, scope, script)
    elif head in _RELATIONS or head == "distinct":
        _relation_atoms(term, head, args, positive, scope, script)
    else:
        _fail(term, f"unsupported operator {head or '(...)'}", unsupported=True)


def _bind(term: SExpr, args: List[Node], scope: Dict[str, Binding]) -> Dict[str, Binding]:
    if len(args) != 2 or not isinstance(args[0], SExpr):
        _fail(term, "malformed let")
    inner = dict(scope)
    for pair in args[0].items:
        if not isinstance(pair, SExpr) or len(pair.items) != 2:
            _fail(pair, "malformed let binding")
        inner[_symbol(pair.items[0], "a bound name")] = Binding(pair.items[1], scope)
    return inner


def _relation_atoms(term: SExpr, head: str, args: List[Node], positive: bool,
                    scope: Dict[str, Binding], script: SourceScript) -> None:
    if len(args) < 2:
        _fail(term, f"{head} needs at least two arguments")
    if head == "distinct":
        pairs = [(a, b) for i, a in enumerate(args) for b in args[i + 1:]]
        relation = Relation.NE
    else:
        pairs = list(zip(args, args[1:]))
        relation = Relation.parse(head)
    if not positive:
        if len(pairs) > 1:
            _fail(term, f"negated chained {head} is a disjunction", unsupported=True)
        relation = relation.negated()
    for lhs, rhs in pairs:
        script.atoms.append(Atom(relation, lhs, rhs, scope, term.line, term.column))
