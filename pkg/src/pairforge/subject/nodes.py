"""AST node types for the subject language.

Nodes keep byte spans into the source they were parsed from (synthetic nodes
built by transforms carry the empty span). Statements own their attached
comments so rewrites can carry them through rendering.
"""

from __future__ import annotations

from dataclasses import dataclass, field

EMPTY_SPAN = (-1, -1)


@dataclass
class Node:
    kind = "node"
    span: tuple[int, int] = field(default=EMPTY_SPAN, init=False, repr=False)

    def children(self):
        for name in getattr(self, "_child_fields", ()):
            value = getattr(self, name)
            if isinstance(value, Node):
                yield value
            elif isinstance(value, list):
                for item in value:
                    if isinstance(item, Node):
                        yield item

    def walk(self):
        yield self
        for child in self.children():
            yield from child.walk()


@dataclass
class Stmt(Node):
    kind = "statement"

    def __post_init__(self):
        self.leading_comments: list[str] = []
        self.trailing_comment: str | None = None


# --- expressions -----------------------------------------------------------

@dataclass
class Name(Node):
    kind = "name"
    id: str = ""


@dataclass
class Literal(Node):
    """number | string | boolean | none literal; text is the source spelling."""
    kind = "literal"
    lit_kind: str = "number"
    text: str = ""


@dataclass
class TupleExpr(Node):
    kind = "tuple"
    _child_fields = ("elts",)
    elts: list[Node] = field(default_factory=list)


@dataclass
class ListExpr(Node):
    kind = "list"
    _child_fields = ("elts",)
    elts: list[Node] = field(default_factory=list)


@dataclass
class SetExpr(Node):
    kind = "set"
    _child_fields = ("elts",)
    elts: list[Node] = field(default_factory=list)


@dataclass
class DictExpr(Node):
    kind = "dict"
    _child_fields = ("keys", "values")
    keys: list[Node] = field(default_factory=list)  # Starred sentinel for **
    values: list[Node] = field(default_factory=list)


@dataclass
class Starred(Node):
    kind = "starred"
    _child_fields = ("value",)
    stars: str = "*"
    value: Node | None = None


@dataclass
class CompFor(Node):
    kind = "comp-for"
    _child_fields = ("target", "iter", "ifs")
    target: Node | None = None
    iter: Node | None = None
    ifs: list[Node] = field(default_factory=list)


@dataclass
class Comprehension(Node):
    kind = "comprehension"
    _child_fields = ("element", "value", "generators")
    comp_kind: str = "list"  # list | set | dict | genexp
    element: Node | None = None  # key for dict comps
    value: Node | None = None  # dict comps only
    generators: list[CompFor] = field(default_factory=list)


@dataclass
class Call(Node):
    kind = "call"
    _child_fields = ("func", "args", "kwarg_values")
    func: Node | None = None
    args: list[Node] = field(default_factory=list)  # positional, may hold Starred
    kwarg_names: list[str | None] = field(default_factory=list)  # None => **
    kwarg_values: list[Node] = field(default_factory=list)


@dataclass
class Attribute(Node):
    kind = "attribute"
    _child_fields = ("value",)
    value: Node | None = None
    attr: str = ""


@dataclass
class Subscript(Node):
    kind = "subscript"
    _child_fields = ("value", "index")
    value: Node | None = None
    index: Node | None = None


@dataclass
class SliceExpr(Node):
    kind = "slice"
    _child_fields = ("lower", "upper", "step")
    lower: Node | None = None
    upper: Node | None = None
    step: Node | None = None
    has_step_colon: bool = False


@dataclass
class BinOp(Node):
    kind = "binary-op"
    _child_fields = ("left", "right")
    left: Node | None = None
    op: str = "+"
    right: Node | None = None


@dataclass
class BoolOp(Node):
    kind = "bool-op"
    _child_fields = ("values",)
    op: str = "and"
    values: list[Node] = field(default_factory=list)


@dataclass
class UnaryOp(Node):
    kind = "unary-op"
    _child_fields = ("operand",)
    op: str = "-"
    operand: Node | None = None


@dataclass
class Compare(Node):
    _child_fields = ("left", "comparators")
    left: Node | None = None
    ops: list[str] = field(default_factory=list)
    comparators: list[Node] = field(default_factory=list)

    @property
    def kind(self):
        if self.ops and all(op in ("is", "is not") for op in self.ops):
            return "identity-op"
        return "comparison"


@dataclass
class IfExp(Node):
    kind = "conditional-expr"
    _child_fields = ("body", "test", "orelse")
    body: Node | None = None
    test: Node | None = None
    orelse: Node | None = None


@dataclass
class Lambda(Node):
    kind = "lambda"
    _child_fields = ("params", "body")
    params: list["Param"] = field(default_factory=list)
    body: Node | None = None


# --- statements ------------------------------------------------------------

@dataclass
class Param(Node):
    kind = "parameter"
    _child_fields = ("annotation", "default")
    name: str = ""
    annotation: Node | None = None
    default: Node | None = None
    star: str = ""  # '', '*', '**'


@dataclass
class Module(Node):
    kind = "module"
    _child_fields = ("body",)
    body: list[Stmt] = field(default_factory=list)
    dangling_comments: list[str] = field(default_factory=list)


@dataclass
class FunctionDef(Stmt):
    kind = "function-def"
    _child_fields = ("params", "returns", "body")
    name: str = ""
    params: list[Param] = field(default_factory=list)
    returns: Node | None = None
    body: list[Stmt] = field(default_factory=list)


@dataclass
class Assign(Stmt):
    kind = "assignment"
    _child_fields = ("targets", "value")
    targets: list[Node] = field(default_factory=list)
    value: Node | None = None


@dataclass
class AnnAssign(Stmt):
    kind = "annotated-assignment"
    _child_fields = ("target", "annotation", "value")
    target: Node | None = None
    annotation: Node | None = None
    value: Node | None = None


@dataclass
class AugAssign(Stmt):
    kind = "augmented-assignment"
    _child_fields = ("target", "value")
    target: Node | None = None
    op: str = "+="
    value: Node | None = None


@dataclass
class ExprStmt(Stmt):
    kind = "expression-statement"
    _child_fields = ("value",)
    value: Node | None = None


@dataclass
class Return(Stmt):
    kind = "return"
    _child_fields = ("value",)
    value: Node | None = None


@dataclass
class If(Stmt):
    kind = "if-branch"
    _child_fields = ("test", "body", "orelse")
    test: Node | None = None
    body: list[Stmt] = field(default_factory=list)
    orelse: list[Stmt] = field(default_factory=list)
    is_elif: bool = False  # spelled 'elif' in the source; rendering keeps it


@dataclass
class While(Stmt):
    kind = "while-loop"
    _child_fields = ("test", "body")
    test: Node | None = None
    body: list[Stmt] = field(default_factory=list)


@dataclass
class For(Stmt):
    kind = "for-loop"
    _child_fields = ("target", "iter", "body")
    target: Node | None = None
    iter: Node | None = None
    body: list[Stmt] = field(default_factory=list)


@dataclass
class Break(Stmt):
    kind = "break"


@dataclass
class Continue(Stmt):
    kind = "continue"


@dataclass
class Pass(Stmt):
    kind = "pass"


@dataclass
class Import(Stmt):
    kind = "import"
    names: list[tuple[str, str | None]] = field(default_factory=list)


@dataclass
class FromImport(Stmt):
    kind = "from-import"
    module: str = ""
    names: list[tuple[str, str | None]] = field(default_factory=list)


@dataclass
class Assert(Stmt):
    kind = "assert"
    _child_fields = ("test", "msg")
    test: Node | None = None
    msg: Node | None = None


@dataclass
class Opaque(Stmt):
    """Verbatim pass-through for constructs outside the supported grammar."""
    kind = "opaque"
    text: str = ""


LOOP_KINDS = ("for-loop", "while-loop")
BRANCH_KINDS = ("if-branch",)


def structurally_equal(a: Node, b: Node) -> bool:
    """Kind-level tree equality, ignoring spans and comments."""
    if a.kind != b.kind:
        return False
    salient = {
        "name": lambda n: n.id,
        "literal": lambda n: (n.lit_kind, _canon_literal(n)),
        "binary-op": lambda n: n.op,
        "bool-op": lambda n: n.op,
        "unary-op": lambda n: n.op,
        "comparison": lambda n: tuple(n.ops),
        "identity-op": lambda n: tuple(n.ops),
        "augmented-assignment": lambda n: n.op,
        "function-def": lambda n: n.name,
        "parameter": lambda n: (n.name, n.star),
        "attribute": lambda n: n.attr,
        "starred": lambda n: n.stars,
        "import": lambda n: tuple(n.names),
        "from-import": lambda n: (n.module, tuple(n.names)),
        "comprehension": lambda n: n.comp_kind,
        "call": lambda n: tuple(n.kwarg_names),
        "opaque": lambda n: " ".join(n.text.split()),
    }
    extract = salient.get(a.kind)
    if extract and extract(a) != extract(b):
        return False
    ca, cb = list(a.children()), list(b.children())
    if len(ca) != len(cb):
        return False
    return all(structurally_equal(x, y) for x, y in zip(ca, cb))


def _canon_literal(n: Literal):
    if n.lit_kind == "string":
        return _string_value(n.text)
    if n.lit_kind == "number":
        try:
            return float(n.text) if ("." in n.text or "e" in n.text.lower()) and not n.text.lower().startswith("0x") else int(n.text, 0)
        except ValueError:
            return n.text
    return n.text


def _string_value(text: str) -> str:
    """Concatenated unquoted content of a string token (or an implicit
    concatenation of several), with prefixes folded in case-insensitively."""
    contents: list[str] = []
    prefixes: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in "'\"":
            quote = text[i:i + 3] if text[i:i + 3] in ("'''", '"""') else ch
            i += len(quote)
            start = i
            while i < n:
                if text[i] == "\\":
                    i += 2
                    continue
                if text.startswith(quote, i):
                    break
                i += 1
            contents.append(text[start:i])
            i += len(quote)
        elif ch.isalpha():
            start = i
            while i < n and text[i].isalpha():
                i += 1
            prefixes.append(text[start:i].lower())
        else:
            i += 1
    return "".join(sorted(prefixes)) + "\x00" + "".join(contents)
