"""Batch command-line front end.

A script declares a coefficient field, a ring, and named objects, then
issues commands against them::

    field QQ;
    ring QQ[x, y];
    ideal I = x^2, y;
    point P = (0, 0);
    noeth I at P;

Statements end with ';' and '#' starts a comment.  Commands may bind
their resulting ideal or polynomial to a new name with ``as N``.  Output
is deterministic: generator lists are reduced Groebner bases sorted
ascending by leading monomial, and JSON reports carry ``schema: 1``.

Exit codes: 0 ok, 1 failed assertion or failed chain verdict, 2 input
error, 3 unsupported computation.
"""

import argparse
import json
import sys

from .dualspace import noetherian_operators
from .errors import (
    NoethopsError,
    ParseError,
    UndeclaredNameError,
    UnsupportedCharacteristicError,
)
from .fields import GF, QQ, AlgExtField, RatFuncField
from .groebner import Ideal, MonomialOrder, ideal_equal, intersect, saturate
from .poly import (
    END,
    INT,
    NAME,
    SYM,
    PolyRing,
    TokenStream,
    _PolyParser,
    to_unipoly,
    tokenize,
)
from .powers import (
    PrimeData,
    chain_check,
    diff_power_classical_graded,
    diff_power_new_point,
    diff_power_new_univariate,
    symbolic_power,
)

SCHEMA_VERSION = 1


def _strip_comments(text):
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def parse_field_descriptor(ts):
    """QQ | Fp(p) | <field>(t) | ext(<base>, u, <minpoly>)"""
    tok = ts.expect(NAME)
    if tok[1] == "QQ":
        field = QQ
    elif tok[1] == "Fp":
        ts.expect(SYM, "(")
        p = ts.expect(INT)[1]
        ts.expect(SYM, ")")
        try:
            field = GF(p)
        except ValueError as exc:
            raise ParseError(str(exc), tok[2])
    elif tok[1] == "ext":
        ts.expect(SYM, "(")
        base = parse_field_descriptor(ts)
        ts.expect(SYM, ",")
        gen = ts.expect(NAME)[1]
        ts.expect(SYM, ",")
        scratch = PolyRing(base, [gen])
        minpoly = _PolyParser(ts, scratch).parse_expr()
        ts.expect(SYM, ")")
        try:
            field = AlgExtField(base, gen, to_unipoly(minpoly))
        except ValueError as exc:
            raise ParseError(str(exc), tok[2])
    else:
        raise ParseError(f"unknown field descriptor {tok[1]!r}", tok[2])
    while ts.peek()[:2] == (SYM, "("):
        save = ts.i
        ts.next()
        var = ts.accept(NAME)
        if var is None or ts.peek()[:2] != (SYM, ")"):
            ts.i = save
            break
        ts.next()
        field = RatFuncField(field, var[1])
    return field


class _ScriptPolyParser(_PolyParser):
    """Polynomial expressions inside scripts may also reference declared
    poly objects by name (ring variables and field generators win)."""

    def __init__(self, ts, ring, script):
        super().__init__(ts, ring)
        self.script = script

    def parse_atom(self):
        tok = self.ts.peek()
        if (
            tok[0] == NAME
            and tok[1] not in self.ring.variables
            and tok[1] not in self.generators
        ):
            entry = self.script.objects.get(tok[1])
            if entry is not None and entry[0] == "poly" and entry[1] is not None:
                self.ts.next()
                return entry[1]
        return super().parse_atom()


class Command:
    def __init__(self, kind, pos, bind=None, **payload):
        self.kind = kind
        self.pos = pos
        self.bind = bind
        self.payload = payload

    def __repr__(self):
        return f"Command({self.kind}, {self.payload})"


class Script:
    """Validated script: declared objects plus the command list."""

    def __init__(self, order_kind="grevlex"):
        self.field = None
        self.ring = None
        self.order_kind = order_kind
        self.objects = {}  # name -> (kind, object or None for future bindings)
        self.commands = []

    @property
    def order(self):
        if self.order_kind == "lex":
            return MonomialOrder.lex(self.ring)
        return MonomialOrder.grevlex(self.ring)

    def declare(self, name, kind, obj, pos):
        if name in self.objects:
            raise ParseError(f"name {name!r} already declared", pos)
        self.objects[name] = (kind, obj)

    def lookup(self, name, kinds, pos):
        if name not in self.objects:
            raise UndeclaredNameError(f"undeclared name {name!r}", pos)
        kind, obj = self.objects[name]
        if kind not in kinds:
            raise ParseError(
                f"{name!r} is a {kind}, expected one of {sorted(kinds)}", pos
            )
        return obj

    def as_ideal(self, name, pos):
        obj = self.lookup(name, {"ideal", "prime"}, pos)
        return obj.ideal if isinstance(obj, PrimeData) else obj


class _ScriptParser:
    COMMAND_KINDS = {
        "gb",
        "nf",
        "sat",
        "intersect",
        "noeth",
        "sympow",
        "diffpow",
        "check-zn",
        "assert-equal",
        "assert-member",
    }

    def __init__(self, text, order_kind="grevlex"):
        self.ts = TokenStream(tokenize(_strip_comments(text), symbols="+-*/^(),;=:[]"))
        self.script = Script(order_kind)

    def parse(self):
        while self.ts.peek()[0] != END:
            self.statement()
        if self.script.ring is None and self.script.commands:
            raise ParseError("no ring declared", 0)
        return self.script

    # -- helpers ----------------------------------------------------------

    def _keyword(self):
        tok = self.ts.expect(NAME)
        word = tok[1]
        # hyphenated command names arrive as NAME '-' NAME
        while self.ts.peek()[:2] == (SYM, "-") and f"{word}-" in {"check-", "assert-"}:
            self.ts.next()
            word += "-" + self.ts.expect(NAME)[1]
        return word, tok[2]

    def _require_ring(self, pos):
        if self.script.ring is None:
            raise ParseError("ring must be declared first", pos)
        return self.script.ring

    def _parse_poly(self, pos):
        ring = self._require_ring(pos)
        return _ScriptPolyParser(self.ts, ring, self.script).parse_expr()

    def _parse_constant(self, pos):
        f = self._parse_poly(pos)
        if f.total_degree() > 0:
            raise ParseError("expected a constant coordinate", pos)
        return f.coefficient((0,) * self.script.ring.nvars)

    def _parse_point_literal(self, pos):
        self.ts.expect(SYM, "(")
        coords = [self._parse_constant(pos)]
        while self.ts.accept(SYM, ","):
            coords.append(self._parse_constant(pos))
        self.ts.expect(SYM, ")")
        if len(coords) != self.script.ring.nvars:
            raise ParseError(
                f"point arity {len(coords)} != ring arity {self.script.ring.nvars}", pos
            )
        return tuple(coords)

    def _parse_point_ref(self, pos):
        tok = self.ts.peek()
        if tok[:2] == (SYM, "("):
            return self._parse_point_literal(pos)
        name = self.ts.expect(NAME)
        return self.script.lookup(name[1], {"point"}, name[2])

    def _parse_gens(self, pos):
        gens = [self._parse_poly(pos)]
        while self.ts.accept(SYM, ","):
            gens.append(self._parse_poly(pos))
        return gens

    def _maybe_bind(self, kind):
        if self.ts.peek()[:2] == (NAME, "as"):
            self.ts.next()
            tok = self.ts.expect(NAME)
            self.script.declare(tok[1], kind, None, tok[2])
            return tok[1]
        return None

    def _end(self):
        self.ts.expect(SYM, ";")

    def _add(self, cmd):
        self.script.commands.append(cmd)

    # -- statements -------------------------------------------------------

    def statement(self):
        word, pos = self._keyword()
        handler = {
            "field": self.stmt_field,
            "ring": self.stmt_ring,
            "poly": self.stmt_poly,
            "ideal": self.stmt_ideal,
            "point": self.stmt_point,
            "prime": self.stmt_prime,
            "gb": self.stmt_gb,
            "nf": self.stmt_nf,
            "sat": self.stmt_sat,
            "intersect": self.stmt_intersect,
            "noeth": self.stmt_noeth,
            "sympow": self.stmt_sympow,
            "diffpow": self.stmt_diffpow,
            "check-zn": self.stmt_check_zn,
            "assert-equal": self.stmt_assert_equal,
            "assert-member": self.stmt_assert_member,
        }.get(word)
        if handler is None:
            raise ParseError(f"unknown statement {word!r}", pos)
        handler(pos)

    def stmt_field(self, pos):
        self.script.field = parse_field_descriptor(self.ts)
        self._end()

    def stmt_ring(self, pos):
        if self.script.ring is not None:
            raise ParseError("ring already declared", pos)
        if self.ts.peek()[0] == NAME:
            self.script.field = parse_field_descriptor(self.ts)
        if self.script.field is None:
            raise ParseError("no coefficient field declared", pos)
        self.ts.expect(SYM, "[")
        names = [self.ts.expect(NAME)[1]]
        while self.ts.accept(SYM, ","):
            names.append(self.ts.expect(NAME)[1])
        self.ts.expect(SYM, "]")
        self._end()
        self.script.ring = PolyRing(self.script.field, names)

    def stmt_poly(self, pos):
        name = self.ts.expect(NAME)
        self.ts.expect(SYM, "=")
        f = self._parse_poly(pos)
        self._end()
        self.script.declare(name[1], "poly", f, name[2])

    def stmt_ideal(self, pos):
        name = self.ts.expect(NAME)
        self.ts.expect(SYM, "=")
        gens = self._parse_gens(pos)
        self._end()
        I = Ideal(self.script.ring, gens, self.script.order)
        self.script.declare(name[1], "ideal", I, name[2])

    def stmt_point(self, pos):
        name = self.ts.expect(NAME)
        self.ts.expect(SYM, "=")
        self._require_ring(pos)
        coords = self._parse_point_literal(pos)
        self._end()
        self.script.declare(name[1], "point", coords, name[2])

    def stmt_prime(self, pos):
        name = self.ts.expect(NAME)
        self.ts.expect(SYM, "=")
        gens = self._parse_gens(pos)
        self.ts.expect(SYM, ":")
        kind_tok = self.ts.expect(NAME)
        ring = self.script.ring
        try:
            if kind_tok[1] == "point":
                point = self._parse_point_ref(kind_tok[2])
                prime = PrimeData.rational_point(
                    ring, point, ideal=Ideal(ring, gens, self.script.order)
                )
            elif kind_tok[1] == "univariate":
                if len(gens) != 1:
                    raise ParseError(
                        "univariate primes take a single generator", kind_tok[2]
                    )
                prime = PrimeData.univariate(gens[0])
            elif kind_tok[1] == "witness":
                witness = self._parse_poly(kind_tok[2])
                prime = PrimeData.with_witness(
                    Ideal(ring, gens, self.script.order), witness
                )
            else:
                raise ParseError(f"unknown prime kind {kind_tok[1]!r}", kind_tok[2])
        except (ValueError, NoethopsError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), kind_tok[2])
        self._end()
        self.script.declare(name[1], "prime", prime, name[2])

    def stmt_gb(self, pos):
        tok = self.ts.expect(NAME)
        bind = self._maybe_bind("ideal")
        self._end()
        self.script.as_ideal(tok[1], tok[2])
        self._add(Command("gb", pos, bind=bind, ideal=tok[1]))

    def stmt_nf(self, pos):
        f = self._parse_poly(pos)
        self.ts.expect(SYM, ",")
        tok = self.ts.expect(NAME)
        bind = self._maybe_bind("poly")
        self._end()
        self.script.as_ideal(tok[1], tok[2])
        self._add(Command("nf", pos, bind=bind, poly=f, ideal=tok[1]))

    def stmt_sat(self, pos):
        tok = self.ts.expect(NAME)
        self.ts.expect(SYM, ",")
        s = self._parse_poly(pos)
        bind = self._maybe_bind("ideal")
        self._end()
        self.script.as_ideal(tok[1], tok[2])
        self._add(Command("sat", pos, bind=bind, ideal=tok[1], witness=s))

    def stmt_intersect(self, pos):
        tok1 = self.ts.expect(NAME)
        self.ts.expect(SYM, ",")
        tok2 = self.ts.expect(NAME)
        bind = self._maybe_bind("ideal")
        self._end()
        self.script.as_ideal(tok1[1], tok1[2])
        self.script.as_ideal(tok2[1], tok2[2])
        self._add(Command("intersect", pos, bind=bind, left=tok1[1], right=tok2[1]))

    def stmt_noeth(self, pos):
        tok = self.ts.expect(NAME)
        at = self.ts.expect(NAME)
        if at[1] != "at":
            raise ParseError("expected 'at' in noeth command", at[2])
        point = self._parse_point_ref(pos)
        self._end()
        self.script.as_ideal(tok[1], tok[2])
        self._add(Command("noeth", pos, ideal=tok[1], point=point))

    def stmt_sympow(self, pos):
        tok = self.ts.expect(NAME)
        n = self.ts.expect(INT)[1]
        bind = self._maybe_bind("ideal")
        self._end()
        self.script.lookup(tok[1], {"prime"}, tok[2])
        self._add(Command("sympow", pos, bind=bind, prime=tok[1], n=n))

    def stmt_diffpow(self, pos):
        self.ts.expect(SYM, "-")
        self.ts.expect(SYM, "-")
        variant = self.ts.expect(NAME)
        if variant[1] not in ("new", "classical"):
            raise ParseError("diffpow expects --new or --classical", variant[2])
        tok = self.ts.expect(NAME)
        point = None
        if self.ts.peek()[:2] == (NAME, "at"):
            self.ts.next()
            point = self._parse_point_ref(pos)
        n = self.ts.expect(INT)[1]
        bound = None
        if self.ts.peek()[:2] == (NAME, "bound"):
            self.ts.next()
            bound = self.ts.expect(INT)[1]
        bind = self._maybe_bind("ideal")
        self._end()
        if variant[1] == "new" and point is None:
            self.script.lookup(tok[1], {"prime"}, tok[2])
        else:
            self.script.as_ideal(tok[1], tok[2])
        self._add(
            Command(
                "diffpow",
                pos,
                bind=bind,
                variant=variant[1],
                name=tok[1],
                point=point,
                n=n,
                bound=bound,
            )
        )

    def stmt_check_zn(self, pos):
        tok = self.ts.expect(NAME)
        n = self.ts.expect(INT)[1]
        bound = None
        if self.ts.peek()[:2] == (NAME, "bound"):
            self.ts.next()
            bound = self.ts.expect(INT)[1]
        self._end()
        self.script.lookup(tok[1], {"prime"}, tok[2])
        self._add(Command("check-zn", pos, prime=tok[1], n=n, bound=bound))

    def stmt_assert_equal(self, pos):
        tok1 = self.ts.expect(NAME)
        self.ts.expect(SYM, ",")
        tok2 = self.ts.expect(NAME)
        self._end()
        self.script.as_ideal(tok1[1], tok1[2])
        self.script.as_ideal(tok2[1], tok2[2])
        self._add(Command("assert-equal", pos, left=tok1[1], right=tok2[1]))

    def stmt_assert_member(self, pos):
        f = self._parse_poly(pos)
        self.ts.expect(SYM, ",")
        tok = self.ts.expect(NAME)
        self._end()
        self.script.as_ideal(tok[1], tok[2])
        self._add(Command("assert-member", pos, poly=f, ideal=tok[1]))


def parse_script(text, order_kind="grevlex"):
    """Parse and validate a script; raises ParseError with position."""
    return _ScriptParser(text, order_kind).parse()


def _ideal_json(I):
    return [str(g) for g in I.groebner_basis]


class _Executor:
    def __init__(self, script, default_bound=None):
        self.script = script
        self.default_bound = default_bound

    def ideal_of(self, name):
        kind, obj = self.script.objects[name]
        return obj.ideal if isinstance(obj, PrimeData) else obj

    def prime_of(self, name):
        return self.script.objects[name][1]

    def bind(self, cmd, kind, obj):
        if cmd.bind:
            self.script.objects[cmd.bind] = (kind, obj)

    def execute(self, cmd):
        method = getattr(self, "cmd_" + cmd.kind.replace("-", "_"))
        return method(cmd)

    def cmd_gb(self, cmd):
        I = self.ideal_of(cmd.payload["ideal"])
        basis = list(I.groebner_basis)
        self.bind(cmd, "ideal", Ideal(I.ring, basis, I.order))
        return {"ideal": cmd.payload["ideal"], "basis": [str(g) for g in basis]}

    def cmd_nf(self, cmd):
        I = self.ideal_of(cmd.payload["ideal"])
        r = I.normal_form(cmd.payload["poly"])
        self.bind(cmd, "poly", r)
        return {
            "poly": str(cmd.payload["poly"]),
            "ideal": cmd.payload["ideal"],
            "normal_form": str(r),
        }

    def cmd_sat(self, cmd):
        I = self.ideal_of(cmd.payload["ideal"])
        result = saturate(I, cmd.payload["witness"])
        self.bind(cmd, "ideal", result)
        return {
            "ideal": cmd.payload["ideal"],
            "witness": str(cmd.payload["witness"]),
            "result": _ideal_json(result),
        }

    def cmd_intersect(self, cmd):
        result = intersect(
            self.ideal_of(cmd.payload["left"]), self.ideal_of(cmd.payload["right"])
        )
        self.bind(cmd, "ideal", result)
        return {
            "left": cmd.payload["left"],
            "right": cmd.payload["right"],
            "result": _ideal_json(result),
        }

    def cmd_noeth(self, cmd):
        I = self.ideal_of(cmd.payload["ideal"])
        res = noetherian_operators(I, cmd.payload["point"])
        out = {"ideal": cmd.payload["ideal"]}
        out.update(res.to_json())
        return out

    def cmd_sympow(self, cmd):
        p = self.prime_of(cmd.payload["prime"])
        result = symbolic_power(p, cmd.payload["n"])
        self.bind(cmd, "ideal", result)
        return {
            "prime": cmd.payload["prime"],
            "n": cmd.payload["n"],
            "result": _ideal_json(result),
        }

    def cmd_diffpow(self, cmd):
        variant = cmd.payload["variant"]
        n = cmd.payload["n"]
        name = cmd.payload["name"]
        if variant == "new":
            if cmd.payload["point"] is not None:
                J = self.ideal_of(name)
                result = diff_power_new_point(J, cmd.payload["point"], n)
            else:
                p = self.prime_of(name)
                if p.kind == "univariate-algebraic":
                    result = diff_power_new_univariate(p, n)
                elif p.kind == "rational-point":
                    result = diff_power_new_point(
                        Ideal(p.ring, [], p.ideal.order), p.point, n
                    )
                else:
                    raise UnsupportedCharacteristicError(
                        "solution-set differential powers need a rational-point "
                        "or univariate-algebraic prime"
                    )
        else:
            I = self.ideal_of(name)
            bound = cmd.payload["bound"] or self.default_bound
            if bound is None:
                raise ValueError("diffpow --classical requires a degree bound")
            result = diff_power_classical_graded(I, n, bound)
        self.bind(cmd, "ideal", result)
        return {
            "variant": variant,
            "name": name,
            "n": n,
            "result": _ideal_json(result),
        }

    def cmd_check_zn(self, cmd):
        p = self.prime_of(cmd.payload["prime"])
        bound = cmd.payload["bound"] or self.default_bound
        report = chain_check(p, cmd.payload["n"], agreement_bound=bound)
        out = {"prime": cmd.payload["prime"]}
        out.update(report.to_json())
        if not report.all_hold():
            out["failed"] = True
        return out

    def cmd_assert_equal(self, cmd):
        left = self.ideal_of(cmd.payload["left"])
        right = self.ideal_of(cmd.payload["right"])
        ok = ideal_equal(left, right)
        return {
            "left": cmd.payload["left"],
            "right": cmd.payload["right"],
            "ok": ok,
            "failed": not ok,
        }

    def cmd_assert_member(self, cmd):
        I = self.ideal_of(cmd.payload["ideal"])
        ok = I.contains(cmd.payload["poly"])
        return {
            "poly": str(cmd.payload["poly"]),
            "ideal": cmd.payload["ideal"],
            "ok": ok,
            "failed": not ok,
        }


def run(script, only=None, default_bound=None):
    """Execute a parsed script.  Per-command errors are captured and the
    run continues; the report carries everything needed for the exit
    code."""
    executor = _Executor(script, default_bound=default_bound)
    entries = []
    counts = {"errors": 0, "unsupported": 0, "failed_assertions": 0}
    for cmd in script.commands:
        if only is not None and cmd.kind != only:
            continue
        entry = {"command": cmd.kind}
        try:
            payload = executor.execute(cmd)
        except UnsupportedCharacteristicError as exc:
            entry["status"] = "unsupported"
            entry["error"] = str(exc)
            counts["unsupported"] += 1
        except (NoethopsError, ValueError, ZeroDivisionError) as exc:
            entry["status"] = "error"
            entry["error"] = str(exc)
            counts["errors"] += 1
        else:
            if payload.pop("failed", False):
                entry["status"] = "failed"
                counts["failed_assertions"] += 1
            else:
                entry["status"] = "ok"
            entry.update(payload)
        entries.append(entry)
    if counts["errors"]:
        exit_code = 2
    elif counts["unsupported"]:
        exit_code = 3
    elif counts["failed_assertions"]:
        exit_code = 1
    else:
        exit_code = 0
    return {
        "schema": SCHEMA_VERSION,
        "commands": entries,
        "status": dict(counts, exit_code=exit_code),
    }


def _print_report(report, as_json, stream=None):
    stream = stream or sys.stdout
    if as_json:
        print(json.dumps(report, indent=2), file=stream)
        return
    for entry in report["commands"]:
        kind = entry["command"]
        status = entry["status"]
        detail = {
            k: v for k, v in entry.items() if k not in ("command", "status")
        }
        print(f"{kind} [{status}] {json.dumps(detail)}", file=stream)
    status = report["status"]
    print(
        f"done: {status['errors']} errors, {status['unsupported']} unsupported, "
        f"{status['failed_assertions']} failed assertions",
        file=stream,
    )


# Built-in regression scripts covering the library's worked examples.
EXAMPLE_SCRIPTS = []


def _register_examples():
    EXAMPLE_SCRIPTS.append((
        "grobner-duality",
        """
        field QQ;
        ring [x, y];
        point O = (0, 0);
        ideal I1 = x^2, y;
        ideal I2 = x^2, x*y, y^2;
        ideal I3 = x^3, y;
        ideal I4 = x^2, y + x;
        noeth I1 at O;
        noeth I2 at O;
        noeth I3 at O;
        noeth I4 at O;
        assert-member x^2, I1;
        assert-member (x + y)^3, I2;
        assert-member y + x, I4;
        """,
    ))
    EXAMPLE_SCRIPTS.append((
        "singular-cubic",
        """
        field QQ;
        ring [x, y, z];
        ideal J = x^3 + y^3 + z^3;
        point O = (0, 0, 0);
        prime m = x, y, z : point O;
        sympow m 2 as M2;
        diffpow --new J at O 2 as D2;
        assert-equal D2, M2;
        sympow m 3 as M3;
        diffpow --new J at O 3 as D3;
        assert-equal D3, M3;
        diffpow --new J at O 4 as D4;
        ideal E4 = x^3 + y^3 + z^3, x^4, x^3*y, x^3*z, x^2*y^2, x^2*y*z,
                   x^2*z^2, x*y^3, x*y^2*z, x*y*z^2, x*z^3, y^4, y^3*z,
                   y^2*z^2, y*z^3, z^4;
        assert-equal D4, E4;
        """,
    ))
    for p in (2, 3, 5):
        EXAMPLE_SCRIPTS.append((
            f"inseparable-p{p}",
            f"""
            field Fp({p})(t);
            ring [x];
            prime q = x^{p} - t : univariate;
            ideal P1 = x^{p} - t;
            ideal P2 = (x^{p} - t)^2;
            diffpow --new q 2 as D;
            assert-equal D, P1;
            sympow q 2 as S;
            assert-equal S, P2;
            check-zn q 2;
            """,
        ))
    EXAMPLE_SCRIPTS.append((
        "separable-control",
        """
        field QQ;
        ring [x];
        prime q = x^2 - 2 : univariate;
        ideal E = (x^2 - 2)^2;
        diffpow --new q 2 as D;
        assert-equal D, E;
        check-zn q 2;
        """,
    ))
    lines = [
        "field QQ;",
        "ring [x, y];",
        "point O = (0, 0);",
        "prime m = x, y : point O;",
    ]
    for n in (1, 2, 3, 4):
        lines += [
            f"sympow m {n} as S{n};",
            f"diffpow --new m {n} as D{n};",
            f"diffpow --classical m {n} bound {n + 1} as C{n};",
            f"assert-equal S{n}, D{n};",
            f"assert-equal S{n}, C{n};",
        ]
    EXAMPLE_SCRIPTS.append(("smooth-collapse", "\n".join(lines)))
    EXAMPLE_SCRIPTS.append((
        "twisted-cubic",
        """
        field QQ;
        ring [x, y, z, w];
        prime c = x*z - y^2, y*w - z^2, x*w - y*z : witness x;
        check-zn c 2 bound 6;
        sympow c 2 as S2;
        assert-member (x*z - y^2)^2, S2;
        """,
    ))


_register_examples()


def _read_script(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="noethops",
        description="Exact computations with Noetherian operators, dual "
        "spaces and differential powers of ideals.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    script_commands = [
        ("run", None, "run every command in a script"),
        ("gb", "gb", "run only the gb commands of a script"),
        ("nf", "nf", "run only the nf commands of a script"),
        ("sat", "sat", "run only the sat commands of a script"),
        ("intersect", "intersect", "run only the intersect commands of a script"),
        ("noeth", "noeth", "run only the noeth commands of a script"),
        ("sympow", "sympow", "run only the sympow commands of a script"),
        ("diffpow", "diffpow", "run only the diffpow commands of a script"),
        ("check-zn", "check-zn", "run only the check-zn commands of a script"),
    ]
    for name, _, help_text in script_commands:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("script", help="script path, or - for stdin")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--order", choices=["lex", "grevlex"], default="grevlex")
        p.add_argument("--bound", type=int, default=None, help="default degree bound")
    p = sub.add_parser("examples", help="run the built-in regression scripts")
    p.add_argument("--json", action="store_true")
    p.add_argument("--order", choices=["lex", "grevlex"], default="grevlex")
    p.add_argument("--bound", type=int, default=None)
    args = parser.parse_args(argv)

    if args.subcommand == "examples":
        scripts = []
        worst = 0
        for name, text in EXAMPLE_SCRIPTS:
            script = parse_script(text, order_kind=args.order)
            report = run(script, default_bound=args.bound)
            scripts.append({"name": name, **report})
            code = report["status"]["exit_code"]
            priority = {0: 0, 1: 1, 3: 2, 2: 3}
            if priority[code] > priority[worst]:
                worst = code
        if args.json:
            print(json.dumps({"schema": SCHEMA_VERSION, "scripts": scripts}, indent=2))
        else:
            for entry in scripts:
                status = entry["status"]
                ok = "ok" if status["exit_code"] == 0 else f"exit {status['exit_code']}"
                print(f"{entry['name']}: {ok}")
        return worst

    only = dict((name, kind) for name, kind, _ in script_commands)[args.subcommand]
    try:
        text = _read_script(args.script)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        script = parse_script(text, order_kind=args.order)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    report = run(script, only=only, default_bound=args.bound)
    _print_report(report, args.json)
    return report["status"]["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
