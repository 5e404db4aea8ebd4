"""Run configuration

A `RunConfig` collects everything one invocation of the command line
tool needs: the root datum, the truncation floor and window radius of
the periodic module computations, the output format and destination,
the random seed of the property checks and an optional exact value at
which rank certificates are re-run.

Validation happens in two passes that feed the same
`klperiodic.meta.ValidationResult`: the serialized configuration is
checked against the `runconfig` JSON schema, then the semantic
constraints that depend on the root datum are checked.
"""

from fractions import Fraction
from typing import Dict, Optional

from .coxeter import CARTAN_MATRICES, CartanDatum
from .meta import Index, ValidationResult


#: Smallest truncation floor for which theta images are certified at all
MIN_FLOOR = 4

DEFAULT_FLOOR = 12

#: Output formats each command can produce, the first one is the default
FORMATS = {
    "count": ("text", "json", "csv"),
    "table": ("csv", "json", "text"),
    "verify": ("text", "json"),
    "figure": ("svg",),
}


def _parse_fraction(value: Optional[str]) -> Optional[Fraction]:
    if value is None:
        return None
    return Fraction(value)


class RunConfig:
    """Settings of a single command invocation"""

    def __init__(self, command: str, type_label: str = "A2", *,
                 floor: int = DEFAULT_FLOOR, radius: Optional[int] = None,
                 fmt: Optional[str] = None, out: Optional[str] = None,
                 seed: int = 0, v_value: Optional[Fraction] = None,
                 suite: Optional[str] = None):
        self.command = command
        self.type_label = type_label
        self.floor = floor
        self.radius = radius if radius is not None else self.default_radius(type_label)
        self.format = fmt or FORMATS.get(command, ("text",))[0]
        self.out = out
        self.seed = seed
        self.v_value = v_value
        self.suite = suite

    @staticmethod
    def default_radius(type_label: str) -> int:
        """`2 l(w0) + 2`, or 0 for an unknown type"""
        matrix = CARTAN_MATRICES.get(type_label)
        if matrix is None:
            return 0
        return 2 * len(CartanDatum(matrix, type_label).positive_roots) + 2

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        fmt = args.format
        if getattr(args, "json", False) and fmt is None:
            fmt = "json"
        try:
            v_value = _parse_fraction(args.v_value)
        except (ValueError, ZeroDivisionError):
            # kept as text so that the schema reports it
            v_value = args.v_value
        return cls(args.command, args.type,
                   floor=args.floor, radius=args.radius, fmt=fmt, out=args.out,
                   seed=args.seed, v_value=v_value,
                   suite=getattr(args, "suite", None))

    @property
    def datum(self) -> CartanDatum:
        return CartanDatum.from_label(self.type_label)

    def as_dict(self) -> Dict:
        v_value = self.v_value
        if isinstance(v_value, Fraction):
            v_value = str(v_value)
        return {
            "command": self.command,
            "suite": self.suite,
            "type": self.type_label,
            "floor": self.floor,
            "radius": self.radius,
            "format": self.format,
            "out": self.out,
            "seed": self.seed,
            "v_value": v_value,
        }

    def validate(self, index: Index) -> ValidationResult:
        """Check the configuration, collecting every problem found"""
        schema = index.get_schema("runconfig")
        result = ValidationResult(self.command)
        result.merge(schema.validate(self.as_dict()))
        if not result:
            return result

        if self.type_label not in CARTAN_MATRICES:
            known = ", ".join(sorted(CARTAN_MATRICES))
            result.fail(f"Unknown Cartan type '{self.type_label}', known types: {known}",
                        path=["type"])
            return result

        datum = self.datum
        if self.floor < MIN_FLOOR:
            result.fail(f"Truncation floor {self.floor} is below {MIN_FLOOR}", path=["floor"])

        minimum = len(datum.positive_roots) + 1
        if self.radius < minimum:
            result.fail(f"Radius {self.radius} is below l(w0) + 1 = {minimum} for {self.type_label}",
                        path=["radius"])

        if self.v_value is not None:
            try:
                value = Fraction(self.v_value)
            except (ValueError, ZeroDivisionError):
                result.fail(f"Invalid value for v: {self.v_value}", path=["v_value"])
            else:
                if value == 0:
                    result.fail("Cannot specialize at v = 0", path=["v_value"])

        allowed = FORMATS[self.command]
        if self.format not in allowed:
            result.fail(f"Format '{self.format}' not supported by '{self.command}', "
                        f"use one of: {', '.join(allowed)}", path=["format"])

        if self.command == "figure" and datum.rank != 2:
            result.fail(f"Figures need a rank 2 type, got {self.type_label}", path=["type"])

        return result

    def __repr__(self):
        return f"RunConfig({self.as_dict()!r})"
