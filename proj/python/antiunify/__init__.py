"""Anti-unification of unordered goals.

Goals are passed as text, e.g. ``"p(X, f(a)), q(X)."``. The second goal of a
pair is renamed apart from the first when they share variables. Results are
dictionaries with the fields documented in docs/result.schema.json.
"""

import json

from . import _core
from ._core import (
    AntiunifyError,
    InstanceTooLarge,
    InvalidConfig,
    ParseError,
    SharedVariables,
    normalize,
    run_cli,
    tau_value,
    verify_witness,
)

__all__ = [
    "AntiunifyError",
    "InstanceTooLarge",
    "InvalidConfig",
    "ParseError",
    "SharedVariables",
    "check",
    "generate",
    "inj_lcg",
    "kswap",
    "lcg",
    "msg",
    "normalize",
    "run_cli",
    "tau_value",
    "verify_witness",
]


def lcg(g1, g2, relation="subseteq"):
    """Greedy largest common generalization under subseteq or preceq."""
    return json.loads(_core.lcg(g1, g2, relation))


def msg(g1, g2, relation="subseteq"):
    """Most specific generalization."""
    return json.loads(_core.msg(g1, g2, relation))


def kswap(g1, g2, k=None):
    """k-swap stable injective generalization; ``k=None`` means unbounded."""
    return json.loads(_core.kswap(g1, g2, k))


def inj_lcg(g1, g2, relation="preceq-inj"):
    """Exact injective lcg by exhaustive search (small inputs only)."""
    return json.loads(_core.inj_lcg(g1, g2, relation))


def check(g, g2, relation="subseteq"):
    """Does ``g`` generalize ``g2``? The result carries the witness if so."""
    return json.loads(_core.check(g, g2, relation))


def generate(**config):
    """A random goal pair; keyword names follow the generator config file."""
    return _core.generate(json.dumps(config))
