# Copyright 2026 The asnkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Python bindings for asnkit."""

from pathlib import Path

from ._asnkit import (
    AsnkitError,
    Network,
    __version__,
    bootstrap_pvalue,
    build_networks,
    emergent_heads,
    fit_powerlaw,
    hurwitz_zeta,
    likelihood_ratio_test,
    run_cli,
    sample_discrete_powerlaw,
    solve_levels,
    track,
    validate_heads,
)


def read_networks(*paths, missing="drop-any"):
    """Aggregate treebank files into one Network per century, oldest first."""
    text = "".join(Path(p).read_text(encoding="utf-8").rstrip("\n") + "\n\n" for p in paths)
    return build_networks(text, missing=missing, source=",".join(str(p) for p in paths))


__all__ = [
    "AsnkitError",
    "Network",
    "__version__",
    "bootstrap_pvalue",
    "build_networks",
    "emergent_heads",
    "fit_powerlaw",
    "hurwitz_zeta",
    "likelihood_ratio_test",
    "read_networks",
    "run_cli",
    "sample_discrete_powerlaw",
    "solve_levels",
    "track",
    "validate_heads",
]
