# Copyright 2026 The qsym Authors
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

"""Quantum symmetry checks for small graphs."""

from ._core import (
    CapacityError,
    DimensionError,
    Error,
    Graph,
    ParseError,
    Permutation,
    UsageError,
    abelian_points,
    are_disjoint,
    automorphisms,
    cayley_folded_cube,
    classical_action_sweep,
    classical_point_action,
    complete_graph,
    cycle_graph,
    find_disjoint_pair,
    folded_cube,
    fourier,
    inverse_fourier,
    is_automorphism,
    lemma_p,
    lemma_so,
    lemma_sumzero,
    run_cli,
    twisted_relations,
    verify_spectrum,
    witness,
)

__version__ = "0.1.0"
