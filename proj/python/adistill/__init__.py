# Copyright 2026 The adistill Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Entanglement distillation with stabilizer codes and recurrence purification.

The numerical work happens in the compiled ``adistill._core`` extension; this
package re-exports its public names.
"""

from adistill._core import (
    HASHING_THRESHOLD_FIDELITY,
    PauliString,
    StabilizerCode,
    builtin_code,
    builtin_code_names,
    chain_fidelity,
    chain_rate,
    circuit_purify_step,
    converge,
    corrected_by_weight,
    correction,
    distillable_entanglement,
    efficiency,
    fidelity_from_werner,
    hybrid,
    is_corrected,
    parse_code_text,
    pseudo_threshold,
    purify_rounds,
    purify_step,
    qec_map,
    standard_protocol,
    swap_fidelity,
    switching_points,
    syndrome,
    validate_code,
    werner_from_fidelity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
