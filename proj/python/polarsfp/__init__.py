# Copyright 2026 The polarsfp Authors
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

"""Polarization image processing: Stokes conversion, sensor-aware augmentation,
normal-map metrics and the on-disk formats shared with the ``polarsfp`` CLI.

Arrays are float32 with shape ``(H, W)`` or ``(H, W, C)``; masks are 2-D bool.
"""

from ._polarsfp import (
    AugmentConfig,
    ConfigError,
    DimensionOverflowError,
    Error,
    EvaluationError,
    FormatError,
    IoError,
    MalformedHeaderError,
    ParameterError,
    StructuralError,
    TruncatedPayloadError,
    angular_error_map,
    augment,
    cosine_loss,
    evaluate,
    quad_to_stokes,
    quantize,
    read_float_image,
    read_mask,
    render_toy_scene,
    sample_scene_spec,
    stokes_to_aolp,
    stokes_to_dolp,
    stokes_to_quad,
    write_float_image,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
