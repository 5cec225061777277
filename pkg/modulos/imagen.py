#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
MODELO DE IMAGEN
Planos reales de un canal y su pila por canales con procedencia de 8 bits.

Las muestras se guardan en la escala nativa de códigos [0, 255] (el código v es el real v).
Índices base 0: samples[y, x], con y = fila y x = columna.
"""

import logging
from dataclasses import dataclass

import numpy as np

from utils.errores import ContractError
from utils.funciones_comunes import redondear

logger = logging.getLogger("fracgrad.imagen")

SEMANTICAS = {"grayscale": 1, "rgb": 3, "rgba": 4}


@dataclass(frozen=True, eq=False)
class ImagePlane:
    """
    Plano de un canal: grilla height × width de reales finitos.

    `valid` es opcional: máscara booleana de muestras definidas (la política de
    borde 'skip' marca con False las que no tienen sus K taps dentro de la imagen).
    """
    samples: np.ndarray
    valid: np.ndarray = None

    def __post_init__(self):
        arr = np.array(self.samples, dtype=np.float64)
        if arr.ndim != 2:
            raise ContractError(f"Un plano debe ser 2-D, se recibió ndim={arr.ndim}")
        if arr.size == 0:
            raise ContractError(f"Plano vacío ({arr.shape[1] if arr.ndim == 2 else 0}×{arr.shape[0]})")
        if not np.all(np.isfinite(arr)):
            raise ContractError("El plano contiene muestras no finitas")
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)

        if self.valid is not None:
            mascara = np.array(self.valid, dtype=bool)
            if mascara.shape != arr.shape:
                raise ContractError(f"Máscara {mascara.shape} no coincide con el plano {arr.shape}")
            mascara.setflags(write=False)
            object.__setattr__(self, "valid", mascara)

    @property
    def width(self):
        return self.samples.shape[1]

    @property
    def height(self):
        return self.samples.shape[0]

    @property
    def shape(self):
        return self.samples.shape

    @classmethod
    def constant(cls, width, height, value):
        return cls(np.full((height, width), float(value)))

    def flagged_count(self):
        """Cantidad de muestras marcadas como indefinidas."""
        return 0 if self.valid is None else int(self.valid.size - np.count_nonzero(self.valid))

    def transpose(self):
        return ImagePlane(self.samples.T, None if self.valid is None else self.valid.T)

    def __eq__(self, otro):
        if not isinstance(otro, ImagePlane):
            return NotImplemented
        if not np.array_equal(self.samples, otro.samples):
            return False
        if self.valid is None or otro.valid is None:
            return self.valid is None and otro.valid is None
        return np.array_equal(self.valid, otro.valid)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class MultiChannelImage:
    """
    Pila ordenada de 1, 3 o 4 planos de igual tamaño.

    channel_semantics: 'grayscale' (1 canal) | 'rgb' (3) | 'rgba' (4, el último es alfa)
    """
    channels: tuple
    channel_semantics: str

    def __post_init__(self):
        canales = tuple(self.channels)
        object.__setattr__(self, "channels", canales)
        if self.channel_semantics not in SEMANTICAS:
            raise ContractError(
                f"Semántica de canales desconocida: '{self.channel_semantics}' "
                f"(use {' | '.join(SEMANTICAS)})"
            )
        esperados = SEMANTICAS[self.channel_semantics]
        if len(canales) != esperados:
            raise ContractError(
                f"'{self.channel_semantics}' requiere {esperados} canal(es), se recibieron {len(canales)}"
            )
        for c in canales:
            if not isinstance(c, ImagePlane):
                raise ContractError(f"Los canales deben ser ImagePlane, se recibió {type(c).__name__}")
        formas = {c.shape for c in canales}
        if len(formas) != 1:
            raise ContractError(f"Los canales no comparten dimensiones: {sorted(formas)}")

    @property
    def width(self):
        return self.channels[0].width

    @property
    def height(self):
        return self.channels[0].height

    @property
    def has_alpha(self):
        return self.channel_semantics == "rgba"

    def color_channels(self):
        """Planos que procesan las derivadas (todo salvo el alfa)."""
        return self.channels[:3] if self.has_alpha else self.channels

    @property
    def alpha(self):
        return self.channels[3] if self.has_alpha else None

    def as_array(self):
        """Array (height, width, canales) en float64."""
        return np.stack([c.samples for c in self.channels], axis=-1)

    @classmethod
    def from_array(cls, arr, channel_semantics=None):
        """
        Construye la imagen desde un array (h, w) o (h, w, c).

        Si no se indica la semántica se infiere por la cantidad de canales (1, 3 o 4).
        """
        arr = np.asarray(arr, dtype=np.float64)
        if arr.ndim == 2:
            arr = arr[:, :, np.newaxis]
        if arr.ndim != 3:
            raise ContractError(f"Se esperaba un array (h, w) o (h, w, c), se recibió ndim={arr.ndim}")
        if channel_semantics is None:
            por_cantidad = {n: nombre for nombre, n in SEMANTICAS.items()}
            if arr.shape[2] not in por_cantidad:
                raise ContractError(f"Cantidad de canales no soportada: {arr.shape[2]}")
            channel_semantics = por_cantidad[arr.shape[2]]
        return cls(tuple(ImagePlane(arr[:, :, i]) for i in range(arr.shape[2])), channel_semantics)

    def __eq__(self, otro):
        if not isinstance(otro, MultiChannelImage):
            return NotImplemented
        return (self.channel_semantics == otro.channel_semantics
                and len(self.channels) == len(otro.channels)
                and all(a == b for a, b in zip(self.channels, otro.channels)))

    __hash__ = None


def to_grayscale(image, rounding="nearest"):
    """
    Promedio aritmético de los canales de color, (r + g + b) / 3, cuantizado.

    El canal alfa se descarta. Una imagen ya en grises se devuelve sin cambios.

    Ejemplos:
        píxel (10, 20, 31) → (10 + 20 + 31) / 3 = 20.33… → 20
    """
    if image.channel_semantics == "grayscale":
        return image
    if image.has_alpha:
        logger.info("El canal alfa se descarta en la conversión a grises")
    r, g, b = (c.samples for c in image.color_channels())
    promedio = (r + g + b) / 3.0
    return MultiChannelImage((ImagePlane(redondear(promedio, rounding)),), "grayscale")
