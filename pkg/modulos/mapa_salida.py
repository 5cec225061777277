#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
MAPA DE SALIDA
Normalización de la magnitud del gradiente a un mapa visible de 8 bits:

  b_G(x, y, c) = 255 · (G^ν(x, y, c) / G^ν_Max(c))^α

con el máximo tomado por canal. α < 1 aclara las estructuras débiles.
Incluye el ajuste opcional de brillo y contraste y el estirado lineal usado como comparación.
"""

import logging
from dataclasses import dataclass

import numpy as np

from modulos.imagen import ImagePlane, MultiChannelImage
from utils.configuracion import GRIS_MEDIO, MAXIMO_8BIT
from utils.errores import ContractError, DomainError
from utils.funciones_comunes import (
    MODOS_REDONDEO, redondear, validar_finito, validar_positivo,
)

logger = logging.getLogger("fracgrad.mapa_salida")

_SEMANTICA_POR_CANTIDAD = {1: "grayscale", 3: "rgb", 4: "rgba"}


@dataclass(frozen=True)
class VisibilityConfig:
    """Exponente α de visibilidad y modo de cuantización."""
    alpha: float = 1.0
    rounding: str = "nearest"

    def __post_init__(self):
        object.__setattr__(self, "alpha", validar_positivo("alpha", self.alpha))
        if self.rounding not in MODOS_REDONDEO:
            raise DomainError(f"Modo de redondeo desconocido: '{self.rounding}' (use {' | '.join(MODOS_REDONDEO)})")


@dataclass(frozen=True)
class AdjustConfig:
    """Brillo (suma en códigos) y ganancia de contraste alrededor del gris medio 127.5."""
    brightness_offset: float = 0.0
    contrast_gain: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "brightness_offset", validar_finito("brightness_offset", self.brightness_offset))
        object.__setattr__(self, "contrast_gain", validar_positivo("contrast_gain", self.contrast_gain))


# ─────────────────────────────────────────────
# NORMALIZACIÓN
# ─────────────────────────────────────────────

def channel_maximum(plane):
    """G^ν_Max del canal (el máximo es asociativo: no depende del orden de reducción)."""
    return float(plane.samples.max())


def _normalizar_canal(plane, config):
    g = plane.samples
    if g.min() < 0:
        raise ContractError(f"Magnitud negativa en el mapa ({g.min():g}); se esperan valores >= 0")
    maximo = channel_maximum(plane)
    if maximo == 0:
        logger.warning("⚠️ Canal sin bordes (máximo 0): se escribe en negro")
        return ImagePlane(np.zeros(g.shape))
    valores = MAXIMO_8BIT * np.power(g / maximo, config.alpha)
    return ImagePlane(redondear(valores, config.rounding))


def normalize_map(magnitudes, config=VisibilityConfig(), channel_semantics=None):
    """
    Renderiza las magnitudes por canal con la normalización de potencia.

    Args:
        magnitudes: lista de ImagePlane (uno por canal), todas >= 0
        config: VisibilityConfig
        channel_semantics: semántica del resultado (por defecto según la cantidad de canales)

    Returns:
        MultiChannelImage con códigos enteros en [0, 255]

    Raises:
        ContractError: alguna magnitud negativa o no finita

    Ejemplos:
        g/M = 0.25, α = 0.4 → 255 · 0.25^0.4 ≈ 146.46 → 146 (nearest)
        el píxel del máximo → 255 para todo α; un canal todo cero → todo cero
    """
    planos = [p if isinstance(p, ImagePlane) else ImagePlane(p) for p in magnitudes]
    if not planos:
        raise ContractError("normalize_map requiere al menos un canal")
    if channel_semantics is None:
        channel_semantics = _SEMANTICA_POR_CANTIDAD.get(len(planos))
        if channel_semantics is None:
            raise ContractError(f"Cantidad de canales no soportada: {len(planos)}")
    return MultiChannelImage(tuple(_normalizar_canal(p, config) for p in planos), channel_semantics)


# ─────────────────────────────────────────────
# AJUSTES POSTERIORES
# ─────────────────────────────────────────────

def _reemplazar_color(image, funcion):
    """Aplica `funcion` a los canales de color; el alfa pasa intacto."""
    nuevos = [funcion(c) for c in image.color_channels()]
    if image.has_alpha:
        nuevos.append(image.alpha)
    return MultiChannelImage(tuple(nuevos), image.channel_semantics)


def adjust_brightness_contrast(image, config, rounding="nearest"):
    """
    Ajuste de brillo y contraste:
      v → clamp(ganancia · (v − 127.5) + 127.5 + brillo, 0, 255), luego cuantizado

    Ejemplos:
        ganancia 1, brillo 300 → todo 255
        ganancia 2, brillo 0, entrada 127.5 → 127.5 → 128 (nearest)
    """
    arr = image.as_array()
    if arr.min() < 0 or arr.max() > MAXIMO_8BIT:
        raise ContractError("adjust_brightness_contrast requiere muestras en [0, 255]")

    def ajustar(plano):
        v = config.contrast_gain * (plano.samples - GRIS_MEDIO) + GRIS_MEDIO + config.brightness_offset
        return ImagePlane(redondear(np.clip(v, 0.0, MAXIMO_8BIT), rounding))

    return _reemplazar_color(image, ajustar)


def linear_stretch(image, rounding="nearest"):
    """
    Estirado lineal mín–máx de cada canal de color a [0, 255].

    Es el "aumento de contraste y brillo" con el que se compara el mapa fraccionario.
    Un canal constante queda sin cambios.
    """
    def estirar(plano):
        bajo, alto = float(plano.samples.min()), float(plano.samples.max())
        if alto == bajo:
            return plano
        return ImagePlane(redondear(MAXIMO_8BIT * (plano.samples - bajo) / (alto - bajo), rounding))

    return _reemplazar_color(image, estirar)
