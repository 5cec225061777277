#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
GRADIENTE FRACCIONARIO
  ∇^ν = G_x^ν u_x + G_y^ν u_y

Magnitud según dos convenciones:
  euclidean   : G^ν = sqrt((G_x^ν)² + (G_y^ν)²)   (por defecto)
  absolute_sum: G^ν = |G_x^ν| + |G_y^ν|           (aproximación habitual)

Con ν = 1 se recupera el gradiente clásico por diferencias hacia atrás.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from modulos.coeficientes import generate_coefficients
from modulos.derivada import POLITICA_POR_DEFECTO, BoundaryPolicy, derivative_x, derivative_y
from modulos.imagen import ImagePlane
from utils.configuracion import TERMINOS_POR_DEFECTO
from utils.errores import ContractError, DomainError


class MagnitudeConvention(str, Enum):
    EUCLIDEAN = "euclidean"
    ABSOLUTE_SUM = "absolute_sum"

    @classmethod
    def parse(cls, valor):
        if isinstance(valor, cls):
            return valor
        texto = str(valor).strip().lower().replace("-", "_")
        alias = {"abs_sum": "absolute_sum", "abssum": "absolute_sum"}
        try:
            return cls(alias.get(texto, texto))
        except ValueError:
            raise DomainError(f"Convención de magnitud desconocida: '{valor}' (use euclidean | abs-sum)")


@dataclass(frozen=True, eq=False)
class GradientField:
    """Componentes G_x, G_y y magnitud, todas del mismo tamaño."""
    gx: ImagePlane
    gy: ImagePlane
    magnitude: ImagePlane
    convention: MagnitudeConvention

    def __post_init__(self):
        if not (self.gx.shape == self.gy.shape == self.magnitude.shape):
            raise ContractError(
                f"Componentes de distinto tamaño: gx {self.gx.shape}, gy {self.gy.shape}, "
                f"magnitud {self.magnitude.shape}"
            )


def magnitud(gx, gy, convencion=MagnitudeConvention.EUCLIDEAN):
    """Magnitud punto a punto de dos arrays de componentes."""
    convencion = MagnitudeConvention.parse(convencion)
    if convencion is MagnitudeConvention.EUCLIDEAN:
        # sqrt(gx² + gy²) explícito: hypot no garantiza el mismo redondeo
        return np.sqrt(gx * gx + gy * gy)
    return np.abs(gx) + np.abs(gy)


def _mascara_comun(a, b):
    if a.valid is None:
        return b.valid
    if b.valid is None:
        return a.valid
    return a.valid & b.valid


def fractional_gradient(plane, order, length=TERMINOS_POR_DEFECTO,
                        boundary=POLITICA_POR_DEFECTO,
                        convention=MagnitudeConvention.EUCLIDEAN, hilos=None):
    """
    Gradiente fraccionario de un plano.

    Args:
        plane: ImagePlane
        order: ν
        length: K, cantidad de términos de la serie
        boundary: política de borde
        convention: 'euclidean' | 'absolute_sum'
        hilos: tope de hilos para las derivadas

    Returns:
        GradientField

    Ejemplos:
        impulso unitario en un plano de ceros, ν = 0.5, K = 4, borde 'zero', euclidean:
        en el impulso gx = gy = 1 → magnitud √2; un paso a la derecha gx = −0.5, gy = 0 → 0.5
    """
    coeffs = generate_coefficients(order, length)
    politica = BoundaryPolicy.parse(boundary)
    convencion = MagnitudeConvention.parse(convention)

    gx = derivative_x(plane, coeffs, politica, hilos)
    gy = derivative_y(plane, coeffs, politica, hilos)
    mag = magnitud(gx.samples, gy.samples, convencion)
    mascara = _mascara_comun(gx, gy)
    if mascara is not None:
        # fuera de la banda definida de cualquiera de las componentes la magnitud vale 0
        mag = np.where(mascara, mag, 0.0)
    return GradientField(
        gx=gx,
        gy=gy,
        magnitude=ImagePlane(mag, mascara),
        convention=convencion,
    )
