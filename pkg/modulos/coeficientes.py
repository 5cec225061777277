#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
COEFICIENTES FRACCIONARIOS
Serie truncada de coeficientes de la derivada discreta de orden ν.

  d^ν s(t) = s(t) + (−ν) s(t−1) + (−ν)(−ν+1)/2 s(t−2) + (−ν)(−ν+1)(−ν+2)/6 s(t−3) + …

Los productos se evalúan con la recurrencia multiplicativa
  c_0 = 1,   c_k = c_{k−1} · (k − 1 − ν) / k
que es algebraicamente idéntica y no desborda como los factoriales.
"""

from dataclasses import dataclass

import numpy as np

from utils.configuracion import TERMINOS_POR_DEFECTO
from utils.errores import DomainError
from utils.funciones_comunes import validar_finito


@dataclass(frozen=True)
class CoefficientSeries:
    """Coeficientes c_0 … c_{K−1} para el orden `order`. Inmutable."""
    order: float
    length: int
    values: tuple

    def as_array(self):
        arr = np.array(self.values, dtype=np.float64)
        arr.setflags(write=False)
        return arr

    def total(self):
        """Σ c_k sumado desde k = 0 (respuesta a una constante por unidad)."""
        acumulado = 0.0
        for c in self.values:
            acumulado = acumulado + c
        return acumulado

    def __len__(self):
        return self.length


def generate_coefficients(order, length=TERMINOS_POR_DEFECTO):
    """
    Genera la serie truncada de K = length coeficientes para el orden ν = order.

    Args:
        order: orden fraccionario ν (cualquier real finito; el rango ensayado es [0, 1])
        length: cantidad de términos K (>= 1)

    Returns:
        CoefficientSeries

    Raises:
        DomainError: si order no es finito o length < 1

    Ejemplos:
        >>> generate_coefficients(1, 4).values
        (1.0, -1.0, 0.0, 0.0)
        >>> generate_coefficients(0.5, 4).values
        (1.0, -0.5, -0.125, -0.0625)
    """
    nu = validar_finito("order", order)
    if isinstance(length, bool) or not isinstance(length, (int, np.integer)):
        raise DomainError(f"length debe ser un entero, se recibió {length!r}")
    if length < 1:
        raise DomainError(f"length debe ser >= 1, se recibió {length!r}")

    valores = [1.0]
    for k in range(1, int(length)):
        # + 0.0 normaliza el cero negativo que produce ν = 0
        valores.append(valores[-1] * (k - 1 - nu) / k + 0.0)

    return CoefficientSeries(order=nu, length=int(length), values=tuple(valores))
