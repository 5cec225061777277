#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DERIVADA FRACCIONARIA DISCRETA
Aplicación de la serie truncada a lo largo de una señal 1-D y de cada eje de un plano.

  ∂^ν s(x, y)/∂x^ν = Σ_k c_k · s(x − k, y)
  ∂^ν s(x, y)/∂y^ν = Σ_k c_k · s(x, y − k)

Solo taps hacia atrás (causales). La suma de cada muestra se acumula en orden fijo
desde k = 0, de modo que el resultado es idéntico bit a bit con cualquier cantidad de hilos.

Políticas de borde para los taps fuera de la imagen:
  replicate: se lee la primera muestra de la fila/columna (por defecto)
  zero     : se lee 0
  skip     : solo se define la salida donde los K taps caen dentro; el resto vale 0 y se marca
"""

from enum import Enum

import numpy as np

from modulos.imagen import ImagePlane
from utils.configuracion import resolver_hilos
from utils.errores import DomainError
from utils.funciones_comunes import ejecutar_por_bloques


class BoundaryPolicy(str, Enum):
    REPLICATE = "replicate"
    ZERO = "zero"
    SKIP = "skip"

    @classmethod
    def parse(cls, valor):
        if isinstance(valor, cls):
            return valor
        try:
            return cls(str(valor).strip().lower())
        except ValueError:
            opciones = " | ".join(p.value for p in cls)
            raise DomainError(f"Política de borde desconocida: '{valor}' (use {opciones})")


POLITICA_POR_DEFECTO = BoundaryPolicy.REPLICATE


# ─────────────────────────────────────────────
# NÚCLEO
# ─────────────────────────────────────────────

def _tap(bloque, k, politica):
    """Muestras s(t − k) de cada fila del bloque, con el borde resuelto."""
    if k == 0:
        return bloque
    n = bloque.shape[1]
    if politica is BoundaryPolicy.REPLICATE:
        if k >= n:
            return np.broadcast_to(bloque[:, :1], bloque.shape)
        tap = np.empty_like(bloque)
        tap[:, k:] = bloque[:, :-k]
        tap[:, :k] = bloque[:, :1]
        return tap
    # zero y skip leen ceros fuera de rango; skip descarta luego la banda
    tap = np.zeros_like(bloque)
    if k < n:
        tap[:, k:] = bloque[:, :-k]
    return tap


def _derivar_filas(bloque, valores, politica):
    """Aplica la serie a cada fila de un bloque 2-D (acumulación desde k = 0)."""
    salida = np.zeros(bloque.shape, dtype=np.float64)
    for k, c in enumerate(valores):
        salida += c * _tap(bloque, k, politica)
    if politica is BoundaryPolicy.SKIP:
        salida[:, :len(valores) - 1] = 0.0
    return salida


def _derivar_plano_filas(samples, coeffs, politica, hilos):
    """Derivada a lo largo de las filas (eje x) repartiendo bloques de filas entre hilos."""
    valores = coeffs.values
    salida = np.empty(samples.shape, dtype=np.float64)

    def tarea(inicio, fin):
        salida[inicio:fin] = _derivar_filas(samples[inicio:fin], valores, politica)

    ejecutar_por_bloques(tarea, samples.shape[0], hilos)
    return salida


def _mascara_skip(forma, largo, valid_entrada):
    mascara = np.ones(forma, dtype=bool)
    mascara[:, :largo - 1] = False
    if valid_entrada is not None:
        mascara &= valid_entrada
    return mascara


# ─────────────────────────────────────────────
# OPERACIONES
# ─────────────────────────────────────────────

def derivative_1d(signal, coeffs, boundary=POLITICA_POR_DEFECTO):
    """
    Derivada fraccionaria de una señal 1-D.

    output[t] = Σ_{k=0}^{K−1} c_k · signal[t − k], con el borde resuelto por `boundary`.

    Raises:
        DomainError: si la señal está vacía

    Ejemplos:
        >>> derivative_1d([5, 5, 5, 5, 5], generate_coefficients(1, 4), "zero")
        [5.0, 0.0, 0.0, 0.0, 0.0]
        >>> derivative_1d([0, 1, 2, 3, 4], generate_coefficients(1, 4), "replicate")
        [0.0, 1.0, 1.0, 1.0, 1.0]
    """
    arr = np.asarray(signal, dtype=np.float64)
    if arr.ndim != 1:
        raise DomainError(f"La señal debe ser 1-D, se recibió ndim={arr.ndim}")
    if arr.size == 0:
        raise DomainError("La señal está vacía")
    politica = BoundaryPolicy.parse(boundary)
    return _derivar_filas(arr[np.newaxis, :], coeffs.values, politica)[0].tolist()


def derivative_x(plane, coeffs, boundary=POLITICA_POR_DEFECTO, hilos=None):
    """
    Derivada parcial a lo largo de x: cada fila se procesa de forma independiente.

    Args:
        plane: ImagePlane
        coeffs: CoefficientSeries
        boundary: BoundaryPolicy o su nombre
        hilos: tope de hilos (None = FRACGRAD_THREADS o cantidad de CPUs)

    Returns:
        ImagePlane de igual tamaño; con 'skip' lleva la máscara de muestras definidas
    """
    politica = BoundaryPolicy.parse(boundary)
    hilos = resolver_hilos() if hilos is None else hilos
    salida = _derivar_plano_filas(plane.samples, coeffs, politica, hilos)
    if politica is BoundaryPolicy.SKIP:
        return ImagePlane(salida, _mascara_skip(salida.shape, coeffs.length, plane.valid))
    return ImagePlane(salida, plane.valid)


def derivative_y(plane, coeffs, boundary=POLITICA_POR_DEFECTO, hilos=None):
    """
    Derivada parcial a lo largo de y: igual que derivative_x con filas y columnas intercambiadas.

    derivative_y(p) == derivative_x(p.transpose()).transpose() para todo plano.
    """
    return derivative_x(plane.transpose(), coeffs, boundary, hilos).transpose()
