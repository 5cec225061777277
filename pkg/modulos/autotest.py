#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AUTOTEST
Verifica los valores tabulados del método sobre la instalación actual.

Uso como aplicación:
  python app.py autotest      (código 0 si todo coincide, 3 si algún chequeo falla)
"""

import logging
import math

import numpy as np

from modulos.coeficientes import generate_coefficients
from modulos.gradiente import fractional_gradient
from modulos.imagen import ImagePlane
from modulos.mapa_salida import VisibilityConfig, normalize_map
from modulos.procesamiento import PipelineConfig, process_image
from modulos.sinteticas import generate_test_image
from utils.errores import ContractError

logger = logging.getLogger("fracgrad.autotest")

TOLERANCIA = 1e-12


def _coeficientes():
    valores = generate_coefficients(0.7, 4).values
    esperado = (1.0, -0.7, -0.105, -0.0455)
    return all(math.isclose(v, e, rel_tol=0, abs_tol=TOLERANCIA) for v, e in zip(valores, esperado))


def _respuesta_impulso():
    arr = np.zeros((5, 5))
    arr[2, 2] = 1.0
    campo = fractional_gradient(ImagePlane(arr), 0.5, 4, "zero")
    mag = campo.magnitude.samples
    return math.isclose(mag[2, 2], math.sqrt(2.0), abs_tol=TOLERANCIA) and \
        math.isclose(mag[2, 3], 0.5, abs_tol=TOLERANCIA)


def _valor_normalizado():
    plano = ImagePlane(np.array([[0.25, 1.0]]))
    salida = normalize_map([plano], VisibilityConfig(alpha=0.4))
    return salida.channels[0].samples.tolist() == [[146.0, 255.0]]


def _escalon_nu_1():
    imagen = generate_test_image("step", 16, 16)
    salida = process_image(imagen, PipelineConfig(order=1.0), hilos=1)["imagen"]
    fila = salida.channels[0].samples[8]
    return int(np.argmax(fila)) == 8 and np.count_nonzero(fila == fila.max()) == 1


CHEQUEOS = [
    ("Coeficientes ν=0.7, K=4", _coeficientes),
    ("Respuesta al impulso ν=0.5", _respuesta_impulso),
    ("Normalización 0.25^0.4 → 146", _valor_normalizado),
    ("Escalón con ν=1: máximo en la columna del escalón", _escalon_nu_1),
]


def ejecutar_chequeos():
    """
    Corre todos los chequeos.

    Returns:
        list de dicts {'nombre', 'ok', 'detalle'}
    """
    resultados = []
    for nombre, chequeo in CHEQUEOS:
        try:
            ok, detalle = bool(chequeo()), ""
        except Exception as e:
            ok, detalle = False, f"{type(e).__name__}: {e}"
        resultados.append({"nombre": nombre, "ok": ok, "detalle": detalle})
    return resultados


def main(argv=None):
    resultados = ejecutar_chequeos()
    for r in resultados:
        marca = "✅" if r["ok"] else "❌"
        print(f"{marca} {r['nombre']}" + (f" ({r['detalle']})" if r["detalle"] else ""))
    fallidos = [r for r in resultados if not r["ok"]]
    if fallidos:
        print(f"❌ {len(fallidos)} de {len(resultados)} chequeos fallaron")
        return ContractError.exit_code
    print(f"✅ {len(resultados)} chequeos correctos")
    return 0
