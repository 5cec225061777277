# -*- coding: utf-8 -*-
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies
from hypothesis.extra.numpy import arrays

from modulos.gradiente import MagnitudeConvention, fractional_gradient, magnitud
from modulos.imagen import ImagePlane, MultiChannelImage
from modulos.procesamiento import PipelineConfig, process_image
from utils.errores import DomainError
from utils.funciones_comunes import redondear

ordenes = strategies.floats(min_value=0.0, max_value=1.0, allow_nan=False)
politicas = strategies.sampled_from(["replicate", "zero", "skip"])
convenciones = strategies.sampled_from(["euclidean", "absolute_sum"])
planos = arrays(np.float64, strategies.tuples(strategies.integers(1, 40), strategies.integers(1, 40)),
                elements=strategies.integers(0, 255).map(float))


def _impulso(alto=5, ancho=5):
    muestras = np.zeros((alto, ancho))
    muestras[2, 2] = 1.0
    return ImagePlane(muestras)


def test_respuesta_al_impulso_euclidea():
    campo = fractional_gradient(_impulso(), 0.5, 4, "zero")
    mag = campo.magnitude.samples
    assert mag[2, 2] == math.sqrt(2.0)
    assert mag[2, 3] == 0.5
    assert mag[3, 2] == 0.5
    assert mag[2, 4] == 0.125
    assert mag[1, 2] == 0.0


def test_respuesta_al_impulso_suma_absoluta():
    campo = fractional_gradient(_impulso(), 0.5, 4, "zero", "abs-sum")
    assert campo.convention is MagnitudeConvention.ABSOLUTE_SUM
    assert campo.magnitude.samples[2, 2] == 2.0
    assert campo.magnitude.samples[2, 3] == 0.5


@settings(max_examples=100, deadline=None)
@given(planos, ordenes, politicas, convenciones)
def test_transponer_intercambia_componentes(muestras, nu, politica, convencion):
    campo = fractional_gradient(ImagePlane(muestras), nu, 4, politica, convencion)
    traspuesto = fractional_gradient(ImagePlane(muestras.T), nu, 4, politica, convencion)
    assert np.array_equal(traspuesto.gx.samples, campo.gy.samples.T)
    assert np.array_equal(traspuesto.gy.samples, campo.gx.samples.T)
    assert np.array_equal(traspuesto.magnitude.samples, campo.magnitude.samples.T)
    if politica == "skip":
        assert np.array_equal(traspuesto.magnitude.valid, campo.magnitude.valid.T)


@settings(max_examples=100, deadline=None)
@given(planos, ordenes, politicas)
def test_cota_entre_convenciones(muestras, nu, politica):
    plano = ImagePlane(muestras)
    euclidea = fractional_gradient(plano, nu, 4, politica, "euclidean").magnitude.samples
    suma = fractional_gradient(plano, nu, 4, politica, "absolute_sum").magnitude.samples
    assert np.all(euclidea <= suma * (1 + 1e-12))
    assert np.all(suma <= math.sqrt(2.0) * euclidea * (1 + 1e-12))


@settings(max_examples=100, deadline=None)
@given(planos, ordenes, politicas, convenciones)
def test_negar_la_entrada_conserva_la_magnitud(muestras, nu, politica, convencion):
    campo = fractional_gradient(ImagePlane(muestras), nu, 4, politica, convencion)
    negado = fractional_gradient(ImagePlane(-muestras), nu, 4, politica, convencion)
    assert np.array_equal(negado.gx.samples, -campo.gx.samples)
    assert np.array_equal(negado.gy.samples, -campo.gy.samples)
    assert np.array_equal(negado.magnitude.samples, campo.magnitude.samples)


@settings(max_examples=100, deadline=None)
@given(planos, ordenes, politicas, convenciones, strategies.floats(0.01, 100.0))
def test_escala_positiva(muestras, nu, politica, convencion, escala):
    campo = fractional_gradient(ImagePlane(muestras), nu, 4, politica, convencion)
    escalado = fractional_gradient(ImagePlane(escala * muestras), nu, 4, politica, convencion)
    np.testing.assert_allclose(escalado.magnitude.samples, escala * campo.magnitude.samples,
                               rtol=1e-12, atol=1e-9)


@pytest.mark.parametrize("escala", [0.5, 2.0, 8.0])
def test_escala_potencia_de_dos_exacta(plano_aleatorio, escala):
    muestras = plano_aleatorio(24, 24)
    campo = fractional_gradient(ImagePlane(muestras), 0.7)
    escalado = fractional_gradient(ImagePlane(escala * muestras), 0.7)
    assert np.array_equal(escalado.magnitude.samples, escala * campo.magnitude.samples)


def test_orden_uno_es_el_gradiente_clasico(plano_aleatorio):
    for _ in range(50):
        muestras = plano_aleatorio(64, 64)
        gx = np.diff(muestras, axis=1, prepend=muestras[:, :1])
        gy = np.diff(muestras, axis=0, prepend=muestras[:1, :])
        esperado = np.sqrt(gx * gx + gy * gy)
        obtenido = fractional_gradient(ImagePlane(muestras), 1.0).magnitude.samples
        assert np.array_equal(obtenido, esperado)


@pytest.mark.parametrize("alfa", [1.0, 0.7, 0.4])
def test_orden_uno_mapa_completo_contra_diferencias(plano_aleatorio, alfa):
    for _ in range(10):
        muestras = plano_aleatorio(48, 40)
        gx = np.diff(muestras, axis=1, prepend=muestras[:, :1])
        gy = np.diff(muestras, axis=0, prepend=muestras[:1, :])
        mag = np.sqrt(gx * gx + gy * gy)
        esperado = redondear(255.0 * np.power(mag / mag.max(), alfa))

        imagen = MultiChannelImage((ImagePlane(muestras),), "grayscale")
        resultado = process_image(imagen, PipelineConfig(order=1.0, alpha=alfa), hilos=2)
        assert resultado["maximos"][0] == mag.max()
        assert np.array_equal(resultado["imagen"].channels[0].samples, esperado)


def test_skip_combina_las_mascaras(plano_aleatorio):
    campo = fractional_gradient(ImagePlane(plano_aleatorio(10, 12)), 0.7, 4, "skip")
    mag = campo.magnitude
    assert mag.flagged_count() == 10 * 12 - 7 * 9
    assert not mag.samples[~mag.valid].any()
    assert mag.valid[3:, 3:].all()


def test_sin_mascara_fuera_de_skip(plano_aleatorio):
    campo = fractional_gradient(ImagePlane(plano_aleatorio(4, 4)), 0.7)
    assert campo.magnitude.valid is None
    assert campo.magnitude.flagged_count() == 0


def test_magnitud_no_negativa(plano_aleatorio):
    for convencion in ("euclidean", "absolute_sum"):
        campo = fractional_gradient(ImagePlane(plano_aleatorio(16, 16)), 0.3, 4, "replicate", convencion)
        assert campo.magnitude.samples.min() >= 0.0


@pytest.mark.parametrize("texto, esperado", [
    ("euclidean", MagnitudeConvention.EUCLIDEAN),
    ("abs-sum", MagnitudeConvention.ABSOLUTE_SUM),
    ("absolute_sum", MagnitudeConvention.ABSOLUTE_SUM),
    (MagnitudeConvention.EUCLIDEAN, MagnitudeConvention.EUCLIDEAN),
])
def test_convenciones(texto, esperado):
    assert MagnitudeConvention.parse(texto) is esperado


def test_convencion_desconocida():
    with pytest.raises(DomainError):
        magnitud(np.zeros(2), np.zeros(2), "chebyshev")
