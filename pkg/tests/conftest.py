# -*- coding: utf-8 -*-
"""Fixtures compartidas de la suite."""

import logging

import numpy as np
import pytest

from modulos.imagen import MultiChannelImage
from modulos.sinteticas import generate_test_image


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def plano_aleatorio(rng):
    """Fábrica de arrays (alto, ancho) con códigos enteros en [0, 255] como float64."""
    def fabricar(alto, ancho):
        return rng.integers(0, 256, size=(alto, ancho)).astype(np.float64)
    return fabricar


@pytest.fixture
def imagen_rgb(rng):
    """Imagen RGB 12×10 con códigos enteros aleatorios."""
    return MultiChannelImage.from_array(rng.integers(0, 256, size=(10, 12, 3)).astype(np.float64))


@pytest.fixture
def escalon():
    """Escalón 32×16: columnas 0-15 valen 64, columnas 16-31 valen 192."""
    return generate_test_image("step", 32, 16)


@pytest.fixture(autouse=True)
def logger_limpio():
    """Quita los handlers que configura la CLI (apuntan al stderr capturado de cada test)."""
    yield
    logger = logging.getLogger("fracgrad")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
