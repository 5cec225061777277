# -*- coding: utf-8 -*-
import logging

import numpy as np
import pytest

from utils.configuracion import (
    ENV_HILOS, ParserArgumentos, configurar_logging, hilos_por_defecto, resolver_hilos,
)
from utils.errores import ContractError, DomainError, FracgradError, ImageIOError, UsageError
from utils.funciones_comunes import (
    ejecutar_por_bloques, formato_manifiesto, formato_real, redondear, repartir_en_bloques,
    validar_muestras_8bit,
)


def test_redondeo_mitad_hacia_arriba():
    assert redondear([146.46, 127.5, 0.5, 254.5, 0.49999999999999994]).tolist() == [146.0, 128.0, 1.0, 255.0, 0.0]
    assert redondear([127.9, 0.5], "floor").tolist() == [127.0, 0.0]
    with pytest.raises(DomainError):
        redondear(1.0, "even")


def test_muestras_8bit():
    validar_muestras_8bit(np.array([0.0, 255.0]))
    for malo in ([1.5], [-1.0], [256.0], [np.nan]):
        with pytest.raises(ContractError):
            validar_muestras_8bit(np.array(malo))


def test_reparto_en_bloques():
    assert repartir_en_bloques(10, 3) == [(0, 4), (4, 7), (7, 10)]
    assert repartir_en_bloques(2, 8) == [(0, 1), (1, 2)]
    assert repartir_en_bloques(5, 1) == [(0, 5)]


def test_ejecucion_por_bloques_en_orden():
    assert ejecutar_por_bloques(lambda a, b: (a, b), 9, 4) == repartir_en_bloques(9, 4)


def test_formato_del_manifiesto():
    assert formato_real(0.7) == "0.7"
    assert formato_real(None) == "-"
    assert formato_manifiesto([("nu", "0.5"), ("terms", 4)]) == "nu: 0.5\nterms: 4\n"


@pytest.mark.parametrize("valor, esperado", [("3", 3), (" 8 ", 8)])
def test_hilos_validos(valor, esperado):
    assert resolver_hilos({ENV_HILOS: valor}) == esperado


@pytest.mark.parametrize("valor", ["0", "-2", "muchos", "1.5"])
def test_hilos_invalidos_avisan(valor, caplog):
    with caplog.at_level(logging.WARNING, logger="fracgrad"):
        assert resolver_hilos({ENV_HILOS: valor}) == hilos_por_defecto()
    assert ENV_HILOS in caplog.text


def test_hilos_por_defecto():
    assert resolver_hilos({}) == hilos_por_defecto() >= 1


def test_nivel_de_logging(monkeypatch):
    monkeypatch.setenv("FRACGRAD_LOG_LEVEL", "debug")
    assert configurar_logging().level == logging.DEBUG
    assert configurar_logging("INFO").level == logging.INFO
    assert len(configurar_logging().handlers) == 1


def test_codigos_de_salida():
    assert UsageError.exit_code == FracgradError.exit_code == 1
    assert ImageIOError.exit_code == 2
    assert DomainError.exit_code == ContractError.exit_code == 3
    assert issubclass(DomainError, ValueError)


def test_parser_informa_error_de_uso():
    parser = ParserArgumentos(prog="prueba")
    parser.add_argument("--n", type=int, required=True)
    with pytest.raises(UsageError):
        parser.parse_args(["--n", "x"])
