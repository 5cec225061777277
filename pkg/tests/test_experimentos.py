# -*- coding: utf-8 -*-
import numpy as np
import pandas as pd
import pytest

from modulos.experimentos import (
    AJUSTE_CUMULO, background_mask, detect_spots, escribir_resultados, experimento_comparativa,
    experimento_cumulo, experimento_desenfoque, experimento_satelites, main, spot_contrast_table,
)
from modulos.mapa_salida import adjust_brightness_contrast, linear_stretch
from modulos.sinteticas import cluster_spots, generate_test_image, planted_spots
from utils.errores import DomainError


@pytest.fixture(scope="module")
def satelites():
    return experimento_satelites(hilos=1)


def test_mascara_de_fondo():
    mascara = background_mask((20, 20), [{"x": 0, "y": 10}, {"x": 15, "y": 15}], radio=2)
    assert not mascara[10, 0:3].any()
    assert mascara[10, 3]
    assert not mascara[13:18, 13:18].any()
    assert mascara[12, 12]
    assert mascara.sum() == 400 - 3 * 5 - 5 * 5


def test_tabla_de_contraste():
    arr = np.full((15, 15), 10.0)
    arr[7, 7] = 90.0
    tabla = spot_contrast_table(arr, [{"x": 7, "y": 7, "amplitud": 80.0}], radio=3)
    fila = tabla.iloc[0]
    assert fila["pico"] == 90.0
    assert fila["mediana_fondo"] == 10.0
    assert fila["desvio_robusto"] == 0.0
    assert fila["contraste"] == 80.0
    assert bool(detect_spots(arr, [{"x": 7, "y": 7, "amplitud": 80.0}], radio=3).iloc[0]["detectada"])


def test_fraccionario_revela_todas_las_fuentes(satelites):
    tabla = satelites["tabla"]
    for nu in ("nu_0.7", "nu_0.6", "nu_0.4"):
        grupo = tabla[tabla["metodo"] == nu]
        assert len(grupo) == 5
        assert (grupo["contraste"] > 0).all()
        assert grupo["detectada"].all()


def test_estirado_lineal_pierde_la_mas_debil(satelites):
    lineal = satelites["tabla"][satelites["tabla"]["metodo"] == "lineal"]
    debil = lineal[lineal["amplitud"] == lineal["amplitud"].min()]
    assert not debil["detectada"].any()


def test_la_mas_debil_no_se_detecta_en_la_entrada():
    original = generate_test_image("gaussian_spots")
    fuentes = planted_spots(64, 64, 0)
    directa = detect_spots(original, fuentes)["detectada"].tolist()
    estirada = detect_spots(linear_stretch(original), fuentes)["detectada"].tolist()
    assert directa[-1] is False
    assert estirada[-1] is False


def test_desenfoque_localiza_el_borde():
    tabla = experimento_desenfoque(hilos=1)["tabla"]
    assert len(tabla) == 3
    assert (tabla["desplazamiento"].abs() <= 2).all()
    assert tabla.loc[tabla["nu"] == 1.0, "desplazamiento"].iloc[0] == 0


def test_comparativa():
    resultado = experimento_comparativa(hilos=1)
    assert list(resultado["mapas"]) == ["original", "nu_1", "nu_0.7", "nu_0.3"]
    medias = resultado["tabla"].set_index("nu")["media"]
    assert medias[0.3] > medias[1.0]


def test_escribir_resultados(tmp_path, satelites):
    rutas = escribir_resultados(satelites, tmp_path / "salida", "satelites", "VISIBILIDAD")
    assert len(rutas["mapas"]) == 5
    assert all(r.exists() for r in rutas["mapas"])
    assert rutas["pdf"].read_bytes()[:4] == b"%PDF"
    desde_csv = pd.read_csv(rutas["csv"])
    assert list(desde_csv.columns) == list(satelites["tabla"].columns)
    desde_excel = pd.read_excel(rutas["xlsx"], engine="openpyxl")
    assert len(desde_excel) == len(satelites["tabla"])


def test_aplicacion(tmp_path, capsys):
    assert main(["desenfoque", str(tmp_path)]) == 0
    assert (tmp_path / "desenfoque.pdf").exists()
    assert "columna_maximo" in capsys.readouterr().out


def test_sin_fondo_es_error_de_dominio():
    with pytest.raises(DomainError):
        spot_contrast_table(np.zeros((5, 5)), [{"x": 2, "y": 2, "amplitud": 1.0}], radio=3)


def test_cumulo_con_ajuste():
    resultado = experimento_cumulo(hilos=1)
    mapas = resultado["mapas"]
    assert list(mapas) == ["original", "lineal", "nu_0.7", "nu_0.7_ajustado"]
    assert mapas["nu_0.7_ajustado"] == adjust_brightness_contrast(mapas["nu_0.7"], AJUSTE_CUMULO)
    assert mapas["nu_0.7_ajustado"] != mapas["nu_0.7"]

    tabla = resultado["tabla"].set_index("metodo")
    assert list(tabla.index) == ["lineal", "nu_0.7", "nu_0.7_ajustado"]
    assert (tabla["fuentes"] == len(cluster_spots(64, 64, 0))).all()
    assert tabla["detectadas"].between(0, tabla["fuentes"]).all()
    assert tabla.loc["nu_0.7", "contraste_medio"] > 0


def test_aplicacion_cumulo(tmp_path):
    assert main(["cumulo", str(tmp_path), "--seed", "3"]) == 0
    assert (tmp_path / "cumulo.pdf").read_bytes()[:4] == b"%PDF"
    assert len(pd.read_csv(tmp_path / "cumulo.csv")) == 3
