# -*- coding: utf-8 -*-
from io import BytesIO

import numpy as np
import pytest
from PIL import Image

from modulos.imagen import MultiChannelImage
from utils.data_loader import decode_image, encode_image, load_image, save_image
from utils.errores import ContractError, DecodeError, EncodeError, ImageIOError


def _png(arr, modo=None):
    buffer = BytesIO()
    Image.fromarray(np.asarray(arr, dtype=np.uint8), modo).save(buffer, format="PNG")
    return buffer.getvalue()


def test_png_rgb_por_canales():
    datos = _png([[[10, 20, 30], [40, 50, 60]]])
    imagen = decode_image(datos)
    assert imagen.channel_semantics == "rgb"
    assert [c.samples.tolist() for c in imagen.channels] == [[[10.0, 40.0]], [[20.0, 50.0]], [[30.0, 60.0]]]


def test_png_rgba_conserva_alfa(rng):
    arr = rng.integers(0, 256, size=(4, 5, 4))
    imagen = decode_image(_png(arr))
    assert imagen.channel_semantics == "rgba"
    np.testing.assert_array_equal(imagen.as_array(), arr)
    assert decode_image(encode_image(imagen)) == imagen


def test_png_con_paleta_se_expande():
    img = Image.new("P", (2, 1))
    img.putpalette([0, 0, 0, 255, 0, 0] + [0] * 762)
    img.putpixel((1, 0), 1)
    buffer = BytesIO()
    img.save(buffer, format="PNG")
    imagen = decode_image(buffer.getvalue())
    assert imagen.channel_semantics == "rgb"
    assert imagen.channels[0].samples.tolist() == [[0.0, 255.0]]


def test_pgm_binario():
    imagen = decode_image(b"P5\n# comentario\n2 1\n255\n" + bytes([10, 200]))
    assert imagen.channel_semantics == "grayscale"
    assert imagen.channels[0].samples.tolist() == [[10.0, 200.0]]


def test_ppm_binario():
    imagen = decode_image(b"P6 1 1 255 " + bytes([1, 2, 3]))
    assert imagen.channel_semantics == "rgb"
    assert imagen.as_array().ravel().tolist() == [1.0, 2.0, 3.0]


@pytest.mark.parametrize("datos", [
    b"",
    b"P5\n2 2\n255\n" + bytes([1, 2, 3]),
    b"P5\n2 1\n65535\n" + bytes(4),
    b"P5\n0 3\n255\n",
    b"P2\n1 1\n255\n7\n",
    b"no es una imagen",
])
def test_archivos_invalidos(datos):
    with pytest.raises(DecodeError):
        decode_image(datos)


def test_png_truncado():
    datos = _png(np.zeros((8, 8)))
    with pytest.raises(DecodeError):
        decode_image(datos[:len(datos) // 2])


def test_codificar_exige_enteros_en_rango():
    with pytest.raises(ContractError):
        encode_image(MultiChannelImage.from_array(np.array([[1.5]])))
    with pytest.raises(ContractError):
        encode_image(MultiChannelImage.from_array(np.array([[256.0]])))


def test_formato_incompatible(imagen_rgb):
    with pytest.raises(EncodeError):
        encode_image(imagen_rgb, "pgm")
    with pytest.raises(EncodeError):
        encode_image(imagen_rgb, "gif")


def test_archivos_por_extension(tmp_path, imagen_rgb, escalon):
    ruta_ppm = save_image(imagen_rgb, tmp_path / "color.ppm")
    assert ruta_ppm.read_bytes()[:2] == b"P6"
    assert load_image(ruta_ppm) == imagen_rgb

    ruta_pnm = save_image(escalon, tmp_path / "escalon.pnm")
    assert ruta_pnm.read_bytes()[:2] == b"P5"
    assert load_image(ruta_pnm) == escalon


def test_archivo_inexistente(tmp_path):
    with pytest.raises(ImageIOError) as info:
        load_image(tmp_path / "no_existe.png")
    assert info.value.exit_code == 2
