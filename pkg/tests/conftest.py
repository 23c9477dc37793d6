# -*- coding: utf-8 -*-
import shutil
import tempfile

import pytest

from lensfloer import simple_knot, t_l, t_r


@pytest.fixture
def tempdir():
    newpath = tempfile.mkdtemp()
    yield newpath
    shutil.rmtree(newpath)


@pytest.fixture
def trefoil():
    return t_l(1, 0)


@pytest.fixture
def mirrored_trefoil():
    return t_r(1, 0)


@pytest.fixture
def simple_7_3_2():
    return simple_knot(7, 3, 2)
