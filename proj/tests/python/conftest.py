import os
import sys

import pytest

# the CMake-built extension lands in the build tree; pip installs expose the
# abchoose package instead
_module_dir = os.environ.get("ABCHOOSE_MODULE_DIR")
if _module_dir:
    sys.path.insert(0, _module_dir)


@pytest.fixture(scope="session")
def ab():
    if _module_dir:
        return pytest.importorskip("_abchoose")
    return pytest.importorskip("abchoose")


@pytest.fixture(scope="session")
def cli_path():
    path = os.environ.get("ABCHOOSE_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("ABCHOOSE_CLI not set")
    return path
