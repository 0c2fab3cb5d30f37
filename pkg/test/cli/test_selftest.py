# ========= Copyright 2024 @ Perioda Authors. All Rights Reserved. =========
# Licensed under the Apache License, Version 2.0 (the “License”);
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an “AS IS” BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ========= Copyright 2024 @ Perioda Authors. All Rights Reserved. =========
import pytest

from perioda.cli import main
from perioda.cli.selftest import CHECKS, run_checks
from perioda.types import ExitCode


@pytest.mark.numeric
def test_every_check_passes():
    results = run_checks(seed=7)
    assert [r["name"] for r in results] == [name for name, _ in CHECKS]
    failed = [r["name"] for r in results if not r["passed"]]
    assert failed == []


@pytest.mark.numeric
def test_selftest_command(tmp_path):
    path = tmp_path / "selftest.json"
    code = main(["selftest", "--seed", "11", "--output", str(path)])
    assert code == ExitCode.SUCCESS
    assert '"status":"verified"' in path.read_text(encoding="utf-8")
